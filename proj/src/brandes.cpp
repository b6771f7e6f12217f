// Copyright (c) 2026, the bcbench authors
// See LICENSE.txt for license details

#include "bcbench/brandes.hpp"

#include <limits>
#include <stdexcept>

namespace bcbench {

void SourceWorkspace::reset(VertexId n) {
  dist.assign(n, -1);
  sigma.assign(n, 0);
  delta.assign(n, 0.0);
  visit_order.clear();
  visit_order.reserve(n);
}

void bfs_forward(const CsrGraph& g, VertexId source, SourceWorkspace& ws) {
  if (source >= g.n) throw std::out_of_range("source out of range");
  ws.reset(g.n);
  ws.dist[source] = 0;
  ws.sigma[source] = 1;
  ws.visit_order.push_back(source);

  // visit_order doubles as the FIFO queue; head chases the growing tail.
  for (std::size_t head = 0; head < ws.visit_order.size(); ++head) {
    const VertexId v = ws.visit_order[head];
    const std::int32_t next = ws.dist[v] + 1;
    for (VertexId w : g.out_neighbors(v)) {
      if (ws.dist[w] < 0) {
        ws.dist[w] = next;
        ws.visit_order.push_back(w);
      }
      if (ws.dist[w] == next) {
        if (ws.sigma[w] > std::numeric_limits<std::uint64_t>::max() - ws.sigma[v])
          throw std::overflow_error("shortest-path count overflows 64 bits");
        ws.sigma[w] += ws.sigma[v];
      }
    }
  }
}

void accumulate_dependencies(const CsrGraph& g, SourceWorkspace& ws) {
  for (auto it = ws.visit_order.rbegin(); it != ws.visit_order.rend(); ++it) {
    const VertexId v = *it;
    const std::int32_t next = ws.dist[v] + 1;
    double acc = 0.0;
    for (VertexId w : g.out_neighbors(v))
      if (ws.dist[w] == next)
        acc += static_cast<double>(ws.sigma[v]) / static_cast<double>(ws.sigma[w]) *
               (1.0 + ws.delta[w]);
    ws.delta[v] = acc;
  }
}

BcScores bc_sequential(const CsrGraph& g) {
  BcScores bc(g.n, 0.0);
  SourceWorkspace ws;
  for (VertexId s = 0; s < g.n; ++s) {
    bfs_forward(g, s, ws);
    accumulate_dependencies(g, ws);
    for (VertexId v : ws.visit_order)
      if (v != s) bc[v] += ws.delta[v];
  }
  return bc;
}

BcScores bc_bruteforce(const CsrGraph& g) {
  const VertexId n = g.n;
  if (n > kBruteforceMaxN)
    throw std::invalid_argument("bc_bruteforce limited to n <= 64");

  // Self-contained BFS per source; deliberately shares no code with
  // bfs_forward so the two routes stay independent.
  std::vector<std::vector<std::int32_t>> dist(n, std::vector<std::int32_t>(n, -1));
  std::vector<std::vector<std::uint64_t>> paths(n, std::vector<std::uint64_t>(n, 0));
  std::vector<VertexId> queue;
  for (VertexId s = 0; s < n; ++s) {
    queue.assign(1, s);
    dist[s][s] = 0;
    paths[s][s] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId v = queue[head];
      for (VertexId w : g.out_neighbors(v)) {
        if (dist[s][w] < 0) {
          dist[s][w] = dist[s][v] + 1;
          queue.push_back(w);
        }
        if (dist[s][w] == dist[s][v] + 1) {
          if (paths[s][w] > std::numeric_limits<std::uint64_t>::max() - paths[s][v])
            throw std::overflow_error("shortest-path count overflows 64 bits");
          paths[s][w] += paths[s][v];
        }
      }
    }
  }

  BcScores bc(n, 0.0);
  for (VertexId v = 0; v < n; ++v)
    for (VertexId s = 0; s < n; ++s) {
      if (s == v || dist[s][v] < 0) continue;
      for (VertexId t = 0; t < n; ++t) {
        if (t == v || t == s || dist[v][t] < 0 || dist[s][t] < 0) continue;
        if (dist[s][v] + dist[v][t] != dist[s][t]) continue;
        bc[v] += static_cast<double>(paths[s][v]) * static_cast<double>(paths[v][t]) /
                 static_cast<double>(paths[s][t]);
      }
    }
  return bc;
}

}  // namespace bcbench
