// Copyright (c) 2026, the bcbench authors
// See LICENSE.txt for license details

#include "bcbench/generator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace bcbench {

namespace {

// Unbiased draw in [0, bound) via rejection; avoids std::uniform_int_distribution,
// whose output stream is not pinned across standard library implementations.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

EdgeListGraph generate_ba_directed(const BaParams& p) {
  if (p.beta < 1 || p.beta >= p.nodes)
    throw std::invalid_argument("ba params: need 1 <= beta < nodes");

  const VertexId n = p.nodes;
  const VertexId beta = p.beta;
  const std::uint64_t undirected = static_cast<std::uint64_t>(beta) * (n - beta);

  EdgeListGraph g;
  g.n = n;
  g.sources.reserve(2 * undirected);
  g.targets.reserve(2 * undirected);

  std::mt19937_64 rng(p.seed);

  // Each endpoint of every undirected edge lands in the pool once, so a
  // uniform pool draw is a degree-proportional vertex draw.
  std::vector<VertexId> pool;
  pool.reserve(2 * undirected);

  std::vector<VertexId> attach(beta);
  std::iota(attach.begin(), attach.end(), 0);  // first new node takes all seed nodes

  for (VertexId v = beta; v < n; ++v) {
    for (VertexId t : attach) {
      g.sources.push_back(v);
      g.targets.push_back(t);
      g.sources.push_back(t);
      g.targets.push_back(v);
    }
    pool.insert(pool.end(), attach.begin(), attach.end());
    pool.insert(pool.end(), beta, v);

    if (v + 1 < n) {
      attach.clear();
      while (attach.size() < beta) {
        VertexId cand = pool[draw_below(rng, pool.size())];
        if (std::find(attach.begin(), attach.end(), cand) == attach.end())
          attach.push_back(cand);
      }
    }
  }
  return g;
}

double edge_density(const EdgeListGraph& g) {
  if (g.n == 0) throw std::invalid_argument("edge density undefined for n = 0");
  return static_cast<double>(g.num_arcs()) / static_cast<double>(g.n);
}

}  // namespace bcbench
