// Copyright (c) 2026, the bcbench authors
// See LICENSE.txt for license details

#ifndef BCBENCH_BRANDES_HPP
#define BCBENCH_BRANDES_HPP

#include <cstdint>
#include <vector>

#include "bcbench/graph.hpp"

namespace bcbench {

/// Per-source state for one Brandes pass. After the forward phase, dist holds
/// BFS levels (-1 unreachable), sigma[v] the number of shortest source->v
/// paths, and visit_order the reachable vertices in discovery order
/// (nondecreasing distance). delta is filled by the backward phase.
struct SourceWorkspace {
  std::vector<std::int32_t> dist;
  std::vector<std::uint64_t> sigma;
  std::vector<double> delta;
  std::vector<VertexId> visit_order;

  void reset(VertexId n);
};

/// Unnormalized centrality, endpoints excluded, over ordered vertex pairs.
using BcScores = std::vector<double>;

/// BFS forward phase: levels and shortest-path counts from one source.
/// Throws std::overflow_error if a path count would wrap 64 bits.
void bfs_forward(const CsrGraph& g, VertexId source, SourceWorkspace& ws);

/// Backward phase of Brandes' recurrence. Walks visit_order in reverse; the
/// successor test dist[w] == dist[v] + 1 over out-arcs replaces an explicit
/// predecessor structure (equivalent for unweighted BFS).
void accumulate_dependencies(const CsrGraph& g, SourceWorkspace& ws);

/// Single-threaded Brandes over all sources. This is the correctness baseline
/// for the parallel strategies: all accumulation is done in double.
BcScores bc_sequential(const CsrGraph& g);

/// Definition-based oracle: per ordered pair (s,t) adds
/// sigma_s(v) * sigma_v(t) / sigma_s(t) for interior vertices v, using n
/// independent BFS path counts. Enforces n <= 64; intended for verifying
/// bc_sequential, not for production use.
BcScores bc_bruteforce(const CsrGraph& g);

inline constexpr VertexId kBruteforceMaxN = 64;

}  // namespace bcbench

#endif  // BCBENCH_BRANDES_HPP
