// Copyright (c) 2026, the bcbench authors
// See LICENSE.txt for license details

#ifndef BCBENCH_GENERATOR_HPP
#define BCBENCH_GENERATOR_HPP

#include <cstdint>

#include "bcbench/graph.hpp"

namespace bcbench {

/// RNG algorithm behind the generator, recorded in generated files and
/// benchmark output so runs can be reproduced.
inline constexpr const char* kGeneratorRngId = "mt19937_64";

struct BaParams {
  VertexId nodes = 0;
  VertexId beta = 1;  // undirected edges attached per new node
  std::uint64_t seed = 0;
};

/// Grows a preferential-attachment graph: beta isolated seed nodes, then each
/// new node attaches beta undirected edges to beta distinct existing nodes
/// drawn degree-proportionally from a repeated-endpoints pool (the first new
/// node connects to all seed nodes). Every undirected edge is emitted as two
/// arcs, so the result has exactly 2*beta*(nodes-beta) arcs, is symmetric,
/// and has no self-loops. Deterministic for a fixed seed.
EdgeListGraph generate_ba_directed(const BaParams& p);

/// Arcs per node, m/n. Throws std::invalid_argument when n == 0.
double edge_density(const EdgeListGraph& g);

}  // namespace bcbench

#endif  // BCBENCH_GENERATOR_HPP
