// Copyright (c) 2026, the bcbench authors
// See LICENSE.txt for license details

#ifndef BCBENCH_GRAPH_HPP
#define BCBENCH_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace bcbench {

using VertexId = std::uint32_t;

/// Directed graph as parallel endpoint arrays: arc i is sources[i] -> targets[i].
/// Self-loops and duplicate arcs are representable; validate() reports them.
struct EdgeListGraph {
  VertexId n = 0;
  std::vector<VertexId> sources;
  std::vector<VertexId> targets;

  std::size_t num_arcs() const { return sources.size(); }
};

/// Compressed sparse row form. offsets has n+1 entries with offsets[0] == 0 and
/// offsets[n] == m; out-neighbors of u are targets[offsets[u] .. offsets[u+1]).
struct CsrGraph {
  VertexId n = 0;
  std::vector<std::size_t> offsets;
  std::vector<VertexId> targets;

  std::size_t num_arcs() const { return targets.size(); }
  std::size_t out_degree(VertexId u) const { return offsets[u + 1] - offsets[u]; }
  std::span<const VertexId> out_neighbors(VertexId u) const {
    return {targets.data() + offsets[u], targets.data() + offsets[u + 1]};
  }
};

struct DegreeStats {
  std::vector<std::size_t> out_degree;
  std::size_t max = 0;
  double mean = 0.0;
  double variance = 0.0;  // population variance of out-degree
};

enum class FindingKind { SelfLoop, DuplicateArc, IsolatedVertex };

struct Finding {
  FindingKind kind;
  VertexId u = 0;
  VertexId v = 0;  // meaningful for DuplicateArc only
};

std::string to_string(const Finding& f);

/// Parses the edge-list text format: optional '#' comment lines, a header
/// line "n m", then exactly m lines "u v" with 0-based ids. Throws
/// std::runtime_error on malformed input, ids out of range, or an arc count
/// that disagrees with the header.
EdgeListGraph load_edge_list(std::istream& in);
EdgeListGraph load_edge_list_file(const std::string& path);

/// Writes the same format. Extra comment lines, if any, go before the header.
void write_edge_list(std::ostream& out, const EdgeListGraph& g,
                     std::span<const std::string> comments = {});

/// Builds CSR with each neighbor list sorted by target id, so traversal order
/// is deterministic. The arc multiset is preserved exactly (duplicates kept).
CsrGraph build_csr(const EdgeListGraph& g);

/// Reports self-loops, duplicate arcs, and isolated vertices (no in- or
/// out-arcs). An empty result means the graph is clean.
std::vector<Finding> validate(const EdgeListGraph& g);

DegreeStats degree_stats(const CsrGraph& g);

}  // namespace bcbench

#endif  // BCBENCH_GRAPH_HPP
