// Copyright (c) 2026, the bcbench authors
// See LICENSE.txt for license details

#include "bcbench/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace bcbench {

namespace {

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

// Parses exactly two unsigned decimal fields from a line.
bool parse_pair(const std::string& line, std::uint64_t& a, std::uint64_t& b) {
  std::istringstream ss(line);
  if (!(ss >> a >> b)) return false;
  std::string rest;
  if (ss >> rest) return false;  // trailing tokens
  return true;
}

}  // namespace

std::string to_string(const Finding& f) {
  switch (f.kind) {
    case FindingKind::SelfLoop:
      return "self-loop at " + std::to_string(f.u);
    case FindingKind::DuplicateArc:
      return "duplicate arc " + std::to_string(f.u) + " -> " + std::to_string(f.v);
    case FindingKind::IsolatedVertex:
      return "isolated vertex " + std::to_string(f.u);
  }
  return "unknown finding";
}

EdgeListGraph load_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;

  // Comment lines are allowed before the header only.
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    if (is_blank(line)) continue;
    break;
  }
  if (line.empty() && in.eof()) throw std::runtime_error("edge list: missing header");

  std::uint64_t n = 0, m = 0;
  if (!parse_pair(line, n, m))
    throw std::runtime_error("edge list: malformed header at line " + std::to_string(lineno));
  if (n > std::numeric_limits<VertexId>::max())
    throw std::runtime_error("edge list: vertex count too large");

  EdgeListGraph g;
  g.n = static_cast<VertexId>(n);
  g.sources.reserve(m);
  g.targets.reserve(m);

  std::size_t arcs = 0;
  while (arcs < m && std::getline(in, line)) {
    ++lineno;
    std::uint64_t u = 0, v = 0;
    if (!parse_pair(line, u, v))
      throw std::runtime_error("edge list: malformed arc at line " + std::to_string(lineno));
    if (u >= n || v >= n)
      throw std::runtime_error("edge list: vertex id out of range at line " + std::to_string(lineno));
    g.sources.push_back(static_cast<VertexId>(u));
    g.targets.push_back(static_cast<VertexId>(v));
    ++arcs;
  }
  if (arcs < m)
    throw std::runtime_error("edge list: declared " + std::to_string(m) + " arcs, found " +
                             std::to_string(arcs));
  // Anything but trailing blank lines means the header undercounted.
  while (std::getline(in, line)) {
    ++lineno;
    if (!is_blank(line))
      throw std::runtime_error("edge list: extra data at line " + std::to_string(lineno) +
                               " (declared " + std::to_string(m) + " arcs)");
  }
  return g;
}

EdgeListGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const EdgeListGraph& g,
                     std::span<const std::string> comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << g.n << ' ' << g.num_arcs() << '\n';
  for (std::size_t i = 0; i < g.num_arcs(); ++i)
    out << g.sources[i] << ' ' << g.targets[i] << '\n';
}

CsrGraph build_csr(const EdgeListGraph& g) {
  const std::size_t m = g.num_arcs();
  CsrGraph csr;
  csr.n = g.n;
  csr.offsets.assign(static_cast<std::size_t>(g.n) + 1, 0);
  csr.targets.resize(m);

  for (std::size_t i = 0; i < m; ++i) csr.offsets[g.sources[i] + 1]++;
  for (std::size_t u = 0; u < g.n; ++u) csr.offsets[u + 1] += csr.offsets[u];

  std::vector<std::size_t> cursor(csr.offsets.begin(), csr.offsets.end() - 1);
  for (std::size_t i = 0; i < m; ++i) csr.targets[cursor[g.sources[i]]++] = g.targets[i];

  for (std::size_t u = 0; u < g.n; ++u)
    std::sort(csr.targets.begin() + csr.offsets[u], csr.targets.begin() + csr.offsets[u + 1]);
  return csr;
}

std::vector<Finding> validate(const EdgeListGraph& g) {
  std::vector<Finding> findings;
  std::vector<bool> touched(g.n, false);

  for (std::size_t i = 0; i < g.num_arcs(); ++i) {
    touched[g.sources[i]] = true;
    touched[g.targets[i]] = true;
    if (g.sources[i] == g.targets[i])
      findings.push_back({FindingKind::SelfLoop, g.sources[i], g.sources[i]});
  }

  std::vector<std::pair<VertexId, VertexId>> arcs;
  arcs.reserve(g.num_arcs());
  for (std::size_t i = 0; i < g.num_arcs(); ++i) arcs.emplace_back(g.sources[i], g.targets[i]);
  std::sort(arcs.begin(), arcs.end());
  for (std::size_t i = 1; i < arcs.size(); ++i)
    if (arcs[i] == arcs[i - 1] && (i == 1 || arcs[i] != arcs[i - 2]))
      findings.push_back({FindingKind::DuplicateArc, arcs[i].first, arcs[i].second});

  for (VertexId u = 0; u < g.n; ++u)
    if (!touched[u]) findings.push_back({FindingKind::IsolatedVertex, u, u});
  return findings;
}

DegreeStats degree_stats(const CsrGraph& g) {
  DegreeStats s;
  s.out_degree.resize(g.n);
  for (VertexId u = 0; u < g.n; ++u) s.out_degree[u] = g.out_degree(u);
  if (g.n == 0) return s;

  double sum = 0.0, sumsq = 0.0;
  for (std::size_t d : s.out_degree) {
    s.max = std::max(s.max, d);
    sum += static_cast<double>(d);
    sumsq += static_cast<double>(d) * static_cast<double>(d);
  }
  s.mean = sum / static_cast<double>(g.n);
  s.variance = sumsq / static_cast<double>(g.n) - s.mean * s.mean;
  return s;
}

}  // namespace bcbench
