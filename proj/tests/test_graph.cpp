// Copyright (c) 2026, the bcbench authors
// See LICENSE.txt for license details

#include "bcbench/graph.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "bcbench/generator.hpp"
#include "doctest.h"

using namespace bcbench;

namespace {

EdgeListGraph from_arcs(VertexId n, std::vector<std::pair<VertexId, VertexId>> arcs) {
  EdgeListGraph g;
  g.n = n;
  for (auto [u, v] : arcs) {
    g.sources.push_back(u);
    g.targets.push_back(v);
  }
  return g;
}

std::vector<std::pair<VertexId, VertexId>> sorted_arcs(const EdgeListGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> arcs;
  for (std::size_t i = 0; i < g.num_arcs(); ++i) arcs.emplace_back(g.sources[i], g.targets[i]);
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

std::vector<std::pair<VertexId, VertexId>> sorted_arcs(const CsrGraph& g) {
  std::vector<std::pair<VertexId, VertexId>> arcs;
  for (VertexId u = 0; u < g.n; ++u)
    for (VertexId v : g.out_neighbors(u)) arcs.emplace_back(u, v);
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

}  // namespace

TEST_CASE("load_edge_list parses the declared graph") {
  std::istringstream in("3 2\n0 1\n1 2\n");
  const EdgeListGraph g = load_edge_list(in);
  CHECK(g.n == 3);
  CHECK(g.sources == std::vector<VertexId>{0, 1});
  CHECK(g.targets == std::vector<VertexId>{1, 2});
}

TEST_CASE("load_edge_list handles the empty-edge case") {
  std::istringstream in("1 0\n");
  const EdgeListGraph g = load_edge_list(in);
  CHECK(g.n == 1);
  CHECK(g.num_arcs() == 0);
}

TEST_CASE("load_edge_list rejects out-of-range ids") {
  std::istringstream in("2 1\n0 5\n");
  CHECK_THROWS_AS(load_edge_list(in), std::runtime_error);
}

TEST_CASE("load_edge_list rejects malformed input") {
  SUBCASE("garbage arc line") {
    std::istringstream in("2 1\n0 x\n");
    CHECK_THROWS_AS(load_edge_list(in), std::runtime_error);
  }
  SUBCASE("three fields on a line") {
    std::istringstream in("2 1\n0 1 1\n");
    CHECK_THROWS_AS(load_edge_list(in), std::runtime_error);
  }
  SUBCASE("fewer arcs than declared") {
    std::istringstream in("3 2\n0 1\n");
    CHECK_THROWS_AS(load_edge_list(in), std::runtime_error);
  }
  SUBCASE("more arcs than declared") {
    std::istringstream in("3 1\n0 1\n1 2\n");
    CHECK_THROWS_AS(load_edge_list(in), std::runtime_error);
  }
  SUBCASE("missing header") {
    std::istringstream in("");
    CHECK_THROWS_AS(load_edge_list(in), std::runtime_error);
  }
}

TEST_CASE("load_edge_list skips comments before the header") {
  std::istringstream in("# produced by a tool\n# another note\n2 1\n0 1\n");
  const EdgeListGraph g = load_edge_list(in);
  CHECK(g.n == 2);
  CHECK(g.num_arcs() == 1);
}

TEST_CASE("write/load round trip") {
  const EdgeListGraph g = from_arcs(4, {{0, 1}, {2, 3}, {3, 0}});
  std::ostringstream out;
  const std::string comment = "note";
  write_edge_list(out, g, std::span<const std::string>(&comment, 1));
  std::istringstream in(out.str());
  const EdgeListGraph back = load_edge_list(in);
  CHECK(back.n == g.n);
  CHECK(back.sources == g.sources);
  CHECK(back.targets == g.targets);
}

TEST_CASE("build_csr lays out sorted neighbor lists") {
  const CsrGraph csr = build_csr(from_arcs(3, {{0, 1}, {1, 2}}));
  CHECK(csr.offsets == std::vector<std::size_t>{0, 1, 2, 2});
  CHECK(csr.targets == std::vector<VertexId>{1, 2});
}

TEST_CASE("build_csr of an empty graph") {
  const CsrGraph csr = build_csr(from_arcs(2, {}));
  CHECK(csr.offsets == std::vector<std::size_t>{0, 0, 0});
  CHECK(csr.targets.empty());
}

TEST_CASE("build_csr preserves duplicate arcs") {
  const CsrGraph csr = build_csr(from_arcs(2, {{0, 1}, {0, 1}}));
  CHECK(csr.offsets == std::vector<std::size_t>{0, 2, 2});
  CHECK(csr.targets == std::vector<VertexId>{1, 1});
}

TEST_CASE("csr round trip keeps the arc multiset") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const VertexId n = 1 + static_cast<VertexId>(rng() % 40);
    const std::size_t m = rng() % 120;
    EdgeListGraph g;
    g.n = n;
    for (std::size_t i = 0; i < m; ++i) {
      g.sources.push_back(static_cast<VertexId>(rng() % n));
      g.targets.push_back(static_cast<VertexId>(rng() % n));
    }
    const CsrGraph csr = build_csr(g);
    CHECK(sorted_arcs(csr) == sorted_arcs(g));
    std::size_t degree_sum = 0;
    for (VertexId u = 0; u < n; ++u) degree_sum += csr.out_degree(u);
    CHECK(degree_sum == m);
  }
}

TEST_CASE("validate reports self-loops") {
  const auto findings = validate(from_arcs(2, {{0, 0}}));
  REQUIRE(findings.size() == 2);  // the loop plus isolated vertex 1
  CHECK(findings[0].kind == FindingKind::SelfLoop);
  CHECK(findings[0].u == 0);
  CHECK(to_string(findings[0]) == "self-loop at 0");
}

TEST_CASE("validate reports isolated vertices") {
  const auto findings = validate(from_arcs(3, {{0, 1}}));
  REQUIRE(findings.size() == 1);
  CHECK(findings[0].kind == FindingKind::IsolatedVertex);
  CHECK(findings[0].u == 2);
}

TEST_CASE("validate reports duplicate arcs once") {
  const auto findings = validate(from_arcs(2, {{0, 1}, {0, 1}, {0, 1}}));
  REQUIRE(findings.size() == 1);
  CHECK(findings[0].kind == FindingKind::DuplicateArc);
}

TEST_CASE("generated graphs come out clean") {
  const EdgeListGraph g = generate_ba_directed({200, 3, 11});
  CHECK(validate(g).empty());
}

TEST_CASE("degree_stats on an out-directed star") {
  const DegreeStats s = degree_stats(build_csr(from_arcs(4, {{0, 1}, {0, 2}, {0, 3}})));
  CHECK(s.max == 3);
  CHECK(s.mean == doctest::Approx(0.75));
  CHECK(s.variance == doctest::Approx(1.6875));
  CHECK(s.out_degree == std::vector<std::size_t>{3, 0, 0, 0});
}

TEST_CASE("degree_stats on an empty graph") {
  const DegreeStats s = degree_stats(build_csr(from_arcs(4, {})));
  CHECK(s.max == 0);
  CHECK(s.mean == 0.0);
}

TEST_CASE("degree_stats sums to m on generated input") {
  const EdgeListGraph g = generate_ba_directed({1000, 2, 5});
  const DegreeStats s = degree_stats(build_csr(g));
  std::size_t sum = 0;
  for (std::size_t d : s.out_degree) sum += d;
  CHECK(sum == g.num_arcs());
  CHECK(s.max > 2 * 2);  // scale-free skew: some hub beats the mean
}
