// Copyright (c) 2026, the bcbench authors
// See LICENSE.txt for license details

#include "bcbench/strategies.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

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

double max_rel_err(const BcScores& got, const BcScores& ref) {
  double worst = 0.0;
  for (std::size_t v = 0; v < ref.size(); ++v)
    worst = std::max(worst,
                     std::abs(got[v] - ref[v]) / std::max(std::abs(ref[v]), 1e-12));
  return worst;
}

// Collects per-source BFS state into flat n*n matrices via the observer.
struct StateMatrix {
  VertexId n = 0;
  std::vector<std::int32_t> dist;
  std::vector<std::uint64_t> sigma;

  explicit StateMatrix(VertexId n_) : n(n_), dist(std::size_t(n_) * n_), sigma(std::size_t(n_) * n_) {}

  SourceObserver observer() {
    return [this](VertexId s, std::span<const std::int32_t> d, std::span<const std::uint64_t> sg) {
      std::copy(d.begin(), d.end(), dist.begin() + std::size_t(s) * n);
      std::copy(sg.begin(), sg.end(), sigma.begin() + std::size_t(s) * n);
    };
  }
};

StrategyConfig config(Strategy s, unsigned workers, std::size_t chunk = 128,
                      PredecessorVariant pv = PredecessorVariant::ByteMatrix) {
  StrategyConfig cfg;
  cfg.strategy = s;
  cfg.workers = workers;
  cfg.chunk = chunk;
  cfg.predecessor_variant = pv;
  return cfg;
}

const EdgeListGraph kPath = from_arcs(3, {{0, 1}, {1, 2}});
const EdgeListGraph kDiamond = from_arcs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});

EdgeListGraph bidirected_star(VertexId leaves) {
  std::vector<std::pair<VertexId, VertexId>> arcs;
  for (VertexId leaf = 1; leaf <= leaves; ++leaf) {
    arcs.push_back({0, leaf});
    arcs.push_back({leaf, 0});
  }
  return from_arcs(leaves + 1, arcs);
}

}  // namespace

TEST_CASE("all strategies agree on the path graph") {
  const CsrGraph csr = build_csr(kPath);
  const BcScores expected{0.0, 1.0, 0.0};

  CHECK(bc_vertex_parallel(csr, config(Strategy::VertexParallel, 4)).scores == expected);
  CHECK(bc_edge_parallel(kPath, config(Strategy::EdgeParallel, 4)).scores == expected);
  CHECK(bc_work_shared(kPath, config(Strategy::WorkShared, 4)).scores == expected);
}

TEST_CASE("edge-parallel splits the diamond pair") {
  const StrategyResult r = bc_edge_parallel(kDiamond, config(Strategy::EdgeParallel, 2));
  CHECK(r.scores[1] == doctest::Approx(0.5));
  CHECK(r.scores[2] == doctest::Approx(0.5));
}

TEST_CASE("work-shared star centre carries every leaf pair") {
  const EdgeListGraph star = bidirected_star(4);
  const StrategyResult r = bc_work_shared(star, config(Strategy::WorkShared, 4, 2));
  CHECK(r.scores[0] == doctest::Approx(12.0));
}

TEST_CASE("strategies match the oracle across worker counts") {
  const EdgeListGraph edges = generate_ba_directed({500, 2, 3});
  const CsrGraph csr = build_csr(edges);
  const BcScores oracle = bc_sequential(csr);

  StateMatrix ref(csr.n);
  bc_seq_instrumented(csr, ref.observer());

  for (unsigned workers : {1u, 2u, 8u}) {
    CAPTURE(workers);

    StateMatrix mv(csr.n);
    const StrategyResult vertex =
        bc_vertex_parallel(csr, config(Strategy::VertexParallel, workers), mv.observer());
    CHECK(max_rel_err(vertex.scores, oracle) <= 1e-6);
    CHECK(mv.sigma == ref.sigma);
    CHECK(mv.dist == ref.dist);

    StateMatrix me(csr.n);
    const StrategyResult edge =
        bc_edge_parallel(edges, config(Strategy::EdgeParallel, workers), me.observer());
    CHECK(max_rel_err(edge.scores, oracle) <= 1e-6);
    CHECK(me.sigma == ref.sigma);
    CHECK(me.dist == ref.dist);

    StateMatrix ms(csr.n);
    const StrategyResult shared =
        bc_work_shared(edges, config(Strategy::WorkShared, workers), ms.observer());
    CHECK(max_rel_err(shared.scores, oracle) <= 1e-4);
    CHECK(ms.sigma == ref.sigma);
    CHECK(ms.dist == ref.dist);
  }
}

TEST_CASE("higher-density instance stays within tolerance") {
  const EdgeListGraph edges = generate_ba_directed({500, 10, 3});
  const CsrGraph csr = build_csr(edges);
  const BcScores oracle = bc_sequential(csr);
  CHECK(max_rel_err(bc_edge_parallel(edges, config(Strategy::EdgeParallel, 4)).scores, oracle) <=
        1e-6);
  CHECK(max_rel_err(bc_work_shared(edges, config(Strategy::WorkShared, 4)).scores, oracle) <=
        1e-4);
}

TEST_CASE("one worker is bitwise deterministic") {
  const EdgeListGraph edges = generate_ba_directed({300, 3, 5});
  const CsrGraph csr = build_csr(edges);

  const BcScores v1 = bc_vertex_parallel(csr, config(Strategy::VertexParallel, 1)).scores;
  const BcScores v2 = bc_vertex_parallel(csr, config(Strategy::VertexParallel, 1)).scores;
  CHECK(v1 == v2);

  const BcScores e1 = bc_edge_parallel(edges, config(Strategy::EdgeParallel, 1)).scores;
  const BcScores e2 = bc_edge_parallel(edges, config(Strategy::EdgeParallel, 1)).scores;
  CHECK(e1 == e2);

  const BcScores s1 = bc_work_shared(edges, config(Strategy::WorkShared, 1)).scores;
  const BcScores s2 = bc_work_shared(edges, config(Strategy::WorkShared, 1)).scores;
  CHECK(s1 == s2);
}

TEST_CASE("predecessor variants are interchangeable") {
  const EdgeListGraph edges = generate_ba_directed({400, 5, 9});

  SUBCASE("single worker: bit-for-bit identical scores") {
    const BcScores byte = bc_work_shared(edges, config(Strategy::WorkShared, 1, 128,
                                                       PredecessorVariant::ByteMatrix))
                              .scores;
    const BcScores bit = bc_work_shared(edges, config(Strategy::WorkShared, 1, 128,
                                                      PredecessorVariant::BitPacked))
                             .scores;
    CHECK(byte == bit);
  }

  SUBCASE("many workers: identical sigma/dist, delta within 1e-7") {
    StateMatrix mb(edges.n), mp(edges.n);
    const BcScores byte = bc_work_shared(edges, config(Strategy::WorkShared, 4, 64,
                                                       PredecessorVariant::ByteMatrix),
                                         mb.observer())
                              .scores;
    const BcScores bit = bc_work_shared(edges, config(Strategy::WorkShared, 4, 64,
                                                      PredecessorVariant::BitPacked),
                                        mp.observer())
                             .scores;
    CHECK(mb.sigma == mp.sigma);
    CHECK(mb.dist == mp.dist);
    CHECK(max_rel_err(bit, byte) <= 1e-7);
  }
}

TEST_CASE("chunk size never changes the answer") {
  const EdgeListGraph edges = generate_ba_directed({1200, 5, 9});
  const BcScores oracle = bc_sequential(build_csr(edges));
  for (std::size_t chunk : {std::size_t{32}, std::size_t{128}, std::size_t{1024}}) {
    CAPTURE(chunk);
    const StrategyResult r = bc_work_shared(edges, config(Strategy::WorkShared, 4, chunk));
    CHECK(max_rel_err(r.scores, oracle) <= 1e-4);
  }
}

TEST_CASE("predecessor matrix set/test semantics") {
  for (PredecessorVariant pv : {PredecessorVariant::ByteMatrix, PredecessorVariant::BitPacked}) {
    PredecessorMatrix pm(5, pv);
    pm.set(3, 1);
    CHECK(pm.test(3, 1));
    CHECK_FALSE(pm.test(1, 3));
    pm.unset(3, 1);
    CHECK_FALSE(pm.test(3, 1));
  }
}

TEST_CASE("predecessor matrix storage sizes") {
  CHECK(PredecessorMatrix::storage_bytes(20000, PredecessorVariant::ByteMatrix) == 400000000ull);
  CHECK(PredecessorMatrix::storage_bytes(20000, PredecessorVariant::BitPacked) == 50000000ull);
  PredecessorMatrix small(8, PredecessorVariant::BitPacked);
  CHECK(small.byte_size() == 8);  // 64 entries in one word
}

TEST_CASE("64 concurrent bit sets in one word lose nothing") {
  // n = 8 packs the whole matrix into a single 64-bit word.
  PredecessorMatrix pm(8, PredecessorVariant::BitPacked);
  for (int round = 0; round < 50; ++round) {
    pm.clear();
#pragma omp parallel num_threads(64)
    {
      const int id = omp_get_thread_num();
      pm.set(static_cast<VertexId>(id / 8), static_cast<VertexId>(id % 8));
    }
    int set_count = 0;
    for (VertexId v = 0; v < 8; ++v)
      for (VertexId u = 0; u < 8; ++u) set_count += pm.test(v, u) ? 1 : 0;
    REQUIRE(set_count == 64);
  }
}

TEST_CASE("schedule shape: hub degree shows up only in vertex-parallel tasks") {
  // Bidirected star with 400 leaves: the hub scan is one vertex-parallel task.
  const EdgeListGraph star = bidirected_star(400);
  const CsrGraph csr = build_csr(star);

  const StrategyResult vertex = bc_vertex_parallel(csr, config(Strategy::VertexParallel, 2));
  const StrategyResult edge = bc_edge_parallel(star, config(Strategy::EdgeParallel, 2));
  CHECK(vertex.counters.max_task_len == 400);
  CHECK(edge.counters.max_task_len == 1);
}

TEST_CASE("level counters agree with BFS depth across strategies") {
  // Directed path 0->1->2->3->4: source i runs (5-i) levels; total 15.
  const EdgeListGraph path = from_arcs(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const CsrGraph csr = build_csr(path);
  CHECK(bc_seq_instrumented(csr).counters.levels == 15);
  CHECK(bc_vertex_parallel(csr, config(Strategy::VertexParallel, 2)).counters.levels == 15);
  CHECK(bc_edge_parallel(path, config(Strategy::EdgeParallel, 2)).counters.levels == 15);
  CHECK(bc_work_shared(path, config(Strategy::WorkShared, 2)).counters.levels == 15);
}

TEST_CASE("byte variant issues fewer atomic ops than bit variant") {
  const EdgeListGraph edges = generate_ba_directed({200, 3, 13});
  const auto byte = bc_work_shared(edges, config(Strategy::WorkShared, 1, 64,
                                                 PredecessorVariant::ByteMatrix));
  const auto bit = bc_work_shared(edges, config(Strategy::WorkShared, 1, 64,
                                                PredecessorVariant::BitPacked));
  CHECK(byte.counters.atomic_ops < bit.counters.atomic_ops);
}

TEST_CASE("invalid configurations are rejected") {
  const CsrGraph csr = build_csr(kPath);
  CHECK_THROWS_AS(bc_vertex_parallel(csr, config(Strategy::VertexParallel, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(bc_edge_parallel(kPath, config(Strategy::EdgeParallel, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(bc_work_shared(kPath, config(Strategy::WorkShared, 0)), std::invalid_argument);
  CHECK_THROWS_AS(bc_work_shared(kPath, config(Strategy::WorkShared, 2, 0)),
                  std::invalid_argument);
}

TEST_CASE("degenerate inputs") {
  EdgeListGraph empty;
  CHECK(bc_work_shared(empty, config(Strategy::WorkShared, 4)).scores.empty());
  CHECK(bc_edge_parallel(empty, config(Strategy::EdgeParallel, 4)).scores.empty());

  EdgeListGraph single;
  single.n = 1;
  const CsrGraph single_csr = build_csr(single);
  CHECK(bc_vertex_parallel(single_csr, config(Strategy::VertexParallel, 4)).scores ==
        BcScores{0.0});
  CHECK(bc_work_shared(single, config(Strategy::WorkShared, 4)).scores == BcScores{0.0});

  // Disconnected input: unreachable vertices contribute and receive nothing.
  const EdgeListGraph two_islands = from_arcs(6, {{0, 1}, {1, 2}, {4, 5}});
  const CsrGraph islands_csr = build_csr(two_islands);
  const BcScores oracle = bc_sequential(islands_csr);
  CHECK(bc_vertex_parallel(islands_csr, config(Strategy::VertexParallel, 3)).scores == oracle);
  CHECK(bc_edge_parallel(two_islands, config(Strategy::EdgeParallel, 3)).scores == oracle);
  CHECK(bc_work_shared(two_islands, config(Strategy::WorkShared, 3)).scores == oracle);
}

TEST_CASE("parallel strategies detect path-count overflow") {
  EdgeListGraph g;
  const int stages = 65;
  g.n = 2 * stages + 2;
  auto arc = [&g](VertexId u, VertexId v) {
    g.sources.push_back(u);
    g.targets.push_back(v);
  };
  arc(0, 1);
  arc(0, 2);
  for (int i = 0; i + 1 < stages; ++i) {
    const VertexId a = static_cast<VertexId>(2 * i + 1), b = a + 1;
    arc(a, b + 1);
    arc(a, b + 2);
    arc(b, b + 1);
    arc(b, b + 2);
  }
  arc(static_cast<VertexId>(2 * stages - 1), static_cast<VertexId>(g.n - 1));
  arc(static_cast<VertexId>(2 * stages), static_cast<VertexId>(g.n - 1));
  const CsrGraph csr = build_csr(g);
  CHECK_THROWS_AS(bc_vertex_parallel(csr, config(Strategy::VertexParallel, 2)),
                  std::overflow_error);
  CHECK_THROWS_AS(bc_edge_parallel(g, config(Strategy::EdgeParallel, 2)), std::overflow_error);
  CHECK_THROWS_AS(bc_work_shared(g, config(Strategy::WorkShared, 2)), std::overflow_error);
}

TEST_CASE("strategy names round trip") {
  for (Strategy s : {Strategy::Seq, Strategy::VertexParallel, Strategy::EdgeParallel,
                     Strategy::WorkShared})
    CHECK(parse_strategy(to_string(s)) == s);
  CHECK_THROWS_AS(parse_strategy("warp"), std::invalid_argument);
  for (PredecessorVariant v : {PredecessorVariant::ByteMatrix, PredecessorVariant::BitPacked})
    CHECK(parse_predecessor_variant(to_string(v)) == v);
}
