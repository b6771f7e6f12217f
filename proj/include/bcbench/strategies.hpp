// Copyright (c) 2026, the bcbench authors
// See LICENSE.txt for license details

#ifndef BCBENCH_STRATEGIES_HPP
#define BCBENCH_STRATEGIES_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bcbench/brandes.hpp"
#include "bcbench/graph.hpp"

namespace bcbench {

// Three parallel schedules for Brandes' algorithm over a shared-memory worker
// pool, differing in scheduling granularity, state replication, and atomics:
//
//   vertex_parallel  Sources are distributed across workers and every worker
//                    owns a private per-source workspace. Within a source,
//                    each BFS level treats the frontier vertices as tasks; a
//                    task scans its whole neighbor list, so task length
//                    follows the degree distribution.
//
//   edge_parallel    Same replication, but every level scans all m arcs as
//                    unit tasks; an arc fires when its source vertex sits on
//                    the frontier. Task length is always one arc.
//
//   work_shared      Sources run one at a time against a single shared
//                    workspace plus an n*n predecessor matrix. Workers grab
//                    fixed-size arc chunks from a shared counter, levels end
//                    with a coordinator barrier that ORs per-worker
//                    continuation flags, and all shared updates are atomic.
//
// All three produce BC scores the sequential implementation would, up to
// 32-bit dependency-accumulation rounding; path counts (sigma) are exact.
enum class Strategy { Seq, VertexParallel, EdgeParallel, WorkShared };

const char* to_string(Strategy s);
Strategy parse_strategy(const std::string& name);

enum class PredecessorVariant { ByteMatrix, BitPacked };

const char* to_string(PredecessorVariant v);
PredecessorVariant parse_predecessor_variant(const std::string& name);

struct StrategyConfig {
  Strategy strategy = Strategy::VertexParallel;
  unsigned workers = 1;
  std::size_t chunk = 128;  // arcs per grab, work-shared only
  PredecessorVariant predecessor_variant = PredecessorVariant::ByteMatrix;
};

/// Counters collected on every run. atomic_ops counts issued atomic
/// read-modify-writes (CAS claims, integer/float fetch-adds, bit-set RMWs,
/// chunk-counter grabs); plain stores into the byte predecessor matrix do not
/// count. levels sums forward BFS passes over all sources. max_task_len is
/// the longest arc scan any single task performed.
struct Instrumentation {
  std::uint64_t levels = 0;
  std::uint64_t atomic_ops = 0;
  std::uint64_t max_task_len = 0;
};

/// Per-source shortest-path predecessor relation: entry (v, u) says u is a
/// BFS predecessor of v. byte_matrix spends one byte per entry and writes
/// with plain idempotent stores; bit_packed spends one bit and must use an
/// atomic fetch_or so concurrent writers to one word cannot lose updates.
class PredecessorMatrix {
 public:
  PredecessorMatrix(VertexId n, PredecessorVariant variant);

  VertexId size() const { return n_; }
  PredecessorVariant variant() const { return variant_; }

  /// Marks u as predecessor of v. Safe to call concurrently with other set()
  /// calls. Returns true when an atomic RMW was issued (bit_packed).
  bool set(VertexId v, VertexId u);

  /// Clears one entry; same concurrency contract as set(). The work-shared
  /// strategy resets the matrix between sources by sweeping the arcs it may
  /// have marked instead of wiping all n^2 cells.
  bool unset(VertexId v, VertexId u);

  /// Relaxed read. A read racing a write of the same entry may see either
  /// state; the strategies barrier-separate the phases where that matters.
  bool test(VertexId v, VertexId u) const;

  std::size_t byte_size() const;
  static std::size_t storage_bytes(std::uint64_t n, PredecessorVariant variant);

  // Clearing is split into equally sized chunks so a worker team can share it.
  std::size_t clear_chunk_count() const;
  void clear_chunk(std::size_t chunk_index);
  void clear();

 private:
  VertexId n_ = 0;
  PredecessorVariant variant_;
  std::vector<std::uint8_t> bytes_;
  std::vector<std::uint64_t> words_;
};

/// Called once per completed forward phase with that source's final BFS
/// levels and path counts. Replicated strategies invoke it concurrently for
/// distinct sources; implementations must tolerate that and must not throw.
using SourceObserver = std::function<void(
    VertexId source, std::span<const std::int32_t> dist, std::span<const std::uint64_t> sigma)>;

struct StrategyResult {
  BcScores scores;
  Instrumentation counters;
};

StrategyResult bc_vertex_parallel(const CsrGraph& g, const StrategyConfig& cfg,
                                  const SourceObserver& observer = {});
StrategyResult bc_edge_parallel(const EdgeListGraph& g, const StrategyConfig& cfg,
                                const SourceObserver& observer = {});
StrategyResult bc_work_shared(const EdgeListGraph& g, const StrategyConfig& cfg,
                              const SourceObserver& observer = {});

/// Sequential baseline with the same result/instrumentation surface.
StrategyResult bc_seq_instrumented(const CsrGraph& g, const SourceObserver& observer = {});

/// Dispatches on cfg.strategy; edge-based strategies read `edges`, the others
/// read `csr`. Callers keep both forms so every strategy sees the same graph.
StrategyResult run_strategy(const EdgeListGraph& edges, const CsrGraph& csr,
                            const StrategyConfig& cfg, const SourceObserver& observer = {});

}  // namespace bcbench

#endif  // BCBENCH_STRATEGIES_HPP
