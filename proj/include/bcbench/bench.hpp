// Copyright (c) 2026, the bcbench authors
// See LICENSE.txt for license details

#ifndef BCBENCH_BENCH_HPP
#define BCBENCH_BENCH_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bcbench/graph.hpp"
#include "bcbench/memory_model.hpp"
#include "bcbench/strategies.hpp"

namespace bcbench {

/// Input-graph descriptor carried through records and CSV.
struct GraphCase {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  double density = 0.0;
  std::uint32_t beta = 0;
  std::uint64_t seed = 0;
};

enum class RunStatus { Ok, Invalid, Skipped };

/// One timed strategy run. Only the compute phase is timed: graph
/// generation, CSR construction, result verification, and I/O all happen
/// outside the clock. A run whose BC checksum disagrees with the sequential
/// oracle (or that throws) is marked Invalid and keeps no timings.
struct BenchRecord {
  GraphCase graph;
  StrategyConfig config;
  unsigned reps = 0;
  std::vector<double> run_ms;  // one entry per repetition; not serialized
  double mean_ms = 0.0;
  double min_ms = 0.0;
  double max_ms = 0.0;
  Instrumentation counters;
  double checksum = 0.0;
  RunStatus status = RunStatus::Ok;
  Bytes skip_footprint = 0;  // modeled footprint, attached to Skipped records
};

/// baseline_mean / strategy_mean per configuration, for one graph. Invalid
/// and skipped records never contribute.
struct SpeedupTable {
  Strategy baseline = Strategy::WorkShared;
  struct Row {
    std::string label;
    double ratio = 0.0;
  };
  std::vector<Row> rows;
};

/// Short form like "shared/w4/c128/byte" used in speedup tables and plots.
std::string config_label(const StrategyConfig& cfg);

/// Checksum agreement required before a run's timings count, per strategy.
double checksum_tolerance(Strategy s);

using StrategyRunner =
    std::function<StrategyResult(const EdgeListGraph&, const CsrGraph&, const StrategyConfig&)>;

struct BenchOptions {
  unsigned repetitions = 5;
  bool discard_warmup = false;  // one extra untimed run up front
  Strategy baseline = Strategy::WorkShared;
};

/// Benchmarks each configuration against one graph. The sequential oracle is
/// computed once, untimed, and every repetition's checksum is validated
/// against it. `runner` is swappable for testing; it defaults to
/// run_strategy.
std::vector<BenchRecord> run_bench(const EdgeListGraph& edges, const CsrGraph& csr,
                                   const GraphCase& descriptor,
                                   std::span<const StrategyConfig> configs,
                                   const BenchOptions& opts, const StrategyRunner& runner = {});

SpeedupTable compute_speedups(std::span<const BenchRecord> records, Strategy baseline);

// CSV with the fixed column set
//   n,m,d,beta,seed,strategy,workers,chunk,pred_variant,reps,
//   mean_ms,min_ms,max_ms,levels,atomic_ops,max_task_len,checksum,status
// Floating-point fields use 17 significant digits so parsing is lossless.
std::string emit_csv(std::span<const BenchRecord> records);
std::vector<BenchRecord> parse_csv(std::istream& in);

/// Flat key=value sweep description; lists are comma-separated. Keys:
/// nodes, beta, strategies, chunks, pred, workers, seed, reps, warmup,
/// baseline, memory_cap.
struct SweepSpec {
  std::vector<VertexId> nodes;
  std::vector<VertexId> betas;
  std::vector<Strategy> strategies;
  std::vector<std::size_t> chunks = {128};
  std::vector<PredecessorVariant> pred_variants = {PredecessorVariant::ByteMatrix};
  unsigned workers = 1;
  std::uint64_t seed = 1;
  unsigned repetitions = 5;
  bool discard_warmup = false;
  Strategy baseline = Strategy::WorkShared;
  Bytes memory_cap = 0;  // 0 disables skipping
};

SweepSpec parse_sweep_spec(std::istream& in);

/// Cartesian sweep: one generated graph per (nodes, beta) cell, shared by
/// all strategies of that cell; chunk and predecessor-variant lists expand
/// only for the work-shared strategy. A cell whose modeled footprint exceeds
/// memory_cap is recorded as Skipped with that footprint attached. Progress
/// goes to `log` when given.
std::vector<BenchRecord> sweep(const SweepSpec& spec, std::ostream* log = nullptr,
                               const StrategyRunner& runner = {});

/// Modeled footprint used for sweep skip decisions: the replicated
/// strategies map to the per-source-replicating designs (vertex -> sriram,
/// edge -> jia) and work-shared to shi; seq is never skipped.
Bytes modeled_footprint(Strategy s, std::uint64_t n, std::uint64_t m);

enum class Figure { SizeSpeedup, DensitySpeedup, ChunkTime };

Figure parse_figure(const std::string& name);

/// Pivots records into gnuplot-style blocks ("# label" header, "x y" rows,
/// two blank lines between blocks). SizeSpeedup plots speedup over the
/// baseline against n, DensitySpeedup against d, and ChunkTime plots
/// work-shared mean time against chunk size.
std::string plot_data(std::span<const BenchRecord> records, Figure figure, Strategy baseline);

}  // namespace bcbench

#endif  // BCBENCH_BENCH_HPP
