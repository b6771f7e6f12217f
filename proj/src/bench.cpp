// Copyright (c) 2026, the bcbench authors
// See LICENSE.txt for license details

#include "bcbench/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bcbench/brandes.hpp"
#include "bcbench/generator.hpp"

namespace bcbench {

namespace {

constexpr const char* kCsvHeader =
    "n,m,d,beta,seed,strategy,workers,chunk,pred_variant,reps,"
    "mean_ms,min_ms,max_ms,levels,atomic_ops,max_task_len,checksum,status";

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0,
                  std::chrono::steady_clock::time_point t1) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count() / 1e6;
}

double rel_diff(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-12);
}

StrategyResult default_runner(const EdgeListGraph& edges, const CsrGraph& csr,
                              const StrategyConfig& cfg) {
  return run_strategy(edges, csr, cfg);
}

BenchRecord bench_one(const EdgeListGraph& edges, const CsrGraph& csr,
                      const GraphCase& descriptor, const StrategyConfig& cfg,
                      const BenchOptions& opts, double oracle_checksum,
                      const StrategyRunner& runner) {
  BenchRecord rec;
  rec.graph = descriptor;
  rec.config = cfg;
  rec.reps = opts.repetitions;

  const double tol = checksum_tolerance(cfg.strategy);
  try {
    if (opts.discard_warmup) (void)runner(edges, csr, cfg);
    bool first = true;
    for (unsigned rep = 0; rep < opts.repetitions; ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      StrategyResult out = runner(edges, csr, cfg);
      const auto t1 = std::chrono::steady_clock::now();
      rec.run_ms.push_back(elapsed_ms(t0, t1));

      const double sum = std::accumulate(out.scores.begin(), out.scores.end(), 0.0);
      if (rel_diff(sum, oracle_checksum) > tol) rec.status = RunStatus::Invalid;
      if (first) {
        rec.checksum = sum;
        rec.counters = out.counters;
        first = false;
      }
    }
  } catch (const std::exception&) {
    rec.status = RunStatus::Invalid;
    rec.run_ms.clear();
  }

  if (rec.status == RunStatus::Invalid) {
    rec.run_ms.clear();
    rec.mean_ms = rec.min_ms = rec.max_ms = 0.0;
    return rec;
  }
  rec.min_ms = *std::min_element(rec.run_ms.begin(), rec.run_ms.end());
  rec.max_ms = *std::max_element(rec.run_ms.begin(), rec.run_ms.end());
  rec.mean_ms = std::accumulate(rec.run_ms.begin(), rec.run_ms.end(), 0.0) /
                static_cast<double>(rec.run_ms.size());
  return rec;
}

std::vector<StrategyConfig> expand_configs(const SweepSpec& spec) {
  std::vector<StrategyConfig> configs;
  for (Strategy s : spec.strategies) {
    if (s == Strategy::WorkShared) {
      for (std::size_t chunk : spec.chunks)
        for (PredecessorVariant pv : spec.pred_variants) {
          StrategyConfig cfg;
          cfg.strategy = s;
          cfg.workers = spec.workers;
          cfg.chunk = chunk;
          cfg.predecessor_variant = pv;
          configs.push_back(cfg);
        }
    } else {
      StrategyConfig cfg;
      cfg.strategy = s;
      cfg.workers = spec.workers;
      configs.push_back(cfg);
    }
  }
  return configs;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_u64(const std::string& s) {
  std::size_t pos = 0;
  const std::uint64_t v = std::stoull(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not an integer: " + s);
  return v;
}

Bytes parse_bytes(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty byte count");
  Bytes v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') throw std::invalid_argument("not a byte count: " + s);
    v = v * 10 + static_cast<unsigned>(c - '0');
  }
  return v;
}

std::string status_field(const BenchRecord& r) {
  switch (r.status) {
    case RunStatus::Ok: return "OK";
    case RunStatus::Invalid: return "INVALID";
    case RunStatus::Skipped: return "SKIPPED(footprint=" + format_bytes(r.skip_footprint) + ")";
  }
  return "?";
}

void parse_status_field(const std::string& field, BenchRecord& r) {
  if (field == "OK") {
    r.status = RunStatus::Ok;
  } else if (field == "INVALID") {
    r.status = RunStatus::Invalid;
  } else if (field.starts_with("SKIPPED(footprint=") && field.ends_with(")")) {
    r.status = RunStatus::Skipped;
    r.skip_footprint = parse_bytes(field.substr(18, field.size() - 19));
  } else {
    throw std::runtime_error("bad status field: " + field);
  }
}

struct CellKey {
  std::uint64_t n, m, seed;
  std::uint32_t beta;
  auto operator<=>(const CellKey&) const = default;
};

CellKey cell_key(const BenchRecord& r) {
  return {r.graph.n, r.graph.m, r.graph.seed, r.graph.beta};
}

}  // namespace

std::string config_label(const StrategyConfig& cfg) {
  if (cfg.strategy == Strategy::Seq) return "seq";
  std::string label = to_string(cfg.strategy);
  label += "/w" + std::to_string(cfg.workers);
  if (cfg.strategy == Strategy::WorkShared) {
    label += "/c" + std::to_string(cfg.chunk);
    label += std::string("/") + to_string(cfg.predecessor_variant);
  }
  return label;
}

double checksum_tolerance(Strategy s) {
  switch (s) {
    case Strategy::Seq: return 1e-12;
    case Strategy::VertexParallel:
    case Strategy::EdgeParallel: return 1e-6;
    case Strategy::WorkShared: return 1e-4;
  }
  return 0.0;
}

std::vector<BenchRecord> run_bench(const EdgeListGraph& edges, const CsrGraph& csr,
                                   const GraphCase& descriptor,
                                   std::span<const StrategyConfig> configs,
                                   const BenchOptions& opts, const StrategyRunner& runner) {
  if (opts.repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  const StrategyRunner& run = runner ? runner : StrategyRunner(default_runner);

  const BcScores oracle = bc_sequential(csr);  // untimed verification reference
  const double oracle_checksum = std::accumulate(oracle.begin(), oracle.end(), 0.0);

  std::vector<BenchRecord> records;
  records.reserve(configs.size());
  for (const StrategyConfig& cfg : configs)
    records.push_back(bench_one(edges, csr, descriptor, cfg, opts, oracle_checksum, run));
  return records;
}

SpeedupTable compute_speedups(std::span<const BenchRecord> records, Strategy baseline) {
  SpeedupTable table;
  table.baseline = baseline;
  const BenchRecord* base = nullptr;
  for (const BenchRecord& r : records)
    if (r.status == RunStatus::Ok && r.config.strategy == baseline) {
      base = &r;
      break;
    }
  if (base == nullptr || base->mean_ms <= 0.0) return table;
  for (const BenchRecord& r : records) {
    if (r.status != RunStatus::Ok || r.mean_ms <= 0.0) continue;
    table.rows.push_back({config_label(r.config), base->mean_ms / r.mean_ms});
  }
  return table;
}

std::string emit_csv(std::span<const BenchRecord> records) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const BenchRecord& r : records) {
    out += std::to_string(r.graph.n) + ',';
    out += std::to_string(r.graph.m) + ',';
    out += fmt_double(r.graph.density) + ',';
    out += std::to_string(r.graph.beta) + ',';
    out += std::to_string(r.graph.seed) + ',';
    out += std::string(to_string(r.config.strategy)) + ',';
    out += std::to_string(r.config.workers) + ',';
    out += std::to_string(r.config.chunk) + ',';
    out += std::string(to_string(r.config.predecessor_variant)) + ',';
    out += std::to_string(r.reps) + ',';
    out += fmt_double(r.mean_ms) + ',';
    out += fmt_double(r.min_ms) + ',';
    out += fmt_double(r.max_ms) + ',';
    out += std::to_string(r.counters.levels) + ',';
    out += std::to_string(r.counters.atomic_ops) + ',';
    out += std::to_string(r.counters.max_task_len) + ',';
    out += fmt_double(r.checksum) + ',';
    out += status_field(r);
    out += '\n';
  }
  return out;
}

std::vector<BenchRecord> parse_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: empty input");
  if (trim(line) != kCsvHeader) throw std::runtime_error("csv: unexpected header");

  std::vector<BenchRecord> records;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const std::vector<std::string> f = split(trim(line), ',');
    if (f.size() != 18) throw std::runtime_error("csv: expected 18 fields, got row with " +
                                                 std::to_string(f.size()));
    BenchRecord r;
    r.graph.n = parse_u64(f[0]);
    r.graph.m = parse_u64(f[1]);
    r.graph.density = std::stod(f[2]);
    r.graph.beta = static_cast<std::uint32_t>(parse_u64(f[3]));
    r.graph.seed = parse_u64(f[4]);
    r.config.strategy = parse_strategy(f[5]);
    r.config.workers = static_cast<unsigned>(parse_u64(f[6]));
    r.config.chunk = parse_u64(f[7]);
    r.config.predecessor_variant = parse_predecessor_variant(f[8]);
    r.reps = static_cast<unsigned>(parse_u64(f[9]));
    r.mean_ms = std::stod(f[10]);
    r.min_ms = std::stod(f[11]);
    r.max_ms = std::stod(f[12]);
    r.counters.levels = parse_u64(f[13]);
    r.counters.atomic_ops = parse_u64(f[14]);
    r.counters.max_task_len = parse_u64(f[15]);
    r.checksum = std::stod(f[16]);
    parse_status_field(f[17], r);
    records.push_back(std::move(r));
  }
  return records;
}

SweepSpec parse_sweep_spec(std::istream& in) {
  SweepSpec spec;
  bool have_nodes = false, have_betas = false, have_strategies = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("sweep spec: expected key=value at line " + std::to_string(lineno));
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));

    auto list_of = [&value](auto parse_one) {
      using T = decltype(parse_one(std::string{}));
      std::vector<T> out;
      for (const std::string& item : split(value, ',')) out.push_back(parse_one(trim(item)));
      return out;
    };

    if (key == "nodes") {
      spec.nodes = list_of([](const std::string& s) { return static_cast<VertexId>(parse_u64(s)); });
      have_nodes = true;
    } else if (key == "beta") {
      spec.betas = list_of([](const std::string& s) { return static_cast<VertexId>(parse_u64(s)); });
      have_betas = true;
    } else if (key == "strategies") {
      spec.strategies = list_of([](const std::string& s) { return parse_strategy(s); });
      have_strategies = true;
    } else if (key == "chunks") {
      spec.chunks = list_of([](const std::string& s) { return std::size_t(parse_u64(s)); });
    } else if (key == "pred") {
      spec.pred_variants = list_of([](const std::string& s) { return parse_predecessor_variant(s); });
    } else if (key == "workers") {
      spec.workers = static_cast<unsigned>(parse_u64(value));
    } else if (key == "seed") {
      spec.seed = parse_u64(value);
    } else if (key == "reps") {
      spec.repetitions = static_cast<unsigned>(parse_u64(value));
    } else if (key == "warmup") {
      spec.discard_warmup = parse_u64(value) != 0;
    } else if (key == "baseline") {
      spec.baseline = parse_strategy(value);
    } else if (key == "memory_cap") {
      spec.memory_cap = parse_bytes(value);
    } else {
      throw std::runtime_error("sweep spec: unknown key '" + key + "' at line " +
                               std::to_string(lineno));
    }
  }
  if (!have_nodes || !have_betas || !have_strategies)
    throw std::runtime_error("sweep spec: nodes, beta, and strategies are required");
  return spec;
}

Bytes modeled_footprint(Strategy s, std::uint64_t n, std::uint64_t m) {
  switch (s) {
    case Strategy::Seq: return 0;
    case Strategy::VertexParallel: return footprint_sriram(n, m).total_bytes;
    case Strategy::EdgeParallel: return footprint_jia(n, m).total_bytes;
    case Strategy::WorkShared: return footprint_shi(n, m).total_bytes;
  }
  return 0;
}

std::vector<BenchRecord> sweep(const SweepSpec& spec, std::ostream* log,
                               const StrategyRunner& runner) {
  if (spec.repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  for (VertexId n : spec.nodes)
    for (VertexId beta : spec.betas)
      if (beta < 1 || beta >= n)
        throw std::invalid_argument("sweep: invalid cell nodes=" + std::to_string(n) +
                                    " beta=" + std::to_string(beta));

  const std::vector<StrategyConfig> configs = expand_configs(spec);
  BenchOptions opts;
  opts.repetitions = spec.repetitions;
  opts.discard_warmup = spec.discard_warmup;
  opts.baseline = spec.baseline;
  const StrategyRunner& run = runner ? runner : StrategyRunner(default_runner);

  std::vector<BenchRecord> records;
  for (VertexId n : spec.nodes) {
    for (VertexId beta : spec.betas) {
      // One generated graph per cell; every strategy sees identical input.
      const EdgeListGraph edges = generate_ba_directed({n, beta, spec.seed});
      const CsrGraph csr = build_csr(edges);
      GraphCase descriptor;
      descriptor.n = n;
      descriptor.m = edges.num_arcs();
      descriptor.density = edge_density(edges);
      descriptor.beta = beta;
      descriptor.seed = spec.seed;

      const BcScores oracle = bc_sequential(csr);
      const double oracle_checksum = std::accumulate(oracle.begin(), oracle.end(), 0.0);

      for (const StrategyConfig& cfg : configs) {
        if (log)
          *log << "bench n=" << n << " beta=" << beta << " " << config_label(cfg) << "\n";
        const Bytes footprint = modeled_footprint(cfg.strategy, descriptor.n, descriptor.m);
        if (spec.memory_cap != 0 && footprint > spec.memory_cap) {
          BenchRecord rec;
          rec.graph = descriptor;
          rec.config = cfg;
          rec.reps = spec.repetitions;
          rec.status = RunStatus::Skipped;
          rec.skip_footprint = footprint;
          records.push_back(std::move(rec));
          continue;
        }
        records.push_back(bench_one(edges, csr, descriptor, cfg, opts, oracle_checksum, run));
      }
    }
  }
  return records;
}

Figure parse_figure(const std::string& name) {
  if (name == "size") return Figure::SizeSpeedup;
  if (name == "density") return Figure::DensitySpeedup;
  if (name == "chunk") return Figure::ChunkTime;
  throw std::invalid_argument("unknown figure: " + name);
}

std::string plot_data(std::span<const BenchRecord> records, Figure figure, Strategy baseline) {
  // Baseline mean per graph cell (first valid baseline record wins).
  std::map<CellKey, double> base_mean;
  for (const BenchRecord& r : records)
    if (r.status == RunStatus::Ok && r.config.strategy == baseline && r.mean_ms > 0.0)
      base_mean.emplace(cell_key(r), r.mean_ms);

  struct Block {
    std::string label;
    std::vector<std::pair<double, double>> points;
  };
  std::vector<Block> blocks;
  auto block_for = [&blocks](const std::string& label) -> Block& {
    for (Block& b : blocks)
      if (b.label == label) return b;
    blocks.push_back({label, {}});
    return blocks.back();
  };

  for (const BenchRecord& r : records) {
    if (r.status != RunStatus::Ok || r.mean_ms <= 0.0) continue;
    if (figure == Figure::ChunkTime) {
      if (r.config.strategy != Strategy::WorkShared) continue;
      // chunk is the x-axis here, so it stays out of the block label
      block_for(std::string("shared/w") + std::to_string(r.config.workers) + "/" +
                to_string(r.config.predecessor_variant))
          .points.emplace_back(static_cast<double>(r.config.chunk), r.mean_ms);
      continue;
    }
    const auto base = base_mean.find(cell_key(r));
    if (base == base_mean.end()) continue;
    const double x =
        figure == Figure::SizeSpeedup ? static_cast<double>(r.graph.n) : r.graph.density;
    block_for(config_label(r.config)).points.emplace_back(x, base->second / r.mean_ms);
  }

  std::ostringstream out;
  bool first = true;
  for (Block& b : blocks) {
    std::sort(b.points.begin(), b.points.end());
    if (!first) out << "\n\n";
    first = false;
    out << "# " << b.label << "\n";
    for (const auto& [x, y] : b.points) out << fmt_double(x) << ' ' << fmt_double(y) << "\n";
  }
  return out.str();
}

}  // namespace bcbench
