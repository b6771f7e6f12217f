// Copyright (c) 2026, the bcbench authors
// See LICENSE.txt for license details

#include <omp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bcbench/bench.hpp"
#include "bcbench/brandes.hpp"
#include "bcbench/generator.hpp"
#include "bcbench/graph.hpp"
#include "bcbench/memory_model.hpp"
#include "bcbench/strategies.hpp"

namespace {

using namespace bcbench;

// Outputs land in a temp file first so failures never leave partial files.
void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::string group_digits(const std::string& digits) {
  std::string out;
  const std::size_t len = digits.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (i > 0 && (len - i) % 3 == 0) out += ',';
    out += digits[i];
  }
  return out;
}

std::string pretty_bytes(Bytes b) { return group_digits(format_bytes(b)); }

struct GlobalFlags {
  unsigned threads_cap = 0;  // 0: uncapped
  std::uint64_t memory_cap = 0;
  bool memory_cap_set = false;
  bool quiet = false;
};

unsigned capped_workers(unsigned requested, const GlobalFlags& g) {
  if (g.threads_cap > 0 && requested > g.threads_cap) return g.threads_cap;
  return requested;
}

double max_rel_error(const BcScores& got, const BcScores& ref) {
  double worst = 0.0;
  for (std::size_t v = 0; v < ref.size(); ++v) {
    const double denom = std::max(std::abs(ref[v]), 1e-12);
    worst = std::max(worst, std::abs(got[v] - ref[v]) / denom);
  }
  return worst;
}

std::string format_scores(const BcScores& scores) {
  std::string out;
  char buf[80];
  double sum = 0.0;
  for (std::size_t v = 0; v < scores.size(); ++v) {
    std::snprintf(buf, sizeof buf, "%zu %.9g\n", v, scores[v]);
    out += buf;
    sum += scores[v];
  }
  std::snprintf(buf, sizeof buf, "# sum %.9g\n", sum);
  out += buf;
  return out;
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
  std::uint64_t nodes = 0;
  std::uint64_t beta = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_generate(const GenerateArgs& a, const GlobalFlags& g) {
  if (a.nodes > std::numeric_limits<VertexId>::max() ||
      a.beta > std::numeric_limits<VertexId>::max())
    throw std::invalid_argument("nodes/beta exceed the 32-bit vertex id range");
  BaParams params;
  params.nodes = static_cast<VertexId>(a.nodes);
  params.beta = static_cast<VertexId>(a.beta);
  params.seed = a.seed;
  const EdgeListGraph graph = generate_ba_directed(params);

  std::ostringstream body;
  const std::string comment = "ba nodes=" + std::to_string(a.nodes) +
                              " beta=" + std::to_string(a.beta) +
                              " seed=" + std::to_string(a.seed) + " rng=" + kGeneratorRngId;
  write_edge_list(body, graph, std::span<const std::string>(&comment, 1));
  write_file_atomic(a.out, body.str());
  if (!g.quiet)
    std::cerr << "wrote " << a.out << ": n=" << graph.n << " m=" << graph.num_arcs()
              << " d=" << edge_density(graph) << "\n";
  return 0;
}

struct BcArgs {
  std::string strategy = "seq";
  unsigned workers = static_cast<unsigned>(omp_get_max_threads());
  std::size_t chunk = 128;
  std::string pred = "byte";
  std::string in;
  std::string out;
};

int cmd_bc(const BcArgs& a, const GlobalFlags& g) {
  const EdgeListGraph edges = load_edge_list_file(a.in);
  const CsrGraph csr = build_csr(edges);

  StrategyConfig cfg;
  cfg.strategy = parse_strategy(a.strategy);
  cfg.workers = capped_workers(a.workers, g);
  cfg.chunk = a.chunk;
  cfg.predecessor_variant = parse_predecessor_variant(a.pred);

  const StrategyResult result = run_strategy(edges, csr, cfg);
  if (!g.quiet)
    std::cerr << config_label(cfg) << ": levels=" << result.counters.levels
              << " atomic_ops=" << result.counters.atomic_ops
              << " max_task_len=" << result.counters.max_task_len << "\n";

  const std::string text = format_scores(result.scores);
  if (a.out.empty())
    std::cout << text;
  else
    write_file_atomic(a.out, text);
  return 0;
}

struct VerifyArgs {
  std::string in;
  std::string strategies = "vertex,edge,shared";
  unsigned workers = static_cast<unsigned>(omp_get_max_threads());
  std::size_t chunk = 128;
  std::string pred = "byte";
  bool corrupt = false;  // test hook: perturbs strategy output to force FAIL
};

int cmd_verify(const VerifyArgs& a, const GlobalFlags& g) {
  const EdgeListGraph edges = load_edge_list_file(a.in);
  const CsrGraph csr = build_csr(edges);
  const BcScores oracle = bc_sequential(csr);

  std::cout << "graph n=" << csr.n << " m=" << csr.num_arcs() << "\n";
  bool all_pass = true;

  if (csr.n <= kBruteforceMaxN && csr.n > 0) {
    const BcScores brute = bc_bruteforce(csr);
    const double err = max_rel_error(oracle, brute);
    const bool pass = err <= 1e-9;
    all_pass = all_pass && pass;
    std::printf("bruteforce vs seq: max rel err %.3g %s (tol 1e-09)\n", err,
                pass ? "PASS" : "FAIL");
  }

  std::stringstream names(a.strategies);
  std::string name;
  while (std::getline(names, name, ',')) {
    StrategyConfig cfg;
    cfg.strategy = parse_strategy(name);
    cfg.workers = capped_workers(a.workers, g);
    cfg.chunk = a.chunk;
    cfg.predecessor_variant = parse_predecessor_variant(a.pred);

    StrategyResult result = run_strategy(edges, csr, cfg);
    if (a.corrupt && !result.scores.empty()) result.scores[0] += 1.0;

    const double tol = checksum_tolerance(cfg.strategy);
    const double err = max_rel_error(result.scores, oracle);
    const bool pass = err <= tol;
    all_pass = all_pass && pass;
    std::printf("%s: max rel err %.3g %s (tol %g)\n", config_label(cfg).c_str(), err,
                pass ? "PASS" : "FAIL", tol);
  }
  return all_pass ? 0 : 1;
}

struct MemArgs {
  std::string algo;
  std::uint64_t nodes = 0;
  double density = 0.0;
  std::uint64_t budget = 0;
  bool budget_set = false;
};

int cmd_mem(const MemArgs& a, const GlobalFlags&) {
  const GpuAlgorithm algo = parse_gpu_algorithm(a.algo);
  const std::uint64_t m =
      static_cast<std::uint64_t>(std::ceil(a.density * static_cast<double>(a.nodes)));
  const FootprintBreakdown f = footprint(algo, a.nodes, m);

  std::cout << "algorithm: " << to_string(algo) << "\n";
  std::cout << "nodes: " << a.nodes << "  arcs: " << m << "  density: " << a.density << "\n";
  std::cout << "input:       " << pretty_bytes(f.input_bytes) << " bytes\n";
  std::cout << "output:      " << pretty_bytes(f.output_bytes) << " bytes\n";
  std::cout << "distance:    " << pretty_bytes(f.aux_distance) << " bytes\n";
  std::cout << "sigma:       " << pretty_bytes(f.aux_sigma) << " bytes\n";
  std::cout << "delta:       " << pretty_bytes(f.aux_delta) << " bytes\n";
  std::cout << "predecessor: " << pretty_bytes(f.aux_predecessor) << " bytes\n";
  std::cout << "total:       " << pretty_bytes(f.total_bytes) << " bytes\n";
  std::printf("total: %.2f GB / %.2f GiB / %.2f MiB\n", to_gb(f.total_bytes),
              to_gib(f.total_bytes), to_mib(f.total_bytes));

  if (a.budget_set) {
    const std::uint64_t n = max_feasible_nodes(algo, a.density, Bytes{a.budget});
    std::cout << "max feasible nodes within " << pretty_bytes(Bytes{a.budget})
              << " bytes at density " << a.density << ": " << n << "\n";
  }
  return 0;
}

struct BenchArgs {
  std::string spec;
  std::string out;
};

int cmd_bench(const BenchArgs& a, const GlobalFlags& g) {
  std::ifstream in(a.spec);
  if (!in) throw std::runtime_error("cannot open " + a.spec);
  SweepSpec spec = parse_sweep_spec(in);
  if (g.threads_cap > 0) spec.workers = capped_workers(spec.workers, g);
  if (g.memory_cap_set) spec.memory_cap = Bytes{g.memory_cap};

  if (!g.quiet)
    std::cerr << "sweep: workers=" << spec.workers << " reps=" << spec.repetitions
              << " seed=" << spec.seed << " rng=" << kGeneratorRngId << "\n";

  const std::vector<BenchRecord> records = sweep(spec, g.quiet ? nullptr : &std::cerr);
  write_file_atomic(a.out, emit_csv(records));

  // One speedup table per graph cell, in record order.
  std::size_t begin = 0;
  while (begin < records.size()) {
    std::size_t end = begin;
    while (end < records.size() && records[end].graph.n == records[begin].graph.n &&
           records[end].graph.beta == records[begin].graph.beta &&
           records[end].graph.seed == records[begin].graph.seed)
      ++end;
    const SpeedupTable table = compute_speedups(
        std::span<const BenchRecord>(records.data() + begin, end - begin), spec.baseline);
    std::cout << "graph n=" << records[begin].graph.n << " beta=" << records[begin].graph.beta
              << " d=" << records[begin].graph.density << " (baseline "
              << to_string(spec.baseline) << ")\n";
    for (const auto& row : table.rows)
      std::printf("  %-24s speedup %.3f\n", row.label.c_str(), row.ratio);
    begin = end;
  }
  if (!g.quiet) std::cerr << "wrote " << a.out << " (" << records.size() << " records)\n";
  return 0;
}

struct PlotArgs {
  std::string in;
  std::string figure;
  std::string baseline = "shared";
  std::string out;
};

int cmd_plotdata(const PlotArgs& a, const GlobalFlags&) {
  std::ifstream in(a.in);
  if (!in) throw std::runtime_error("cannot open " + a.in);
  const std::vector<BenchRecord> records = parse_csv(in);
  const std::string text =
      plot_data(records, parse_figure(a.figure), parse_strategy(a.baseline));
  if (a.out.empty())
    std::cout << text;
  else
    write_file_atomic(a.out, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"betweenness-centrality strategies, generator, memory model, and benchmarks"};
  app.require_subcommand(1);

  GlobalFlags global;
  app.add_option("--threads", global.threads_cap, "cap on worker threads (0 = uncapped)");
  auto* cap_opt = app.add_option("--memory-cap", global.memory_cap,
                                 "byte budget for sweep skip decisions");
  app.add_flag("--quiet", global.quiet, "suppress progress output");

  GenerateArgs gen;
  auto* c_gen = app.add_subcommand("generate", "write a seeded scale-free graph");
  c_gen->add_option("--nodes", gen.nodes, "vertex count")->required();
  c_gen->add_option("--beta", gen.beta, "undirected edges per new node")->required();
  c_gen->add_option("--seed", gen.seed, "rng seed");
  c_gen->add_option("--out", gen.out, "output edge-list file")->required();

  BcArgs bc;
  auto* c_bc = app.add_subcommand("bc", "compute betweenness centrality");
  c_bc->add_option("--strategy", bc.strategy, "seq|vertex|edge|shared");
  c_bc->add_option("--workers", bc.workers, "worker threads");
  c_bc->add_option("--chunk", bc.chunk, "arc chunk size (shared strategy)");
  c_bc->add_option("--pred", bc.pred, "byte|bit predecessor matrix (shared strategy)");
  c_bc->add_option("--in", bc.in, "input edge-list file")->required();
  c_bc->add_option("--out", bc.out, "output scores file (default stdout)");

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "check strategies against the sequential oracle");
  c_ver->add_option("--in", ver.in, "input edge-list file")->required();
  c_ver->add_option("--strategies", ver.strategies, "comma-separated strategy list");
  c_ver->add_option("--workers", ver.workers, "worker threads");
  c_ver->add_option("--chunk", ver.chunk, "arc chunk size (shared strategy)");
  c_ver->add_option("--pred", ver.pred, "byte|bit predecessor matrix (shared strategy)");
  c_ver->add_flag("--corrupt", ver.corrupt)->group("");  // hidden test hook

  MemArgs mem;
  auto* c_mem = app.add_subcommand("mem", "modeled GPU memory footprint");
  c_mem->add_option("--algo", mem.algo, "jia|sriram|shi")->required();
  c_mem->add_option("--nodes", mem.nodes, "vertex count")->required();
  c_mem->add_option("--density", mem.density, "arcs per vertex")->required();
  auto* budget_opt = c_mem->add_option("--budget", mem.budget, "byte budget for feasibility");

  BenchArgs bench;
  auto* c_bench = app.add_subcommand("bench", "run a timed sweep from a spec file");
  c_bench->add_option("--spec", bench.spec, "key=value sweep spec file")->required();
  c_bench->add_option("--out", bench.out, "output CSV file")->required();

  PlotArgs plot;
  auto* c_plot = app.add_subcommand("plotdata", "pivot a results CSV into x/y blocks");
  c_plot->add_option("--in", plot.in, "input CSV file")->required();
  c_plot->add_option("--figure", plot.figure, "size|density|chunk")->required();
  c_plot->add_option("--baseline", plot.baseline, "baseline strategy for speedups");
  c_plot->add_option("--out", plot.out, "output file (default stdout)");

  if (argc <= 1) {
    std::cout << app.help();
    return 2;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  global.memory_cap_set = cap_opt->count() > 0;
  mem.budget_set = budget_opt->count() > 0;

  try {
    if (c_gen->parsed()) return cmd_generate(gen, global);
    if (c_bc->parsed()) return cmd_bc(bc, global);
    if (c_ver->parsed()) return cmd_verify(ver, global);
    if (c_mem->parsed()) return cmd_mem(mem, global);
    if (c_bench->parsed()) return cmd_bench(bench, global);
    if (c_plot->parsed()) return cmd_plotdata(plot, global);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
