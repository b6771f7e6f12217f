// Copyright (c) 2026, the bcbench authors
// See LICENSE.txt for license details

#include "bcbench/strategies.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <cstring>
#include <limits>
#include <stdexcept>

namespace bcbench {

namespace {

// ---------------------------------------------------------------------------
// Atomic primitives. Relaxed ordering is sufficient everywhere: each BFS level
// is closed by a barrier before anything written in it is read by a later
// phase, and the values racing within a level are commutative (integer adds)
// or idempotent (distance claims, predecessor marks).

std::int32_t load_dist(std::int32_t& slot) {
  return std::atomic_ref<std::int32_t>(slot).load(std::memory_order_relaxed);
}

// Claims an undiscovered vertex. On failure `observed` holds the winner's
// value; the value is the same for every claimant within a level.
bool claim_dist(std::int32_t& slot, std::int32_t desired, std::int32_t& observed) {
  observed = -1;
  return std::atomic_ref<std::int32_t>(slot).compare_exchange_strong(
      observed, desired, std::memory_order_relaxed);
}

std::uint64_t load_sigma(std::uint64_t& slot) {
  return std::atomic_ref<std::uint64_t>(slot).load(std::memory_order_relaxed);
}

// Returns true when the running total wrapped (overflow).
bool add_sigma(std::uint64_t& slot, std::uint64_t amount) {
  const std::uint64_t prev =
      std::atomic_ref<std::uint64_t>(slot).fetch_add(amount, std::memory_order_relaxed);
  return prev > std::numeric_limits<std::uint64_t>::max() - amount;
}

template <typename Float>
void atomic_add(Float& slot, Float value) {
  std::atomic_ref<Float> ref(slot);
  Float old = ref.load(std::memory_order_relaxed);
  while (!ref.compare_exchange_weak(old, old + value, std::memory_order_relaxed)) {
  }
}

// Per-worker counters on separate cache lines.
struct alignas(64) WorkerStats {
  std::uint64_t atomic_ops = 0;
  std::uint64_t levels = 0;
  std::uint64_t max_task_len = 0;
};

struct alignas(64) WorkerFlag {
  bool value = false;
};

// Two-phase level barrier: workers arrive, the last arriver runs the
// coordinator step, and its generation bump releases everyone. Waiters spin
// briefly, then block on the generation word so oversubscribed teams stay
// civil.
class LevelBarrier {
 public:
  explicit LevelBarrier(unsigned team) : team_(team) {}

  void set_team(unsigned team) { team_ = team; }

  template <typename Fn>
  void arrive_and_coordinate(Fn&& coordinate) {
    const std::uint64_t gen = generation_.load(std::memory_order_acquire);
    if (arrivals_.fetch_add(1, std::memory_order_acq_rel) + 1 == team_) {
      coordinate();
      arrivals_.store(0, std::memory_order_relaxed);
      generation_.fetch_add(1, std::memory_order_acq_rel);
      generation_.notify_all();
    } else {
      for (int spins = 0; generation_.load(std::memory_order_acquire) == gen; ++spins) {
        if (spins > 1024) {
          generation_.wait(gen, std::memory_order_acquire);
          break;
        }
      }
    }
  }

 private:
  unsigned team_;
  std::atomic<unsigned> arrivals_{0};
  std::atomic<std::uint64_t> generation_{0};
};

Instrumentation merge_stats(std::span<const WorkerStats> stats) {
  Instrumentation out;
  for (const WorkerStats& s : stats) {
    out.atomic_ops += s.atomic_ops;
    out.levels += s.levels;
    out.max_task_len = std::max(out.max_task_len, s.max_task_len);
  }
  return out;
}

void require_workers(const StrategyConfig& cfg) {
  if (cfg.workers < 1) throw std::invalid_argument("worker count must be positive");
}

// The backward-phase term a successor w at the next level contributes to its
// predecessor. Computed in double, rounded once by the 32-bit accumulation.
float dependency_term(std::uint64_t sigma_pred, std::uint64_t sigma_succ, float delta_succ) {
  return static_cast<float>(static_cast<double>(sigma_pred) / static_cast<double>(sigma_succ) *
                            (1.0 + static_cast<double>(delta_succ)));
}

// Private per-worker state for the replicated strategies.
struct ReplicatedWorkspace {
  std::vector<std::int32_t> dist;
  std::vector<std::uint64_t> sigma;
  std::vector<float> delta;
  std::vector<VertexId> visit;        // discovery order (vertex-parallel only)
  std::vector<std::size_t> level_at;  // visit index where each level starts

  explicit ReplicatedWorkspace(VertexId n) { reset(n); }

  void reset(VertexId n) {
    dist.assign(n, -1);
    sigma.assign(n, 0);
    delta.assign(n, 0.0f);
    visit.clear();
    visit.reserve(n);
    level_at.clear();
  }
};

// ---------------------------------------------------------------------------
// Vertex-parallel schedule: one task per frontier vertex, scanning its whole
// out-list. Executed by the worker that owns this source.

void source_pass_vertex(const CsrGraph& g, VertexId s, ReplicatedWorkspace& ws, WorkerStats& st,
                        BcScores& bc, const SourceObserver& observer, std::atomic<bool>& overflow) {
  ws.reset(g.n);
  ws.dist[s] = 0;
  ws.sigma[s] = 1;
  ws.visit.push_back(s);
  ws.level_at.push_back(0);

  std::int32_t level = 0;
  std::size_t frontier_begin = 0;
  while (frontier_begin < ws.visit.size()) {
    const std::size_t frontier_end = ws.visit.size();
    st.levels++;
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      const VertexId v = ws.visit[i];
      st.max_task_len = std::max<std::uint64_t>(st.max_task_len, g.out_degree(v));
      const std::uint64_t sigma_v = load_sigma(ws.sigma[v]);
      for (VertexId w : g.out_neighbors(v)) {
        std::int32_t d = load_dist(ws.dist[w]);
        if (d < 0) {
          st.atomic_ops++;
          if (claim_dist(ws.dist[w], level + 1, d)) {
            d = level + 1;
            ws.visit.push_back(w);
          }
        }
        if (d == level + 1) {
          st.atomic_ops++;
          if (add_sigma(ws.sigma[w], sigma_v)) overflow.store(true, std::memory_order_relaxed);
        }
      }
    }
    ws.level_at.push_back(frontier_end);
    frontier_begin = frontier_end;
    ++level;
  }

  if (observer) observer(s, ws.dist, ws.sigma);

  // Backward: same task shape, deepest level first; delta[w] for the level
  // below is final before any task at this level reads it.
  const int deepest = static_cast<int>(ws.level_at.size()) - 2;
  for (int lev = deepest - 1; lev >= 0; --lev) {
    for (std::size_t i = ws.level_at[lev]; i < ws.level_at[lev + 1]; ++i) {
      const VertexId v = ws.visit[i];
      for (VertexId w : g.out_neighbors(v))
        if (ws.dist[w] == lev + 1) {
          st.atomic_ops++;
          atomic_add(ws.delta[v], dependency_term(ws.sigma[v], ws.sigma[w], ws.delta[w]));
        }
    }
  }

  for (VertexId v : ws.visit)
    if (v != s) {
      st.atomic_ops++;
      atomic_add(bc[v], static_cast<double>(ws.delta[v]));
    }
}

// ---------------------------------------------------------------------------
// Edge-parallel schedule: per level every arc is a unit task; an arc fires
// when its source vertex is on the frontier.

void source_pass_edge(const EdgeListGraph& g, VertexId s, ReplicatedWorkspace& ws, WorkerStats& st,
                      BcScores& bc, const SourceObserver& observer, std::atomic<bool>& overflow) {
  ws.reset(g.n);
  ws.dist[s] = 0;
  ws.sigma[s] = 1;
  const std::size_t m = g.num_arcs();
  if (m > 0) st.max_task_len = std::max<std::uint64_t>(st.max_task_len, 1);

  std::int32_t level = 0;
  for (;;) {
    st.levels++;
    bool discovered = false;  // level-done flag, aggregated over arc tasks
    for (std::size_t i = 0; i < m; ++i) {
      if (load_dist(ws.dist[g.sources[i]]) != level) continue;
      const VertexId v = g.targets[i];
      std::int32_t d = load_dist(ws.dist[v]);
      if (d < 0) {
        st.atomic_ops++;
        if (claim_dist(ws.dist[v], level + 1, d)) {
          d = level + 1;
          discovered = true;
        }
      }
      if (d == level + 1) {
        st.atomic_ops++;
        if (add_sigma(ws.sigma[v], load_sigma(ws.sigma[g.sources[i]])))
          overflow.store(true, std::memory_order_relaxed);
      }
    }
    if (!discovered) break;
    ++level;
  }

  if (observer) observer(s, ws.dist, ws.sigma);

  for (std::int32_t lev = level - 1; lev >= 0; --lev)
    for (std::size_t i = 0; i < m; ++i) {
      const VertexId u = g.sources[i];
      if (ws.dist[u] != lev) continue;
      const VertexId v = g.targets[i];
      if (ws.dist[v] == lev + 1) {
        st.atomic_ops++;
        atomic_add(ws.delta[u], dependency_term(ws.sigma[u], ws.sigma[v], ws.delta[v]));
      }
    }

  for (VertexId v = 0; v < g.n; ++v)
    if (v != s && ws.dist[v] >= 0) {
      st.atomic_ops++;
      atomic_add(bc[v], static_cast<double>(ws.delta[v]));
    }
}

template <typename SourceFn>
StrategyResult run_replicated(VertexId n, unsigned workers, SourceFn&& run_source) {
  StrategyResult result;
  result.scores.assign(n, 0.0);
  if (n == 0) return result;

  std::atomic<bool> overflow{false};
  std::vector<WorkerStats> stats(workers);

#pragma omp parallel num_threads(static_cast<int>(workers))
  {
    WorkerStats& st = stats[omp_get_thread_num()];
    ReplicatedWorkspace ws(n);
#pragma omp for schedule(dynamic)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(n); ++s) {
      if (overflow.load(std::memory_order_relaxed)) continue;
      run_source(static_cast<VertexId>(s), ws, st, result.scores, overflow);
    }
  }

  if (overflow.load()) throw std::overflow_error("shortest-path count overflows 64 bits");
  result.counters = merge_stats(stats);
  return result;
}

}  // namespace

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Seq: return "seq";
    case Strategy::VertexParallel: return "vertex";
    case Strategy::EdgeParallel: return "edge";
    case Strategy::WorkShared: return "shared";
  }
  return "?";
}

Strategy parse_strategy(const std::string& name) {
  if (name == "seq") return Strategy::Seq;
  if (name == "vertex") return Strategy::VertexParallel;
  if (name == "edge") return Strategy::EdgeParallel;
  if (name == "shared") return Strategy::WorkShared;
  throw std::invalid_argument("unknown strategy: " + name);
}

const char* to_string(PredecessorVariant v) {
  return v == PredecessorVariant::ByteMatrix ? "byte" : "bit";
}

PredecessorVariant parse_predecessor_variant(const std::string& name) {
  if (name == "byte") return PredecessorVariant::ByteMatrix;
  if (name == "bit") return PredecessorVariant::BitPacked;
  throw std::invalid_argument("unknown predecessor variant: " + name);
}

// ---------------------------------------------------------------------------
// PredecessorMatrix

PredecessorMatrix::PredecessorMatrix(VertexId n, PredecessorVariant variant)
    : n_(n), variant_(variant) {
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  if (variant_ == PredecessorVariant::ByteMatrix)
    bytes_.assign(cells, 0);
  else
    words_.assign((cells + 63) / 64, 0);
}

bool PredecessorMatrix::set(VertexId v, VertexId u) {
  const std::size_t idx = static_cast<std::size_t>(v) * n_ + u;
  if (variant_ == PredecessorVariant::ByteMatrix) {
    // Concurrent writers all store 1; a relaxed store is a plain store.
    std::atomic_ref<std::uint8_t>(bytes_[idx]).store(1, std::memory_order_relaxed);
    return false;
  }
  std::atomic_ref<std::uint64_t>(words_[idx >> 6])
      .fetch_or(std::uint64_t{1} << (idx & 63), std::memory_order_relaxed);
  return true;
}

bool PredecessorMatrix::unset(VertexId v, VertexId u) {
  const std::size_t idx = static_cast<std::size_t>(v) * n_ + u;
  if (variant_ == PredecessorVariant::ByteMatrix) {
    std::atomic_ref<std::uint8_t>(bytes_[idx]).store(0, std::memory_order_relaxed);
    return false;
  }
  std::atomic_ref<std::uint64_t>(words_[idx >> 6])
      .fetch_and(~(std::uint64_t{1} << (idx & 63)), std::memory_order_relaxed);
  return true;
}

bool PredecessorMatrix::test(VertexId v, VertexId u) const {
  const std::size_t idx = static_cast<std::size_t>(v) * n_ + u;
  if (variant_ == PredecessorVariant::ByteMatrix)
    return std::atomic_ref<std::uint8_t>(const_cast<std::uint8_t&>(bytes_[idx]))
               .load(std::memory_order_relaxed) != 0;
  const std::uint64_t word = std::atomic_ref<std::uint64_t>(
                                 const_cast<std::uint64_t&>(words_[idx >> 6]))
                                 .load(std::memory_order_relaxed);
  return (word >> (idx & 63)) & 1;
}

std::size_t PredecessorMatrix::byte_size() const {
  return variant_ == PredecessorVariant::ByteMatrix ? bytes_.size() : words_.size() * 8;
}

std::size_t PredecessorMatrix::storage_bytes(std::uint64_t n, PredecessorVariant variant) {
  const std::uint64_t cells = n * n;
  return variant == PredecessorVariant::ByteMatrix ? cells : (cells + 63) / 64 * 8;
}

namespace {
constexpr std::size_t kClearChunk = 1 << 16;  // bytes or words per clearing chunk
}

std::size_t PredecessorMatrix::clear_chunk_count() const {
  const std::size_t units =
      variant_ == PredecessorVariant::ByteMatrix ? bytes_.size() : words_.size();
  return (units + kClearChunk - 1) / kClearChunk;
}

void PredecessorMatrix::clear_chunk(std::size_t chunk_index) {
  const std::size_t begin = chunk_index * kClearChunk;
  if (variant_ == PredecessorVariant::ByteMatrix) {
    const std::size_t end = std::min(begin + kClearChunk, bytes_.size());
    if (begin < end) std::memset(bytes_.data() + begin, 0, end - begin);
  } else {
    const std::size_t end = std::min(begin + kClearChunk, words_.size());
    if (begin < end) std::memset(words_.data() + begin, 0, (end - begin) * sizeof(std::uint64_t));
  }
}

void PredecessorMatrix::clear() {
  for (std::size_t c = 0; c < clear_chunk_count(); ++c) clear_chunk(c);
}

// ---------------------------------------------------------------------------
// Strategy entry points

StrategyResult bc_vertex_parallel(const CsrGraph& g, const StrategyConfig& cfg,
                                  const SourceObserver& observer) {
  require_workers(cfg);
  return run_replicated(g.n, cfg.workers,
                        [&](VertexId s, ReplicatedWorkspace& ws, WorkerStats& st, BcScores& bc,
                            std::atomic<bool>& overflow) {
                          source_pass_vertex(g, s, ws, st, bc, observer, overflow);
                        });
}

StrategyResult bc_edge_parallel(const EdgeListGraph& g, const StrategyConfig& cfg,
                                const SourceObserver& observer) {
  require_workers(cfg);
  return run_replicated(g.n, cfg.workers,
                        [&](VertexId s, ReplicatedWorkspace& ws, WorkerStats& st, BcScores& bc,
                            std::atomic<bool>& overflow) {
                          source_pass_edge(g, s, ws, st, bc, observer, overflow);
                        });
}

StrategyResult bc_work_shared(const EdgeListGraph& g, const StrategyConfig& cfg,
                              const SourceObserver& observer) {
  require_workers(cfg);
  if (cfg.chunk < 1) throw std::invalid_argument("chunk size must be positive");

  const VertexId n = g.n;
  const std::size_t m = g.num_arcs();
  StrategyResult result;
  result.scores.assign(n, 0.0);
  if (n == 0) return result;

  // One shared workspace and one predecessor matrix serve every worker.
  std::vector<std::int32_t> dist(n);
  std::vector<std::uint64_t> sigma(n);
  std::vector<float> delta(n);
  PredecessorMatrix pred(n, cfg.predecessor_variant);

  const unsigned workers = cfg.workers;
  std::vector<WorkerStats> stats(workers);
  std::vector<WorkerFlag> flags(workers);
  LevelBarrier barrier(workers);
  std::atomic<std::size_t> next_chunk{0};
  std::atomic<bool> overflow{false};
  std::int32_t level = 0;
  bool level_continues = false;
  std::uint64_t levels_total = 0;

#pragma omp parallel num_threads(static_cast<int>(workers))
  {
    const unsigned team = static_cast<unsigned>(omp_get_num_threads());
    const unsigned tid = static_cast<unsigned>(omp_get_thread_num());
#pragma omp single
    barrier.set_team(team);  // the runtime may deliver fewer threads

    WorkerStats& st = stats[tid];
    WorkerFlag& my_flag = flags[tid];
    // Static vertex slice for the reset and fold phases.
    const VertexId slice_begin = static_cast<VertexId>(std::uint64_t{n} * tid / team);
    const VertexId slice_end = static_cast<VertexId>(std::uint64_t{n} * (tid + 1) / team);

    auto grab_chunks = [&](auto&& per_arc) {
      for (;;) {
        st.atomic_ops++;
        const std::size_t grab = next_chunk.fetch_add(1, std::memory_order_relaxed);
        const std::size_t begin = grab * cfg.chunk;
        if (begin >= m) return;
        const std::size_t end = std::min(begin + cfg.chunk, m);
        st.max_task_len = std::max<std::uint64_t>(st.max_task_len, end - begin);
        for (std::size_t i = begin; i < end; ++i) per_arc(i);
      }
    };

    for (VertexId s = 0; s < n; ++s) {
      // The matrix is all-zero here: freshly constructed for the first
      // source, swept clean at the end of every earlier one.
      for (VertexId v = slice_begin; v < slice_end; ++v) {
        dist[v] = -1;
        sigma[v] = 0;
        delta[v] = 0.0f;
      }
      barrier.arrive_and_coordinate([&] {
        dist[s] = 0;
        sigma[s] = 1;
        level = 0;
        level_continues = false;
        next_chunk.store(0, std::memory_order_relaxed);
      });

      // Forward: level-synchronous arc sweeps, chunks grabbed from the shared
      // counter. A worker notes discoveries locally and publishes them to its
      // flag slot once per level; the coordinator ORs the flags to decide
      // whether another level follows.
      for (;;) {
        bool discovered = false;
        grab_chunks([&](std::size_t i) {
          if (load_dist(dist[g.sources[i]]) != level) return;
          const VertexId v = g.targets[i];
          std::int32_t d = load_dist(dist[v]);
          if (d < 0) {
            st.atomic_ops++;
            if (claim_dist(dist[v], level + 1, d)) {
              d = level + 1;
              discovered = true;
            }
          }
          if (d == level + 1) {
            st.atomic_ops++;
            if (add_sigma(sigma[v], load_sigma(sigma[g.sources[i]])))
              overflow.store(true, std::memory_order_relaxed);
            if (pred.set(v, g.sources[i])) st.atomic_ops++;
          }
        });
        my_flag.value = discovered;
        barrier.arrive_and_coordinate([&] {
          level_continues = false;
          for (WorkerFlag& f : flags) {
            level_continues = level_continues || f.value;
            f.value = false;
          }
          levels_total++;
          if (level_continues)
            ++level;
          else if (observer)
            observer(s, dist, sigma);
          next_chunk.store(0, std::memory_order_relaxed);
        });
        if (!level_continues) break;
      }

      // Backward: one chunked sweep per level, deepest first, consulting the
      // predecessor matrix. dist/sigma are stable now; only delta races, via
      // the atomic float add.
      for (std::int32_t lev = level - 1; lev >= 0; --lev) {
        grab_chunks([&](std::size_t i) {
          const VertexId u = g.sources[i];
          if (dist[u] != lev) return;
          const VertexId v = g.targets[i];
          if (!pred.test(v, u)) return;
          st.atomic_ops++;
          atomic_add(delta[u], dependency_term(sigma[u], sigma[v], delta[v]));
        });
        barrier.arrive_and_coordinate(
            [&] { next_chunk.store(0, std::memory_order_relaxed); });
      }

      // Reset sweep: only arcs can have marked the matrix, so visiting each
      // arc once restores the all-zero state for the next source.
      grab_chunks([&](std::size_t i) {
        if (pred.test(g.targets[i], g.sources[i]) && pred.unset(g.targets[i], g.sources[i]))
          st.atomic_ops++;
      });
      barrier.arrive_and_coordinate([&] { next_chunk.store(0, std::memory_order_relaxed); });

      // Fold this worker's slice; the next source's init barrier keeps other
      // workers' arc sweeps from touching it early.
      for (VertexId v = slice_begin; v < slice_end; ++v)
        if (v != s && dist[v] >= 0) result.scores[v] += static_cast<double>(delta[v]);
    }
  }

  if (overflow.load()) throw std::overflow_error("shortest-path count overflows 64 bits");
  result.counters = merge_stats(stats);
  result.counters.levels = levels_total;
  return result;
}

StrategyResult bc_seq_instrumented(const CsrGraph& g, const SourceObserver& observer) {
  StrategyResult result;
  result.scores.assign(g.n, 0.0);
  SourceWorkspace ws;
  for (VertexId s = 0; s < g.n; ++s) {
    bfs_forward(g, s, ws);
    if (observer) observer(s, ws.dist, ws.sigma);
    accumulate_dependencies(g, ws);
    for (VertexId v : ws.visit_order) {
      result.counters.max_task_len =
          std::max<std::uint64_t>(result.counters.max_task_len, g.out_degree(v));
      if (v != s) result.scores[v] += ws.delta[v];
    }
    result.counters.levels += static_cast<std::uint64_t>(ws.dist[ws.visit_order.back()]) + 1;
  }
  return result;
}

StrategyResult run_strategy(const EdgeListGraph& edges, const CsrGraph& csr,
                            const StrategyConfig& cfg, const SourceObserver& observer) {
  switch (cfg.strategy) {
    case Strategy::Seq: return bc_seq_instrumented(csr, observer);
    case Strategy::VertexParallel: return bc_vertex_parallel(csr, cfg, observer);
    case Strategy::EdgeParallel: return bc_edge_parallel(edges, cfg, observer);
    case Strategy::WorkShared: return bc_work_shared(edges, cfg, observer);
  }
  throw std::logic_error("bad strategy");
}

}  // namespace bcbench
