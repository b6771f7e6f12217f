// Copyright (c) 2026, the bcbench authors
// See LICENSE.txt for license details

#include "bcbench/memory_model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bcbench {

namespace {

constexpr Bytes kMaxBytes = ~Bytes{0};

Bytes checked_add(Bytes a, Bytes b) {
  if (a > kMaxBytes - b) throw std::overflow_error("byte count exceeds 2^128");
  return a + b;
}

Bytes checked_mul(Bytes a, Bytes b) {
  if (a != 0 && b > kMaxBytes / a) throw std::overflow_error("byte count exceeds 2^128");
  return a * b;
}

Bytes finish(FootprintBreakdown& f) {
  Bytes t = 0;
  t = checked_add(t, f.input_bytes);
  t = checked_add(t, f.output_bytes);
  t = checked_add(t, f.aux_distance);
  t = checked_add(t, f.aux_sigma);
  t = checked_add(t, f.aux_delta);
  t = checked_add(t, f.aux_predecessor);
  return t;
}

}  // namespace

const char* to_string(GpuAlgorithm a) {
  switch (a) {
    case GpuAlgorithm::Jia: return "jia";
    case GpuAlgorithm::Sriram: return "sriram";
    case GpuAlgorithm::Shi: return "shi";
  }
  return "?";
}

GpuAlgorithm parse_gpu_algorithm(const std::string& name) {
  if (name == "jia") return GpuAlgorithm::Jia;
  if (name == "sriram") return GpuAlgorithm::Sriram;
  if (name == "shi") return GpuAlgorithm::Shi;
  throw std::invalid_argument("unknown algorithm: " + name);
}

FootprintBreakdown footprint_jia(std::uint64_t n, std::uint64_t m) {
  const Bytes N = n, M = m;
  const Bytes n2x4 = checked_mul(checked_mul(N, N), 4);
  FootprintBreakdown f;
  f.input_bytes = checked_mul(M, 8);  // edge list, two ints per arc
  f.output_bytes = checked_mul(N, 4);
  f.aux_distance = n2x4;  // per-source replication: n blocks x n entries
  f.aux_sigma = n2x4;
  f.aux_delta = n2x4;
  f.aux_predecessor = n2x4;
  f.total_bytes = finish(f);
  return f;
}

FootprintBreakdown footprint_sriram(std::uint64_t n, std::uint64_t m) {
  const Bytes N = n, M = m;
  const Bytes n2x4 = checked_mul(checked_mul(N, N), 4);
  FootprintBreakdown f;
  f.input_bytes = checked_mul(checked_add(M, N), 4);  // adjacency lists
  f.output_bytes = checked_mul(N, 4);
  f.aux_distance = n2x4;
  f.aux_sigma = n2x4;
  f.aux_delta = n2x4;
  f.aux_predecessor = n2x4;
  f.total_bytes = finish(f);
  return f;
}

FootprintBreakdown footprint_shi(std::uint64_t n, std::uint64_t m) {
  const Bytes N = n, M = m;
  FootprintBreakdown f;
  f.input_bytes = checked_mul(M, 8);
  f.output_bytes = checked_mul(N, 4);
  f.aux_distance = checked_mul(N, 4);  // single shared copy
  f.aux_sigma = checked_mul(N, 4);
  f.aux_delta = checked_mul(N, 4);
  f.aux_predecessor = checked_mul(N, N);  // n*n bools, one byte each
  f.total_bytes = finish(f);
  return f;
}

FootprintBreakdown footprint(GpuAlgorithm a, std::uint64_t n, std::uint64_t m) {
  switch (a) {
    case GpuAlgorithm::Jia: return footprint_jia(n, m);
    case GpuAlgorithm::Sriram: return footprint_sriram(n, m);
    case GpuAlgorithm::Shi: return footprint_shi(n, m);
  }
  throw std::logic_error("bad algorithm");
}

std::uint64_t max_feasible_nodes(GpuAlgorithm a, double density, Bytes budget_bytes) {
  if (density < 0.0) throw std::invalid_argument("density must be non-negative");

  auto arcs_for = [density](std::uint64_t n) -> std::uint64_t {
    const double m = std::ceil(density * static_cast<double>(n));
    return m >= static_cast<double>(std::numeric_limits<std::uint64_t>::max())
               ? std::numeric_limits<std::uint64_t>::max()
               : static_cast<std::uint64_t>(m);
  };
  auto feasible = [&](std::uint64_t n) {
    try {
      return footprint(a, n, arcs_for(n)).total_bytes <= budget_bytes;
    } catch (const std::overflow_error&) {
      return false;
    }
  };

  if (!feasible(1)) return 0;

  // Bracket by doubling, then binary-search the boundary; the result is
  // verified by construction: feasible(lo) and !feasible(lo + 1).
  std::uint64_t lo = 1, hi = 2;
  while (feasible(hi)) {
    lo = hi;
    if (hi > std::numeric_limits<std::uint64_t>::max() / 2)
      return std::numeric_limits<std::uint64_t>::max();
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

std::string format_bytes(Bytes b) {
  if (b == 0) return "0";
  std::string digits;
  while (b > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(b % 10)));
    b /= 10;
  }
  return {digits.rbegin(), digits.rend()};
}

double to_gb(Bytes b) { return static_cast<double>(b) / 1e9; }
double to_gib(Bytes b) { return static_cast<double>(b) / (1024.0 * 1024.0 * 1024.0); }
double to_mib(Bytes b) { return static_cast<double>(b) / (1024.0 * 1024.0); }

}  // namespace bcbench
