// Copyright (c) 2026, the bcbench authors
// See LICENSE.txt for license details

#ifndef BCBENCH_MEMORY_MODEL_HPP
#define BCBENCH_MEMORY_MODEL_HPP

#include <cstdint>
#include <string>

namespace bcbench {

// Byte counts are exact; 128-bit arithmetic keeps n in the quintillions
// representable. Helpers throw std::overflow_error past 2^128 - 1.
using Bytes = unsigned __int128;

/// The three modeled GPU designs. Jia and Sriram replicate the per-source
/// auxiliary arrays n times (one block per source) and differ only in the
/// input representation (edge list vs adjacency lists); Shi keeps a single
/// shared copy plus an n*n byte predecessor matrix.
enum class GpuAlgorithm { Jia, Sriram, Shi };

const char* to_string(GpuAlgorithm a);
GpuAlgorithm parse_gpu_algorithm(const std::string& name);

/// Itemized global-memory footprint with 4-byte int/float entries and 1-byte
/// bools. total_bytes always equals the sum of the six parts.
struct FootprintBreakdown {
  Bytes input_bytes = 0;
  Bytes output_bytes = 0;
  Bytes aux_distance = 0;
  Bytes aux_sigma = 0;
  Bytes aux_delta = 0;
  Bytes aux_predecessor = 0;
  Bytes total_bytes = 0;
};

// Totals: Jia 16n^2 + 8m + 4n; Sriram 16n^2 + 4m + 8n; Shi n^2 + 8m + 16n.
FootprintBreakdown footprint_jia(std::uint64_t n, std::uint64_t m);
FootprintBreakdown footprint_sriram(std::uint64_t n, std::uint64_t m);
FootprintBreakdown footprint_shi(std::uint64_t n, std::uint64_t m);
FootprintBreakdown footprint(GpuAlgorithm a, std::uint64_t n, std::uint64_t m);

/// Largest n such that footprint(a, n, ceil(density * n)) fits in the budget.
std::uint64_t max_feasible_nodes(GpuAlgorithm a, double density, Bytes budget_bytes);

std::string format_bytes(Bytes b);   // exact decimal digits
double to_gb(Bytes b);               // 10^9 bytes
double to_gib(Bytes b);              // 2^30 bytes
double to_mib(Bytes b);              // 2^20 bytes

}  // namespace bcbench

#endif  // BCBENCH_MEMORY_MODEL_HPP
