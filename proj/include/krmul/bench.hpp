#pragma once
// bench.hpp - square-multiplication timing harness with CSV output.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "krmul/limb_core.hpp"

namespace krmul {

enum class Algo { sb, ks, kr };

const char* algo_name(Algo a);           // "SB" / "KS" / "KR"
bool algo_from_name(std::string_view s, Algo& out);  // accepts sb/ks/kr, any case

struct BenchRecord {
  std::size_t n = 0;
  Algo algo = Algo::sb;
  std::size_t reps = 0;
  std::uint64_t total_ns = 0;
  std::uint64_t avg_ns = 0;
  std::size_t peak_scratch_limbs = 0;
  std::uint64_t heap_allocs = 0;
};

struct BenchConfig {
  std::uint32_t rho = 1u << 16;
  std::size_t min_len = 128;
  std::size_t max_len = 8192;
  std::size_t step = 0;          // arithmetic step; 0 selects geometric
  std::size_t geometric = 2;     // growth factor when step == 0
  std::vector<Algo> algos = {Algo::sb, Algo::ks, Algo::kr};
  std::size_t threshold = kDefaultThreshold;
  std::uint64_t seed = 1;
  std::size_t reps_override = 0;  // 0 = use the default schedule
};

// Default repetition schedule, non-increasing in n.
std::size_t default_reps(std::size_t n);

std::vector<std::size_t> bench_lengths(const BenchConfig& cfg);

// Times `reps` multiplications of one random n x n pair (one untimed
// warm-up first). Heap allocations are counted inside the timed region
// only; for KS that includes the per-multiply arena.
BenchRecord bench_square(const BenchConfig& cfg, std::size_t n, Algo algo);

std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

// Header: n,algo,reps,total_ns,avg_ns,peak_scratch_limbs,heap_allocs
void write_csv(std::ostream& os, const std::vector<BenchRecord>& records);

// Least-squares slope of log2(avg_ns) against log2(n).
double log2_slope(const std::vector<std::pair<std::size_t, std::uint64_t>>& pts);

}  // namespace krmul
