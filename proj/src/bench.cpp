// bench.cpp - timing loops and CSV writer.

#include "krmul/bench.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "krmul/alloc_count.hpp"
#include "krmul/karatsuba_roche.hpp"
#include "krmul/karatsuba_std.hpp"
#include "krmul/schoolbook.hpp"

namespace krmul {

const char* algo_name(Algo a) {
  switch (a) {
    case Algo::sb: return "SB";
    case Algo::ks: return "KS";
    default: return "KR";
  }
}

bool algo_from_name(std::string_view s, Algo& out) {
  auto eq = [&](std::string_view t) {
    if (s.size() != t.size()) return false;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (std::tolower(static_cast<unsigned char>(s[i])) != t[i]) return false;
    return true;
  };
  if (eq("sb")) { out = Algo::sb; return true; }
  if (eq("ks")) { out = Algo::ks; return true; }
  if (eq("kr")) { out = Algo::kr; return true; }
  return false;
}

std::size_t default_reps(std::size_t n) {
  if (n == 0) return 4;
  const std::size_t budget = (std::size_t(1) << 22) / (n * n);
  return budget > 4 ? budget : 4;
}

std::vector<std::size_t> bench_lengths(const BenchConfig& cfg) {
  std::vector<std::size_t> out;
  if (cfg.step) {
    for (std::size_t n = cfg.min_len; n <= cfg.max_len; n += cfg.step)
      out.push_back(n);
  } else {
    const std::size_t f = cfg.geometric > 1 ? cfg.geometric : 2;
    for (std::size_t n = cfg.min_len; n <= cfg.max_len; n *= f)
      out.push_back(n);
  }
  return out;
}

BenchRecord bench_square(const BenchConfig& cfg, std::size_t n, Algo algo) {
  std::mt19937_64 gen(cfg.seed * 0x9e3779b97f4a7c15ull + n * 3 +
                      std::size_t(algo));
  std::uniform_int_distribution<std::uint32_t> dist(0, cfg.rho - 1);
  std::vector<limb> a(n), b(n), d(2 * n);
  for (auto& l : a) l = limb(dist(gen));
  for (auto& l : b) l = limb(dist(gen));

  BenchRecord rec;
  rec.n = n;
  rec.algo = algo;
  rec.reps = cfg.reps_override ? cfg.reps_override : default_reps(n);

  auto run_once = [&]() {
    switch (algo) {
      case Algo::sb:
        sb_mul(cfg.rho, d.data(), a.data(), n, b.data(), n);
        break;
      case Algo::ks: {
        ScratchArena arena(ks_scratch_limbs(n, n));
        ks_mul(cfg.rho, d.data(), a.data(), n, b.data(), n, arena,
               cfg.threshold);
        rec.peak_scratch_limbs = arena.high_water();
        break;
      }
      case Algo::kr:
        mpi_mul_kr(cfg.rho, d.data(), a.data(), n, b.data(), n, cfg.threshold);
        break;
    }
  };

  run_once();  // warm-up, excluded from the measurement

  const std::uint64_t allocs_before = allocs::count();
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < rec.reps; ++i) run_once();
  const auto t1 = std::chrono::steady_clock::now();
  rec.heap_allocs = allocs::count() - allocs_before;
  rec.total_ns = std::uint64_t(
      std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  rec.avg_ns = rec.total_ns / rec.reps;
  return rec;
}

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  std::vector<BenchRecord> records;
  for (std::size_t n : bench_lengths(cfg))
    for (Algo algo : cfg.algos) records.push_back(bench_square(cfg, n, algo));
  return records;
}

void write_csv(std::ostream& os, const std::vector<BenchRecord>& records) {
  os << "n,algo,reps,total_ns,avg_ns,peak_scratch_limbs,heap_allocs\n";
  for (const auto& r : records)
    os << r.n << ',' << algo_name(r.algo) << ',' << r.reps << ',' << r.total_ns
       << ',' << r.avg_ns << ',' << r.peak_scratch_limbs << ','
       << r.heap_allocs << '\n';
}

double log2_slope(const std::vector<std::pair<std::size_t, std::uint64_t>>& pts) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = double(pts.size());
  for (const auto& [n, t] : pts) {
    const double x = std::log2(double(n));
    const double y = std::log2(double(t ? t : 1));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace krmul
