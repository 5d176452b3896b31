#pragma once
// karatsuba_roche.hpp - space-efficient Karatsuba (KR): every intermediate
// product lives inside the 2n-limb output buffer, so a multiplication
// performs no heap allocation and keeps only O(1) carry state per recursion
// frame (O(log n) auxiliary space overall).
//
// The workhorse is the equal length additive problem: given a0, a1, b, c in
// [0, rho^n) with c preloaded in the first n limbs of the 2n-limb buffer d,
// compute
//
//     ret*rho^(2n) + d = (a0 - a1)*b + c*rho^n          (kr_mul)
//     ret*rho^(2n) + d = a*b + c*rho^n                  (kr_mul_top)
//
// For even n the buffer is treated as four k-limb quarters d00..d11
// (k = n/2) with one signed carry per quarter; the step sequences drive the
// quarters so that the three half-size products overlap without clobbering
// live data. The cross difference
//
//     E = a0_hi - a1_hi - a0_lo + a1_lo,   |E| <= 2(rho^k - 1)
//
// does not always fit k limbs, which splits the middle product into three
// cases (plus a sign flip inside case 1). Odd n reduces to n-1 plus two
// scalar correction rows. General n x m products walk blocks of m limbs.

#include <cstddef>
#include <cstdint>

#include "krmul/limb_core.hpp"

namespace krmul {

enum class ECase { case1_nonneg, case1_neg, case2, case3 };

// Classification of E from its k-limb representation plus carry:
//   kappa_e =  0            -> case1_nonneg   (0 <= E < rho^k)
//   kappa_e = -1, limbs != 0 -> case1_neg     (-rho^k < E < 0)
//   kappa_e = -1, limbs == 0 -> case3         (E == -rho^k exactly)
//   kappa_e =  1            -> case2          (rho^k <= E)
//   kappa_e = -2            -> case3          (E < -rho^k)
// Anything outside {-2..1} means an upstream carry bug.
ECase classify_e(int kappa_e, const limb* e, std::size_t k);

// Hit counters bumped by classify_e, for coverage reporting.
struct ECaseCounters {
  std::uint64_t case1_nonneg = 0;
  std::uint64_t case1_neg = 0;
  std::uint64_t case2 = 0;
  std::uint64_t case3 = 0;
  std::uint64_t e_exact_pow = 0;  // the E == -rho^k point, also counted in case3
};
ECaseCounters ecase_counters();
void reset_ecase_counters();

struct QuarterCarries {
  int k00 = 0, k01 = 0, k10 = 0, k11 = 0;
};

// Final carry pass: requires k11 == 0; propagates k10 into the d01 quarter
// and the updated k01 into d00, leaving k01 == k10 == 0. d spans 4k limbs.
// Returns the merged k00.
int finalize_carries(std::uint32_t rho, QuarterCarries& q, limb* d,
                     std::size_t k);

int kr_mul(std::uint32_t rho, limb* d, const limb* a0, const limb* a1,
           const limb* b, std::size_t n,
           std::size_t threshold = kDefaultThreshold);

int kr_mul_top(std::uint32_t rho, limb* d, const limb* a, const limb* b,
               std::size_t n, std::size_t threshold = kDefaultThreshold);

// d[0..n+m) = a * b for n >= m >= 1; q = floor(n/m) calls of kr_mul_top plus
// one recursive prefix product when m does not divide n.
void kr_mpi_mul(std::uint32_t rho, limb* d, const limb* a, std::size_t n,
                const limb* b, std::size_t m,
                std::size_t threshold = kDefaultThreshold);

// Entry point for arbitrary lengths: swaps operands so n >= m and zero-fills
// the product when either operand is empty.
void mpi_mul_kr(std::uint32_t rho, limb* d, const limb* a, std::size_t n,
                const limb* b, std::size_t m,
                std::size_t threshold = kDefaultThreshold);

// ---- instrumentation -------------------------------------------------

// Maximum recursion depth reached since the last reset (per thread).
void kr_depth_reset();
int kr_max_depth();

// Debug hook: when set, every even-length additive instance reports a
// snapshot after each numbered step of its case table, plus one snapshot
// with step == kKrStepFinal after the final carry pass. Single-threaded use
// only; keep it null in production.
inline constexpr int kKrStepFinal = 99;

struct KrStepSnapshot {
  int table;        // 1, 2 or 3, matching the E case (provisional before step 2)
  int step;         // row number within the table, or kKrStepFinal
  bool top;         // true for the kr_mul_top form (no subtracted operand)
  bool e_negative;  // case 1 with E < 0 (|E| is what d11 holds)
  std::size_t k;    // quarter size; the window spans 4k limbs
  const limb* d;    // window base
  const limb* a0;   // n = 2k limbs
  const limb* a1;   // null when top
  const limb* b;
  int k00, k01, k10, k11;
};
using KrStepObserver = void (*)(void* ctx, const KrStepSnapshot& snap);
void set_kr_step_observer(KrStepObserver fn, void* ctx);

}  // namespace krmul
