// karatsuba_roche.cpp - the in-place additive multiplication engine.
//
// Even-length step sequence (quarter columns hold kappa*rho^k + limbs):
//
//  0: d00|d01 = c (preloaded), d10|d11 arbitrary
//  1: d01 -= d00                       -> d01 = c1 - c0
//  2: d11 := E (classified, made non-negative in place; kappa11 ends 0)
//  3: recurse into d01|d10: middle product plus the d01 limbs as preload
//  4: (cases 2/3 only) d01 += bl - bh resp. bh - bl
//  *: d11 := d01 - d10 (value copy; rescues c1-c0+p20 before step below)
//  *: recurse into d00|d01: high product plus c0 as preload
//  *: d10 += d01
//  *: d01 := d00 + d11
//  *: recurse into d10|d11: low product plus the d10 limbs as preload
//  *: d01 += d10
//  *: d10 += d11
//
// After the last step kappa11 == 0 holds structurally; the final carry pass
// pushes kappa10 into d01 and kappa01 into d00 and returns the merged
// kappa00. Each step's quarter values match the case table row for row; the
// step observer exposes them for verification.

#include "krmul/karatsuba_roche.hpp"

#include <atomic>
#include <cassert>
#include <cstdlib>

#include "krmul/schoolbook.hpp"

namespace krmul {
namespace {

std::atomic<std::uint64_t> g_case1_nonneg{0};
std::atomic<std::uint64_t> g_case1_neg{0};
std::atomic<std::uint64_t> g_case2{0};
std::atomic<std::uint64_t> g_case3{0};
std::atomic<std::uint64_t> g_e_exact{0};

KrStepObserver g_observer = nullptr;
void* g_observer_ctx = nullptr;

thread_local int t_depth = 0;
thread_local int t_max_depth = 0;

struct DepthGuard {
  DepthGuard() {
    if (++t_depth > t_max_depth) t_max_depth = t_depth;
  }
  ~DepthGuard() { --t_depth; }
};

std::size_t effective_threshold(std::size_t threshold) {
  return threshold < 2 ? 2 : threshold;
}

}  // namespace

ECaseCounters ecase_counters() {
  ECaseCounters c;
  c.case1_nonneg = g_case1_nonneg.load(std::memory_order_relaxed);
  c.case1_neg = g_case1_neg.load(std::memory_order_relaxed);
  c.case2 = g_case2.load(std::memory_order_relaxed);
  c.case3 = g_case3.load(std::memory_order_relaxed);
  c.e_exact_pow = g_e_exact.load(std::memory_order_relaxed);
  return c;
}

void reset_ecase_counters() {
  g_case1_nonneg = 0;
  g_case1_neg = 0;
  g_case2 = 0;
  g_case3 = 0;
  g_e_exact = 0;
}

void set_kr_step_observer(KrStepObserver fn, void* ctx) {
  g_observer = fn;
  g_observer_ctx = ctx;
}

void kr_depth_reset() { t_max_depth = t_depth; }
int kr_max_depth() { return t_max_depth; }

ECase classify_e(int kappa_e, const limb* e, std::size_t k) {
  assert(-2 <= kappa_e && kappa_e <= 1 && "carry corruption upstream");
  switch (kappa_e) {
    case 0:
      g_case1_nonneg.fetch_add(1, std::memory_order_relaxed);
      return ECase::case1_nonneg;
    case 1:
      g_case2.fetch_add(1, std::memory_order_relaxed);
      return ECase::case2;
    case -2:
      g_case3.fetch_add(1, std::memory_order_relaxed);
      return ECase::case3;
    default:  // -1: either -rho^k < E < 0 or the exact point E == -rho^k
      if (mpi_is_zero(e, k)) {
        g_case3.fetch_add(1, std::memory_order_relaxed);
        g_e_exact.fetch_add(1, std::memory_order_relaxed);
        return ECase::case3;
      }
      g_case1_neg.fetch_add(1, std::memory_order_relaxed);
      return ECase::case1_neg;
  }
}

int finalize_carries(std::uint32_t rho, QuarterCarries& q, limb* d,
                     std::size_t k) {
  assert(q.k11 == 0);
  q.k01 += int(mpi_add_c(rho, d + k, k, q.k10));
  q.k10 = 0;
  q.k00 += int(mpi_add_c(rho, d, k, q.k01));
  q.k01 = 0;
  return q.k00;
}

namespace {

// Shared even-length body; a1 == nullptr selects the product form (top),
// whose E = a_hi - a_lo always lands in case 1.
int kr_mul_even(std::uint32_t rho, limb* d, const limb* a0, const limb* a1,
                const limb* b, std::size_t n, std::size_t threshold) {
  const std::size_t k = n / 2;
  const bool top = a1 == nullptr;
  limb* d00 = d;
  limb* d01 = d + k;
  limb* d10 = d + 2 * k;
  limb* d11 = d + 3 * k;
  const limb* a0h = a0;
  const limb* a0l = a0 + k;
  const limb* a1h = top ? nullptr : a1;
  const limb* a1l = top ? nullptr : a1 + k;
  const limb* bh = b;
  const limb* bl = b + k;

  int k00 = 0, k01 = 0, k10 = 0, k11 = 0;
  int table = 1;
  bool eneg = false;
  auto snap = [&](int step) {
    if (g_observer) {
      KrStepSnapshot s{table, step,          top, eneg, k,  d,
                       a0,    top ? nullptr : a1, b,    k00, k01, k10, k11};
      g_observer(g_observer_ctx, s);
    }
  };

  snap(0);
  k01 = mpi_sub(rho, d01, d00, k);
  snap(1);

  // E into d11, then normalize limbs to a non-negative multiplier and pick
  // the operand order for the middle recursion.
  mpi_copy(d11, a0h, k);
  if (top) {
    k11 = mpi_sub(rho, d11, a0l, k);
  } else {
    k11 = mpi_sub(rho, d11, a1h, k);
    k11 += mpi_sub(rho, d11, a0l, k);
    k11 += mpi_add(rho, d11, a1l, k);
  }
  const ECase ec = classify_e(k11, d11, k);
  assert(!top || ec == ECase::case1_nonneg || ec == ECase::case1_neg);
  const limb* px = bl;
  const limb* py = bh;
  switch (ec) {
    case ECase::case1_nonneg:  // middle = (bl - bh) * E
      break;
    case ECase::case1_neg: {  // middle = (bh - bl) * (-E)
      int f = mpi_neg(rho, d11, k);
      k11 = -k11 - f;
      eneg = true;
      px = bh;
      py = bl;
      break;
    }
    case ECase::case2:  // limbs already hold E - rho^k
      table = 2;
      k11 = 0;
      px = bl;
      py = bh;
      break;
    case ECase::case3: {  // limbs := -E - rho^k
      table = 3;
      int f = mpi_neg(rho, d11, k);
      k11 = -k11 - 1 - f;
      px = bh;
      py = bl;
      break;
    }
  }
  assert(k11 == 0);
  snap(2);

  k01 += kr_mul(rho, d01, px, py, d11, k, threshold);
  k10 = 0;
  snap(3);

  if (table == 2) {
    k01 += mpi_add(rho, d01, bl, k);
    k01 += mpi_sub(rho, d01, bh, k);
    snap(4);
  } else if (table == 3) {
    k01 += mpi_add(rho, d01, bh, k);
    k01 += mpi_sub(rho, d01, bl, k);
    snap(4);
  }

  const int s = (table == 1) ? 4 : 5;  // the two tables number rows differently

  mpi_copy(d11, d01, k);
  k11 = k01 + mpi_sub(rho, d11, d10, k);
  snap(s);

  k00 += top ? kr_mul_top(rho, d00, a0h, bh, k, threshold)
             : kr_mul(rho, d00, a0h, a1h, bh, k, threshold);
  k01 = 0;
  snap(s + 1);

  k10 += mpi_add(rho, d10, d01, k);
  snap(s + 2);

  mpi_copy(d01, d11, k);
  k01 = k11 + k00 + mpi_add(rho, d01, d00, k);
  snap(s + 3);

  k10 += top ? kr_mul_top(rho, d10, a0l, bl, k, threshold)
             : kr_mul(rho, d10, a0l, a1l, bl, k, threshold);
  k11 = 0;
  snap(s + 4);

  k01 += k10 + mpi_add(rho, d01, d10, k);
  snap(s + 5);

  k10 += mpi_add(rho, d10, d11, k);
  snap(s + 6);

  assert(k11 == 0);
  assert(-8 <= k01 && k01 <= 8 && -8 <= k10 && k10 <= 8);

  QuarterCarries q{k00, k01, k10, k11};
  int ret = finalize_carries(rho, q, d, k);
  k00 = q.k00;
  k01 = q.k01;
  k10 = q.k10;
  k11 = q.k11;
  snap(kKrStepFinal);
  return ret;
}

// Odd n = 2k+1. With abar/bbar the operands less their least significant
// (resp. most significant) limb,
//
//   (a0-a1)*b + c*rho^n = rho*[(abar0-abar1)*bbar + cbar*rho^(2k)]
//                         + c_ms*rho^(4k+1)
//                         + rho^(2k)*(a0-a1)*b_ms
//                         + (a0_ls-a1_ls)*bbar
//
// The bracket is the even problem of size 2k solved in the window d+1
// (cbar is already in place there); the two correction rows touch carry
// ranges that meet only at one boundary limb, so each costs one traversal.
int kr_mul_odd(std::uint32_t rho, limb* d, const limb* a0, const limb* a1,
               const limb* b, std::size_t n, std::size_t threshold) {
  const bool top = a1 == nullptr;
  const std::size_t even = n - 1;  // 2k

  int ksub = top ? kr_mul_top(rho, d + 1, a0, b + 1, even, threshold)
                 : kr_mul(rho, d + 1, a0, a1, b + 1, even, threshold);
  std::int64_t ktop = mpi_add_c(rho, d, 1, ksub);
  d[2 * n - 1] = 0;

  const std::uint32_t b_ms = b[0];
  if (b_ms != 0) {
    ktop += mpi_addmul_scalar(rho, d, even + 2, a0, n, b_ms);
    if (!top) ktop += mpi_submul_scalar(rho, d, even + 2, a1, n, b_ms);
  }

  const std::uint32_t x0 = a0[n - 1];
  const std::uint32_t x1 = top ? 0 : a1[n - 1];
  if (x0 != x1) {
    int c = (x0 > x1)
                ? mpi_addmul_scalar(rho, d + n, n, b + 1, even, x0 - x1)
                : mpi_submul_scalar(rho, d + n, n, b + 1, even, x1 - x0);
    ktop += mpi_add_c(rho, d, n, c);
  }
  assert(-1 <= ktop && ktop <= 1);
  return int(ktop);
}

}  // namespace

int kr_mul(std::uint32_t rho, limb* d, const limb* a0, const limb* a1,
           const limb* b, std::size_t n, std::size_t threshold) {
  DepthGuard guard;
  if (n < effective_threshold(threshold))
    return kr_mul_b2(rho, d, a0, a1, b, n);
  if (n % 2 == 0) return kr_mul_even(rho, d, a0, a1, b, n, threshold);
  return kr_mul_odd(rho, d, a0, a1, b, n, threshold);
}

int kr_mul_top(std::uint32_t rho, limb* d, const limb* a, const limb* b,
               std::size_t n, std::size_t threshold) {
  DepthGuard guard;
  if (n < effective_threshold(threshold)) return kr_mul_b1(rho, d, a, b, n);
  if (n % 2 == 0) return kr_mul_even(rho, d, a, nullptr, b, n, threshold);
  return kr_mul_odd(rho, d, a, nullptr, b, n, threshold);
}

void kr_mpi_mul(std::uint32_t rho, limb* d, const limb* a, std::size_t n,
                const limb* b, std::size_t m, std::size_t threshold) {
  DepthGuard guard;
  assert(n >= m && m >= 1);
  if (m < effective_threshold(threshold)) {
    sb_mul(rho, d, a, n, b, m);
    return;
  }
  const std::size_t q = n / m;
  const std::size_t r = n % m;
  if (r == 0)
    mpi_zero(d, m);
  else
    kr_mpi_mul(rho, d, b, m, a, r, threshold);
  for (std::size_t i = 1; i <= q; ++i) {
    const std::size_t done = r + (i - 1) * m;
    int kappa = kr_mul_top(rho, d + done, a + done, b, m, threshold);
    std::int64_t out = mpi_add_c(rho, d, done, kappa);
    assert(out == 0);
    (void)out;
  }
}

void mpi_mul_kr(std::uint32_t rho, limb* d, const limb* a, std::size_t n,
                const limb* b, std::size_t m, std::size_t threshold) {
  if (n < m) {
    const limb* t = a;
    a = b;
    b = t;
    std::size_t ts = n;
    n = m;
    m = ts;
  }
  if (m == 0) {
    mpi_zero(d, n + m);
    return;
  }
  kr_mpi_mul(rho, d, a, n, b, m, threshold);
}

}  // namespace krmul
