// schoolbook.cpp - operand-scanning quadratic kernels.

#include "krmul/schoolbook.hpp"

#include <bit>
#include <cassert>

namespace krmul {

void sb_mul(std::uint32_t rho, limb* d, const limb* a, std::size_t n,
            const limb* b, std::size_t m) {
  mpi_zero(d, n + m);
  if (n == 0 || m == 0) return;
  for (std::size_t j = 0; j < m; ++j) {  // j = power of the current b limb
    const std::uint32_t s = b[m - 1 - j];
    if (s == 0) continue;
    int out = mpi_addmul_scalar(rho, d, n + m - j, a, n, s);
    assert(out == 0);
    (void)out;
  }
}

int kr_mul_b1(std::uint32_t rho, limb* d, const limb* a, const limb* b,
              std::size_t n) {
  mpi_zero(d + n, n);
  std::int64_t kappa = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint32_t s = b[n - 1 - j];
    if (s == 0) continue;
    kappa += mpi_addmul_scalar(rho, d, 2 * n - j, a, n, s);
  }
  assert(kappa == 0 || kappa == 1);
  return int(kappa);
}

int kr_mul_b2(std::uint32_t rho, limb* d, const limb* a0, const limb* a1,
              const limb* b, std::size_t n) {
  mpi_zero(d + n, n);
  if (n == 0) return 0;
  const std::int64_t r = rho;
  const bool pow2 = (rho & (rho - 1)) == 0;
  const unsigned shift = pow2 ? unsigned(std::countr_zero(rho)) : 0;
  const std::int64_t mask = r - 1;
  std::int64_t kappa = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t s = b[n - 1 - j];
    if (s == 0) continue;
    std::size_t di = 2 * n - j;  // one past the region's least significant limb
    std::int64_t c = 0;
    if (pow2) {
      for (std::size_t i = n; i-- > 0;) {
        --di;
        std::int64_t t = d[di] + s * (std::int64_t(a0[i]) - std::int64_t(a1[i])) + c;
        d[di] = limb(t & mask);
        c = t >> shift;
      }
      while (di-- > 0 && c != 0) {
        std::int64_t t = d[di] + c;
        d[di] = limb(t & mask);
        c = t >> shift;
      }
    } else {
      for (std::size_t i = n; i-- > 0;) {
        --di;
        std::int64_t t = d[di] + s * (std::int64_t(a0[i]) - std::int64_t(a1[i])) + c;
        std::int64_t q = t / r;
        std::int64_t rem = t % r;
        if (rem < 0) {
          rem += r;
          --q;
        }
        d[di] = limb(rem);
        c = q;
      }
      while (di-- > 0 && c != 0) {
        std::int64_t t = d[di] + c;
        std::int64_t q = t / r;
        std::int64_t rem = t % r;
        if (rem < 0) {
          rem += r;
          --q;
        }
        d[di] = limb(rem);
        c = q;
      }
    }
    kappa += c;
  }
  assert(-1 <= kappa && kappa <= 1);
  return int(kappa);
}

}  // namespace krmul
