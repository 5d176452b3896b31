// limb_core.cpp - carry-returning limb kernels.

#include "krmul/limb_core.hpp"

#include <bit>
#include <cassert>
#include <cstring>

namespace krmul {

void mpi_zero(limb* a, std::size_t n) {
  if (n) std::memset(a, 0, n * sizeof(limb));
}

void mpi_copy(limb* dst, const limb* src, std::size_t n) {
  if (n) std::memmove(dst, src, n * sizeof(limb));
}

bool mpi_is_zero(const limb* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i]) return false;
  return true;
}

int mpi_add(std::uint32_t rho, limb* a, const limb* b, std::size_t n) {
  assert(radix_valid(rho));
  std::uint32_t c = 0;
  for (std::size_t i = n; i-- > 0;) {  // least significant limb first
    std::uint32_t t = std::uint32_t(a[i]) + b[i] + c;
    c = t >= rho;
    a[i] = limb(c ? t - rho : t);
  }
  return int(c);
}

int mpi_sub(std::uint32_t rho, limb* a, const limb* b, std::size_t n) {
  assert(radix_valid(rho));
  std::int32_t c = 0;
  for (std::size_t i = n; i-- > 0;) {
    std::int32_t t = std::int32_t(a[i]) - std::int32_t(b[i]) + c;
    c = -(t < 0);
    a[i] = limb(t < 0 ? t + std::int32_t(rho) : t);
  }
  return int(c);
}

int mpi_neg(std::uint32_t rho, limb* a, std::size_t n) {
  assert(radix_valid(rho));
  std::int32_t c = 0;
  for (std::size_t i = n; i-- > 0;) {
    std::int32_t t = -std::int32_t(a[i]) + c;
    c = -(t < 0);
    a[i] = limb(t < 0 ? t + std::int32_t(rho) : t);
  }
  return -int(c);
}

std::int64_t mpi_add_c(std::uint32_t rho, limb* a, std::size_t n,
                       std::int64_t kappa) {
  assert(radix_valid(rho));
  const std::int64_t r = rho;
  std::int64_t c = kappa;
  for (std::size_t i = n; i-- > 0 && c != 0;) {
    std::int64_t t = a[i] + c;
    std::int64_t q = t / r;
    std::int64_t rem = t % r;
    if (rem < 0) {
      rem += r;
      --q;
    }
    a[i] = limb(rem);
    c = q;
  }
  return c;
}

int mpi_addmul_scalar(std::uint32_t rho, limb* a, std::size_t n,
                      const limb* b, std::size_t m, std::uint32_t s) {
  assert(radix_valid(rho) && n >= m && s < rho);
  std::uint64_t c = 0;
  std::size_t ia = n;
  if ((rho & (rho - 1)) == 0) {
    const unsigned shift = unsigned(std::countr_zero(rho));
    const std::uint64_t mask = rho - 1;
    for (std::size_t ib = m; ib-- > 0;) {
      --ia;
      std::uint64_t t = a[ia] + std::uint64_t(s) * b[ib] + c;
      a[ia] = limb(t & mask);
      c = t >> shift;
    }
    while (ia-- > 0 && c != 0) {
      std::uint64_t t = a[ia] + c;
      a[ia] = limb(t & mask);
      c = t >> shift;
    }
  } else {
    for (std::size_t ib = m; ib-- > 0;) {
      --ia;
      std::uint64_t t = a[ia] + std::uint64_t(s) * b[ib] + c;
      a[ia] = limb(t % rho);
      c = t / rho;
    }
    while (ia-- > 0 && c != 0) {
      std::uint64_t t = a[ia] + c;
      a[ia] = limb(t % rho);
      c = t / rho;
    }
  }
  return int(c);
}

int mpi_submul_scalar(std::uint32_t rho, limb* a, std::size_t n,
                      const limb* b, std::size_t m, std::uint32_t s) {
  assert(radix_valid(rho) && n >= m && s < rho);
  const std::int64_t r = rho;
  std::int64_t c = 0;
  std::size_t ia = n;
  if ((rho & (rho - 1)) == 0) {
    const unsigned shift = unsigned(std::countr_zero(rho));
    const std::int64_t mask = r - 1;
    for (std::size_t ib = m; ib-- > 0;) {
      --ia;
      std::int64_t t = a[ia] - std::int64_t(s) * b[ib] + c;
      a[ia] = limb(t & mask);
      c = t >> shift;  // arithmetic shift == floor division for powers of two
    }
    while (ia-- > 0 && c != 0) {
      std::int64_t t = a[ia] + c;
      a[ia] = limb(t & mask);
      c = t >> shift;
    }
  } else {
    for (std::size_t ib = m; ib-- > 0;) {
      --ia;
      std::int64_t t = a[ia] - std::int64_t(s) * b[ib] + c;
      std::int64_t q = t / r;
      std::int64_t rem = t % r;
      if (rem < 0) {
        rem += r;
        --q;
      }
      a[ia] = limb(rem);
      c = q;
    }
    while (ia-- > 0 && c != 0) {
      std::int64_t t = a[ia] + c;
      std::int64_t q = t / r;
      std::int64_t rem = t % r;
      if (rem < 0) {
        rem += r;
        --q;
      }
      a[ia] = limb(rem);
      c = q;
    }
  }
  return int(c);
}

int mpi_add_into(std::uint32_t rho, limb* region, std::size_t rlen,
                 const limb* src, std::size_t slen) {
  assert(rlen >= slen);
  int c = mpi_add(rho, region + (rlen - slen), src, slen);
  return int(mpi_add_c(rho, region, rlen - slen, c));
}

}  // namespace krmul
