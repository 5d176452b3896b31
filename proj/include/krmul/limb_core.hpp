#pragma once
// limb_core.hpp - limb-level primitives for radix-rho natural numbers.
//
// A natural number is an array of 16-bit limbs with the MOST significant
// limb first:
//
//     value(a, n) = sum_{i=0}^{n-1} a[i] * rho^(n-1-i),   0 <= a[i] < rho
//
// rho is a runtime radix, 2 <= rho <= 2^16. All primitives mutate their
// first operand in place and return a small signed carry kappa so that
// (kappa, limbs) together represent kappa*rho^n + value(limbs). Zero-length
// arrays are valid and denote the value 0.
//
// None of these functions allocate.

#include <cstddef>
#include <cstdint>

namespace krmul {

using limb = std::uint16_t;

inline constexpr std::uint32_t kMinRadix = 2;
inline constexpr std::uint32_t kMaxRadix = 1u << 16;

// Recursion cutoff shared by both Karatsuba variants.
inline constexpr std::size_t kDefaultThreshold = 128;

inline bool radix_valid(std::uint32_t rho) {
  return rho >= kMinRadix && rho <= kMaxRadix;
}

// a += b over n limbs; returns the carry, 0 or 1.
int mpi_add(std::uint32_t rho, limb* a, const limb* b, std::size_t n);

// a -= b over n limbs; returns the carry, 0 or -1.
int mpi_sub(std::uint32_t rho, limb* a, const limb* b, std::size_t n);

// a := rho^n - a and returns 1, unless a == 0 in which case a is left
// unchanged and 0 is returned. Either way -old_a = -ret*rho^n + value(a).
int mpi_neg(std::uint32_t rho, limb* a, std::size_t n);

// Adds the signed carry kappa at the least significant limb and ripples.
// Returns out with out*rho^n + value(new a) = value(old a) + kappa.
std::int64_t mpi_add_c(std::uint32_t rho, limb* a, std::size_t n,
                       std::int64_t kappa);

// a += s * b, where a spans n limbs and b spans m <= n limbs aligned at the
// least significant end; 0 <= s < rho. Returns the carry out of a (< rho).
int mpi_addmul_scalar(std::uint32_t rho, limb* a, std::size_t n,
                      const limb* b, std::size_t m, std::uint32_t s);

// a -= s * b, same alignment rules; returns the (non-positive) carry.
int mpi_submul_scalar(std::uint32_t rho, limb* a, std::size_t n,
                      const limb* b, std::size_t m, std::uint32_t s);

// Small helpers shared by the multiplication kernels.
void mpi_zero(limb* a, std::size_t n);
void mpi_copy(limb* dst, const limb* src, std::size_t n);
bool mpi_is_zero(const limb* a, std::size_t n);

// region += src where src spans slen <= rlen limbs aligned at the least
// significant end of region; returns the carry out of region.
int mpi_add_into(std::uint32_t rho, limb* region, std::size_t rlen,
                 const limb* src, std::size_t slen);

}  // namespace krmul
