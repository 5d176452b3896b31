#pragma once
// schoolbook.hpp - quadratic multiplication and the two in-place base cases
// used below the Karatsuba cutoff. All three routines work inside the output
// buffer with O(1) auxiliary state and never allocate.

#include <cstddef>
#include <cstdint>

#include "krmul/limb_core.hpp"

namespace krmul {

// d[0..n+m) = a * b. d must not alias a or b.
void sb_mul(std::uint32_t rho, limb* d, const limb* a, std::size_t n,
            const limb* b, std::size_t m);

// d is a 2n-limb buffer whose first n limbs hold C on entry.
// Computes ret*rho^(2n) + d = a*b + C*rho^n; ret is 0 or 1.
int kr_mul_b1(std::uint32_t rho, limb* d, const limb* a, const limb* b,
              std::size_t n);

// As kr_mul_b1 but for the subtractive form:
// ret*rho^(2n) + d = (a0 - a1)*b + C*rho^n; ret is -1, 0 or 1.
// The difference a0 - a1 is never materialized; each inner pass accumulates
// s*(a0[i] - a1[i]) with a signed carry.
int kr_mul_b2(std::uint32_t rho, limb* d, const limb* a0, const limb* a1,
              const limb* b, std::size_t n);

}  // namespace krmul
