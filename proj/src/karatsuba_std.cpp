// karatsuba_std.cpp - subtractive Karatsuba with arena scratch.
//
// Layout for the balanced/near-balanced split (n, m even, n/2 < m <= n,
// k = n/2, t = m - k, most significant limb first):
//
//     d:  [ vinf = AH*BH : k+t ][ v0hi : k ][ v0lo : k ]
//
// The two absolute differences |AL-AH| and |BL-BH| are staged in the v0
// slots, their product goes to the arena, then vinf and v0 overwrite the
// staging area. The middle term v0 + vinf -/+ vm1 is folded in at offset
// k with quarter-granular carries, so no overlapping limb ops occur.
//
// Odd lengths peel one limb off the odd operand (one scalar row of the
// product) and recurse on the even remainder; very unbalanced shapes
// (n >= 2m) walk blocks of m limbs, saving the m-limb overlap of each
// block before multiplying into it.

#include "krmul/karatsuba_std.hpp"

#include <cassert>

#include "krmul/schoolbook.hpp"

namespace krmul {

limb* ScratchArena::alloc(std::size_t count, ScratchTag tag,
                          std::size_t call_len) {
  assert(used_ + count <= buf_.size() && "scratch arena exhausted");
  limb* p = buf_.data() + used_;
  used_ += count;
  if (used_ > high_water_) high_water_ = used_;
  if (log_) log_->push_back({tag, count, call_len});
  return p;
}

void ScratchArena::release(std::size_t count) {
  assert(count <= used_);
  used_ -= count;
}

namespace {

std::size_t effective_threshold(std::size_t threshold) {
  return threshold < 2 ? 2 : threshold;
}

void ks_rec(std::uint32_t rho, limb* d, const limb* a, std::size_t n,
            const limb* b, std::size_t m, ScratchArena& arena,
            std::size_t threshold);

// |x - y| over k limbs into dst (dst may not alias x or y); returns true
// when the difference was negative.
bool abs_diff(std::uint32_t rho, limb* dst, const limb* x, const limb* y,
              std::size_t k) {
  mpi_copy(dst, x, k);
  int borrow = mpi_sub(rho, dst, y, k);
  if (borrow) {
    mpi_neg(rho, dst, k);
    return true;
  }
  return false;
}

// As abs_diff with y spanning only t <= k limbs (value-aligned).
bool abs_diff_short(std::uint32_t rho, limb* dst, const limb* x, std::size_t k,
                    const limb* y, std::size_t t) {
  mpi_copy(dst, x, k);
  int borrow = mpi_sub(rho, dst + (k - t), y, t);
  borrow = int(mpi_add_c(rho, dst, k - t, borrow));
  if (borrow) {
    mpi_neg(rho, dst, k);
    return true;
  }
  return false;
}

// Balanced subtractive split; n, m even, n/2 < m <= n.
void ks_split(std::uint32_t rho, limb* d, const limb* a, std::size_t n,
              const limb* b, std::size_t m, ScratchArena& arena,
              std::size_t threshold) {
  const std::size_t k = n / 2;
  const std::size_t t = m - k;
  assert(t >= 1 && t <= k);

  const limb* ah = a;
  const limb* al = a + k;
  const limb* bh = b;
  const limb* bl = b + t;

  limb* da = d + (k + t);      // staged in the v0 slots
  limb* db = d + (2 * k + t);
  const bool na = abs_diff(rho, da, al, ah, k);
  const bool nb = abs_diff_short(rho, db, bl, k, bh, t);

  limb* vm1 = arena.alloc(2 * k, ScratchTag::core, n);
  ks_rec(rho, vm1, da, k, db, k, arena, threshold);

  ks_rec(rho, d, ah, k, bh, t, arena, threshold);           // vinf
  ks_rec(rho, d + (k + t), al, k, bl, k, arena, threshold); // v0

  // Middle term at offset k: v0 + vinf -/+ vm1.
  int c1 = mpi_add(rho, d + t, d + (k + t), k);  // H0 += L1
  mpi_copy(d + (k + t), d + t, k);               // L1 := H0'
  int c2 = mpi_add(rho, d + (k + t), d + (2 * k + t), k);  // L1 += L0
  std::int64_t cy2 = c1 + c2;                    // carries at power 2k
  int c3 = mpi_add_into(rho, d + t, k, d, t);    // H0 += H1
  std::int64_t cy = c1 + c3;                     // carries at power 3k
  if (na == nb)
    cy += mpi_sub(rho, d + t, vm1, 2 * k);
  else
    cy += mpi_add(rho, d + t, vm1, 2 * k);
  std::int64_t out = mpi_add_c(rho, d, k + t, cy2);
  out += mpi_add_c(rho, d, t, cy);
  assert(out == 0);
  (void)out;

  arena.release(2 * k);
}

// Block walk for n >= 2m, most significant block first. Each block's
// 2m-limb window overlaps the already-computed prefix by m limbs; that
// overlap is saved, the block product is written in place, and the saved
// limbs are added back at offset m.
void ks_blocks(std::uint32_t rho, limb* d, const limb* a, std::size_t n,
               const limb* b, std::size_t m, ScratchArena& arena,
               std::size_t threshold) {
  const std::size_t q = n / m;
  const std::size_t r = n % m;
  if (r) ks_rec(rho, d, b, m, a, r, arena, threshold);
  for (std::size_t i = 1; i <= q; ++i) {
    limb* w = d + r + (i - 1) * m;
    const limb* ai = a + r + (i - 1) * m;
    if (i == 1 && r == 0) {
      ks_rec(rho, w, ai, m, b, m, arena, threshold);
      continue;
    }
    limb* save = arena.alloc(m, ScratchTag::block_save, m);
    mpi_copy(save, w, m);
    ks_rec(rho, w, ai, m, b, m, arena, threshold);
    int c = mpi_add(rho, w, save, m);
    std::int64_t out = mpi_add_c(rho, d, r + (i - 1) * m, c);
    assert(out == 0);
    (void)out;
    arena.release(m);
  }
}

void ks_rec(std::uint32_t rho, limb* d, const limb* a, std::size_t n,
            const limb* b, std::size_t m, ScratchArena& arena,
            std::size_t threshold) {
  if (n < m) {
    std::swap(a, b);
    std::swap(n, m);
  }
  if (m < effective_threshold(threshold)) {
    sb_mul(rho, d, a, n, b, m);
    return;
  }
  if (n >= 2 * m) {
    ks_blocks(rho, d, a, n, b, m, arena, threshold);
    return;
  }
  if (n % 2) {
    // a = abar*rho + a_ls; multiply the even prefix, then add one row.
    ks_rec(rho, d, a, n - 1, b, m, arena, threshold);
    d[n + m - 1] = 0;
    if (a[n - 1]) {
      int out = mpi_addmul_scalar(rho, d, n + m, b, m, a[n - 1]);
      assert(out == 0);
      (void)out;
    }
    return;
  }
  if (m % 2) {
    ks_rec(rho, d, a, n, b, m - 1, arena, threshold);
    d[n + m - 1] = 0;
    if (b[m - 1]) {
      int out = mpi_addmul_scalar(rho, d, n + m, a, n, b[m - 1]);
      assert(out == 0);
      (void)out;
    }
    return;
  }
  ks_split(rho, d, a, n, b, m, arena, threshold);
}

}  // namespace

void ks_mul(std::uint32_t rho, limb* d, const limb* a, std::size_t n,
            const limb* b, std::size_t m, ScratchArena& arena,
            std::size_t threshold) {
  if (n < m) {
    std::swap(a, b);
    std::swap(n, m);
  }
  if (m == 0) {
    mpi_zero(d, n + m);
    return;
  }
  ks_rec(rho, d, a, n, b, m, arena, threshold);
}

}  // namespace krmul
