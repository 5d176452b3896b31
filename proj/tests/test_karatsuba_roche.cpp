// test_karatsuba_roche.cpp - the in-place engine: frozen examples, value
// equations against the oracle, case classification, table-row identities,
// and the zero-allocation property.

#include <doctest.h>

#include <cmath>

#include "krmul/alloc_count.hpp"
#include "krmul/karatsuba_roche.hpp"
#include "krmul/schoolbook.hpp"
#include "oracle.hpp"
#include "table_check.hpp"

using namespace krmul;
using namespace krtest;

namespace {
std::vector<limb> L(std::initializer_list<int> xs) {
  std::vector<limb> out;
  for (int x : xs) out.push_back(limb(x));
  return out;
}
}  // namespace

TEST_CASE("classify_e interval membership at rho=4, k in {1,2}") {
  for (std::size_t k : {std::size_t(1), std::size_t(2)}) {
    const std::int64_t rk = std::int64_t(ipow(4, k));
    for (std::int64_t e = -2 * (rk - 1); e <= 2 * (rk - 1); ++e) {
      // build the carry-plus-limbs representation the algorithm produces
      const std::int64_t kappa = e >= 0 ? e / rk : -((-e + rk - 1) / rk);
      const std::int64_t rem = e - kappa * rk;
      REQUIRE(rem >= 0);
      REQUIRE(rem < rk);
      auto limbs = limbs_of(4, rem, k);
      const ECase got = classify_e(int(kappa), limbs.data(), k);
      ECase want;
      if (e >= rk)
        want = ECase::case2;
      else if (e >= 0)
        want = ECase::case1_nonneg;
      else if (e > -rk)
        want = ECase::case1_neg;
      else
        want = ECase::case3;
      CHECK(got == want);
    }
  }
}

TEST_CASE("classify_e spec points") {
  auto zeros = L({0, 0});
  CHECK(classify_e(-1, zeros.data(), 2) == ECase::case3);  // E == -rho^k
  auto five = L({5});
  CHECK(classify_e(0, five.data(), 1) == ECase::case1_nonneg);
}

TEST_CASE("finalize_carries") {
  // all zero: untouched
  std::vector<limb> d(8, 3);
  QuarterCarries q;
  CHECK(finalize_carries(10, q, d.data(), 2) == 0);
  CHECK(d == std::vector<limb>(8, 3));

  // kappa10 ripples through an all-nines d01 into d00
  d = L({0, 0, 9, 9, 1, 2, 3, 4});
  q = QuarterCarries{0, 0, 1, 0};
  CHECK(finalize_carries(10, q, d.data(), 2) == 0);
  CHECK(q.k01 == 0);
  CHECK(q.k10 == 0);
  CHECK(d == L({0, 1, 0, 0, 1, 2, 3, 4}));

  // negative kappa01 decrements d00
  d = L({0, 1, 5, 5, 0, 0, 0, 0});
  q = QuarterCarries{0, -1, 0, 0};
  CHECK(finalize_carries(10, q, d.data(), 2) == 0);
  CHECK(d == L({0, 0, 5, 5, 0, 0, 0, 0}));
}

TEST_CASE("kr_mul frozen examples") {
  std::vector<limb> d(4);
  auto a0 = L({3, 5}), a1 = L({1, 2}), b = L({4, 7});
  std::copy_n(L({0, 9}).begin(), 2, d.begin());
  CHECK(kr_mul(10, d.data(), a0.data(), a1.data(), b.data(), 2, 2) == 0);
  CHECK(d == L({1, 9, 8, 1}));  // 23*47 + 900

  // zero difference leaves c followed by zeros
  a0 = L({6, 1});
  a1 = L({6, 1});
  std::copy_n(L({5, 7}).begin(), 2, d.begin());
  CHECK(kr_mul(10, d.data(), a0.data(), a1.data(), b.data(), 2, 2) == 0);
  CHECK(d == L({5, 7, 0, 0}));

  // case 2 cell at rho=4, k=1: E = 3-0-0+3 = 6 >= rho^k
  a0 = L({3, 0});
  a1 = L({0, 3});
  b = L({1, 2});
  std::fill(d.begin(), d.end(), limb(0));
  reset_ecase_counters();
  CHECK(kr_mul(4, d.data(), a0.data(), a1.data(), b.data(), 2, 2) == 0);
  CHECK(value_of(4, d) == 54);  // (12-3)*6
  CHECK(d == L({0, 3, 1, 2}));
  CHECK(ecase_counters().case2 == 1);
}

TEST_CASE("kr_mul_top frozen examples") {
  std::vector<limb> d(4);
  auto a = L({9, 9}), b = L({9, 9});
  std::copy_n(L({0, 0}).begin(), 2, d.begin());
  CHECK(kr_mul_top(10, d.data(), a.data(), b.data(), 2, 2) == 0);
  CHECK(d == L({9, 8, 0, 1}));

  a = L({5, 0});
  b = L({2, 0});
  std::copy_n(L({9, 9}).begin(), 2, d.begin());
  CHECK(kr_mul_top(10, d.data(), a.data(), b.data(), 2, 2) == 1);  // 10900
  CHECK(d == L({0, 9, 0, 0}));

  a = L({0, 0});
  b = L({3, 7});
  std::copy_n(L({4, 2}).begin(), 2, d.begin());
  CHECK(kr_mul_top(10, d.data(), a.data(), b.data(), 2, 2) == 0);
  CHECK(d == L({4, 2, 0, 0}));
}

TEST_CASE("odd length additive multiplication") {
  // 112 * 204 = 22848
  std::vector<limb> d(6, 0);
  auto a0 = L({1, 2, 3}), a1 = L({0, 1, 1}), b = L({2, 0, 4});
  CHECK(kr_mul(10, d.data(), a0.data(), a1.data(), b.data(), 3, 2) == 0);
  CHECK(d == L({0, 2, 2, 8, 4, 8}));

  // vanishing correction terms: b_ms = 0 and equal least limbs reduce to the
  // even subproblem shifted one limb
  a0 = L({2, 5, 7});
  a1 = L({1, 3, 7});
  b = L({0, 6, 1});
  std::vector<limb> c = L({3, 9, 4});
  std::copy(c.begin(), c.end(), d.begin());
  int k = kr_mul(10, d.data(), a0.data(), a1.data(), b.data(), 3, 2);
  CHECK(i128(k) * 1000000 + value_of(10, d) ==
        (257 - 137) * 61 + i128(394) * 1000);
}

TEST_CASE("kr_mul and kr_mul_top satisfy their value equations") {
  std::mt19937_64 gen(31);
  for (std::uint32_t rho : {2u, 4u, 10u, 256u}) {
    for (std::size_t n = 1; n <= 8; ++n) {
      const i128 rn = ipow(rho, n);
      const bool exhaustive = (rho == 2 && n <= 4) || (rho == 4 && n <= 3);
      // exhaustive over (a0, b) with random a1, c; and over (a0, a1) with
      // random b, c -- full 4-way enumeration is too large
      const long outer = exhaustive ? long(rn * rn) : 60;
      for (long it = 0; it < outer; ++it) {
        std::vector<limb> a0, a1, b, c;
        if (exhaustive) {
          a0 = limbs_of(rho, (it / long(rn)) % long(rn), n);
          b = limbs_of(rho, it % long(rn), n);
          a1 = random_natural(gen, rho, n);
          c = random_natural(gen, rho, n);
        } else {
          a0 = random_natural(gen, rho, n);
          a1 = random_natural(gen, rho, n);
          b = random_natural(gen, rho, n);
          c = random_natural(gen, rho, n);
        }
        std::vector<limb> d(2 * n);

        std::copy(c.begin(), c.end(), d.begin());
        int k = kr_mul(rho, d.data(), a0.data(), a1.data(), b.data(), n, 2);
        CHECK(i128(k) * rn * rn + value_of(rho, d) ==
              (value_of(rho, a0) - value_of(rho, a1)) * value_of(rho, b) +
                  value_of(rho, c) * rn);

        std::copy(c.begin(), c.end(), d.begin());
        k = kr_mul_top(rho, d.data(), a0.data(), b.data(), n, 2);
        CHECK((k == 0 || k == 1));
        CHECK(i128(k) * rn * rn + value_of(rho, d) ==
              value_of(rho, a0) * value_of(rho, b) + value_of(rho, c) * rn);
      }
    }
  }
}

TEST_CASE("kr_mpi_mul and mpi_mul_kr basics") {
  auto a = L({1, 2, 3}), b = L({4, 5});
  std::vector<limb> d(5);
  kr_mpi_mul(10, d.data(), a.data(), 3, b.data(), 2, 2);
  CHECK(d == L({0, 5, 5, 3, 5}));  // 123*45 = 5535

  // identity multiplier keeps the value, with a leading zero limb
  std::vector<limb> one = L({1});
  std::vector<limb> d2(4);
  kr_mpi_mul(10, d2.data(), a.data(), 3, one.data(), 1, 2);
  CHECK(d2 == L({0, 1, 2, 3}));

  // operand order does not matter
  std::vector<limb> d3(5);
  mpi_mul_kr(10, d3.data(), b.data(), 2, a.data(), 3, 2);
  CHECK(d3 == d);

  // empty operands produce an all-zero product
  std::vector<limb> d4(3);
  mpi_mul_kr(10, d4.data(), a.data(), 3, nullptr, 0, 2);
  CHECK(d4 == L({0, 0, 0}));
}

TEST_CASE("mpi_mul_kr equals schoolbook across shapes, radices, thresholds") {
  std::mt19937_64 gen(32);
  for (std::uint32_t rho : {2u, 4u, 10u, 256u, 65536u}) {
    for (int it = 0; it < 400; ++it) {
      const std::size_t n = 1 + std::size_t(gen() % 40);
      const std::size_t m = 1 + std::size_t(gen() % 40);
      const std::size_t thr = it % 2 ? 2 : 8;
      auto a = random_natural(gen, rho, n);
      auto b = random_natural(gen, rho, m);
      std::vector<limb> ref(n + m), got(n + m);
      sb_mul(rho, ref.data(), a.data(), n, b.data(), m);
      mpi_mul_kr(rho, got.data(), a.data(), n, b.data(), m, thr);
      REQUIRE(got == ref);
    }
  }
}

TEST_CASE("a multiplication performs no heap allocation") {
  std::mt19937_64 gen(33);
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{300, 200},
                      {257, 131}, {64, 64}}) {
    auto a = random_natural(gen, 65536, n);
    auto b = random_natural(gen, 65536, m);
    std::vector<limb> d(n + m);
    const auto before = allocs::count();
    mpi_mul_kr(65536, d.data(), a.data(), n, b.data(), m, 16);
    CHECK(allocs::count() - before == 0);
  }
}

TEST_CASE("recursion depth stays logarithmic") {
  std::mt19937_64 gen(34);
  for (auto [n, m] : {std::pair<std::size_t, std::size_t>{4000, 3999},
                      {4181, 2584}, {2048, 2048}, {3000, 1000}, {1999, 1998}}) {
    auto a = random_natural(gen, 65536, n);
    auto b = random_natural(gen, 65536, m);
    std::vector<limb> d(n + m);
    kr_depth_reset();
    mpi_mul_kr(65536, d.data(), a.data(), n, b.data(), m, 128);
    const double bound = std::ceil(std::log2(double(std::max(n, m)) / 128)) +
                         std::ceil(std::log2(128.0)) + 4;
    CHECK(kr_max_depth() <= int(bound));
  }
}

TEST_CASE("table rows match the snapshots for even additive instances") {
  std::mt19937_64 gen(35);
  for (std::uint32_t rho : {4u, 10u}) {
    TableChecker checker(rho);
    for (std::size_t n : {std::size_t(4), std::size_t(6), std::size_t(8)}) {
      for (int it = 0; it < 10; ++it) {
        auto a0 = random_natural(gen, rho, n);
        auto a1 = random_natural(gen, rho, n);
        auto b = random_natural(gen, rho, n);
        auto c = random_natural(gen, rho, n);
        std::vector<limb> d(2 * n);
        std::copy(c.begin(), c.end(), d.begin());
        kr_mul(rho, d.data(), a0.data(), a1.data(), b.data(), n, 2);
        std::copy(c.begin(), c.end(), d.begin());
        kr_mul_top(rho, d.data(), a0.data(), b.data(), n, 2);
      }
    }
    for (const auto& f : checker.failures()) MESSAGE(f);
    CHECK(checker.ok());
    CHECK(checker.instances_finished > 0);
    CHECK(checker.rows_checked > 0);
  }
}

TEST_CASE("verification-style coverage counters") {
  reset_ecase_counters();
  std::mt19937_64 gen(36);
  // rho=2 sweep at threshold 2 reaches case 2, case 3 and the exact point
  for (int it = 0; it < 400; ++it) {
    const std::size_t n = 4 + std::size_t(gen() % 5);
    auto a = random_natural(gen, 2, n);
    auto b = random_natural(gen, 2, n);
    std::vector<limb> d(2 * n);
    mpi_mul_kr(2, d.data(), a.data(), n, b.data(), n, 2);
  }
  const auto c = ecase_counters();
  CHECK(c.case1_nonneg > 0);
  CHECK(c.case1_neg > 0);
  CHECK(c.case2 > 0);
  CHECK(c.case3 > 0);
  CHECK(c.e_exact_pow > 0);
}
