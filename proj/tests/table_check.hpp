#pragma once
// table_check.hpp - verifies every step snapshot emitted by the even-length
// additive routine against the case tables evaluated in exact arithmetic.
//
// A snapshot column passes when kappa*rho^k + value(quarter) equals the
// symbolic entry of that row. Nested instances are tracked with a stack:
// each instance pushes at step 0 (capturing its operands and preloaded C)
// and pops at the final snapshot, where the post-finalization state
// (kappa01 == kappa10 == 0) and the complete window value are also checked.

#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "krmul/karatsuba_roche.hpp"
#include "oracle.hpp"

namespace krtest {

class TableChecker {
 public:
  explicit TableChecker(std::uint32_t rho) : rho_(rho) {
    krmul::set_kr_step_observer(&TableChecker::trampoline, this);
  }
  ~TableChecker() { krmul::set_kr_step_observer(nullptr, nullptr); }
  TableChecker(const TableChecker&) = delete;
  TableChecker& operator=(const TableChecker&) = delete;

  bool ok() const { return failures_.empty(); }
  const std::vector<std::string>& failures() const { return failures_; }
  std::uint64_t rows_checked = 0;
  std::uint64_t cells_checked = 0;
  std::uint64_t instances_finished = 0;
  std::uint64_t final_kappa_checks = 0;

 private:
  struct Frame {
    const krmul::limb* d;
    std::size_t k;
    bool top;
    i128 c_value;
    std::vector<krmul::limb> a0, a1, b;
  };

  static void trampoline(void* ctx, const krmul::KrStepSnapshot& s) {
    static_cast<TableChecker*>(ctx)->on_snapshot(s);
  }

  void fail(const krmul::KrStepSnapshot& s, const std::string& what) {
    std::ostringstream os;
    os << "table " << s.table << " step " << s.step << " k=" << s.k
       << (s.top ? " top" : "") << ": " << what;
    failures_.push_back(os.str());
  }

  void on_snapshot(const krmul::KrStepSnapshot& s) {
    const std::size_t n = 2 * s.k;
    if (s.step == 0) {
      Frame f;
      f.d = s.d;
      f.k = s.k;
      f.top = s.top;
      f.c_value = value_of(rho_, s.d, n);
      f.a0.assign(s.a0, s.a0 + n);
      if (s.a1) f.a1.assign(s.a1, s.a1 + n);
      f.b.assign(s.b, s.b + n);
      stack_.push_back(std::move(f));
    }
    if (stack_.empty() || stack_.back().d != s.d || stack_.back().k != s.k) {
      fail(s, "snapshot does not match the innermost instance");
      return;
    }
    const Frame& f = stack_.back();
    const i128 rk = ipow(rho_, s.k);

    // Exact sub-values of this instance.
    const i128 a0h = value_of(rho_, f.a0.data(), s.k);
    const i128 a0l = value_of(rho_, f.a0.data() + s.k, s.k);
    const i128 a1h = f.top ? 0 : value_of(rho_, f.a1.data(), s.k);
    const i128 a1l = f.top ? 0 : value_of(rho_, f.a1.data() + s.k, s.k);
    const i128 bh = value_of(rho_, f.b.data(), s.k);
    const i128 bl = value_of(rho_, f.b.data() + s.k, s.k);
    const i128 c0 = floordiv(f.c_value, rk);
    const i128 c1 = floormod(f.c_value, rk);
    const i128 e = (a0h - a1h) - (a0l - a1l);
    const i128 p0 = (a0h - a1h) * bh;
    const i128 p1 = (a0l - a1l) * bl;
    const i128 p2 = (bl - bh) * e;
    const i128 p00 = floordiv(p0, rk), p01 = floormod(p0, rk);
    const i128 p10 = floordiv(p1, rk), p11 = floormod(p1, rk);
    const i128 p20 = floordiv(p2, rk), p21 = floormod(p2, rk);

    if (s.step == krmul::kKrStepFinal) {
      ++final_kappa_checks;
      if (s.k01 != 0 || s.k10 != 0 || s.k11 != 0)
        fail(s, "kappa01/kappa10/kappa11 not cleared by the final carry pass");
      // (a0 - a1)*b + c*rho^n
      const i128 want =
          (a0h * rk + a0l - a1h * rk - a1l) * (bh * rk + bl) +
          f.c_value * rk * rk;
      const i128 got =
          i128(s.k00) * rk * rk * rk * rk + value_of(rho_, s.d, 2 * n);
      if (want != got) fail(s, "final window value incorrect");
      ++instances_finished;
      stack_.pop_back();
      return;
    }

    using Cell = std::optional<i128>;
    std::array<Cell, 4> row;
    const Cell blank;
    const bool t1 = s.table == 1;
    // Middle-product pieces before the correction step of tables 2/3.
    i128 q2 = p2;
    if (s.table == 2) q2 = (bl - bh) * (e - rk);
    if (s.table == 3) q2 = (bh - bl) * (-e - rk);
    const i128 q20 = floordiv(q2, rk), q21 = floormod(q2, rk);

    switch (s.step) {
      case 0:
        row = {c0, c1, blank, blank};
        break;
      case 1:
        row = {c0, c1 - c0, blank, blank};
        break;
      case 2: {
        i128 d11 = e;            // what the quarter should hold as a value
        if (s.table == 1 && s.e_negative) d11 = -e;
        if (s.table == 2) d11 = e - rk;
        if (s.table == 3) d11 = -e - rk;
        row = {c0, c1 - c0, blank, d11};
        break;
      }
      case 3:
        row = {c0, c1 - c0 + (t1 ? p20 : q20), p21, blank};
        break;
      case 4:
        if (t1)
          row = {c0, c1 - c0 + p20, p21, c1 - c0 + p20 - p21};
        else
          row = {c0, c1 - c0 + p20, p21, blank};
        break;
      case 5:
        if (t1)
          row = {c0 + p00, p01, p21, c1 - c0 + p20 - p21};
        else
          row = {c0, c1 - c0 + p20, p21, c1 - c0 + p20 - p21};
        break;
      case 6:
        if (t1)
          row = {c0 + p00, p01, p01 + p21, c1 - c0 + p20 - p21};
        else
          row = {c0 + p00, p01, p21, c1 - c0 + p20 - p21};
        break;
      case 7:
        if (t1)
          row = {c0 + p00, c1 + p00 - p21 + p20, p01 + p21, blank};
        else
          row = {c0 + p00, p01, p01 + p21, c1 - c0 + p20 - p21};
        break;
      case 8:
        if (t1)
          row = {c0 + p00, c1 + p00 - p21 + p20, p01 + p21 + p10, p11};
        else
          row = {c0 + p00, c1 + p00 - p21 + p20, p01 + p21, blank};
        break;
      case 9:
        if (t1)
          row = {c0 + p00, c1 + p01 + p10 + p00 + p20, p01 + p21 + p10, p11};
        else
          row = {c0 + p00, c1 + p00 - p21 + p20, p01 + p21 + p10, p11};
        break;
      case 10:
        if (t1)
          row = {c0 + p00, c1 + p01 + p10 + p00 + p20,
                 p01 + p21 + p10 + p11, p11};
        else
          row = {c0 + p00, c1 + p01 + p10 + p00 + p20, p01 + p21 + p10, p11};
        break;
      case 11:
        row = {c0 + p00, c1 + p01 + p10 + p00 + p20, p01 + p21 + p10 + p11,
               p11};
        break;
      default:
        fail(s, "unexpected step number");
        return;
    }

    const int kap[4] = {s.k00, s.k01, s.k10, s.k11};
    for (int qtr = 0; qtr < 4; ++qtr) {
      if (!row[qtr]) continue;
      const i128 got =
          i128(kap[qtr]) * rk + value_of(rho_, s.d + std::size_t(qtr) * s.k, s.k);
      if (got != *row[qtr]) {
        std::ostringstream os;
        os << "quarter " << qtr << " mismatch";
        fail(s, os.str());
      }
      ++cells_checked;
    }
    ++rows_checked;

    // The last table row must leave kappa11 == 0 (checked ahead of the
    // final carry pass).
    const int last = t1 ? 10 : 11;
    if (s.step == last) {
      ++final_kappa_checks;
      if (s.k11 != 0) fail(s, "kappa11 nonzero after the last table step");
    }
  }

  std::uint32_t rho_;
  std::vector<Frame> stack_;
  std::vector<std::string> failures_;
};

}  // namespace krtest
