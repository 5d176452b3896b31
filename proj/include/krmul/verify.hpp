#pragma once
// verify.hpp - differential cross-checking of the three multipliers.

#include <cstdint>
#include <string>
#include <vector>

#include "krmul/karatsuba_roche.hpp"
#include "krmul/limb_core.hpp"

namespace krmul {

struct VerifyOptions {
  std::uint64_t trials = 1000;
  std::size_t max_len = 64;
  std::vector<std::uint32_t> radices = {2, 4, 10, 256, 65536};
  std::uint64_t seed = 1;
  std::size_t threshold = kDefaultThreshold;
};

struct VerifyReport {
  std::uint64_t products_checked = 0;
  bool ok = true;
  bool vacuous = false;       // trials == 0: nothing ran
  std::string mismatch;       // description of the first failing input
  ECaseCounters counters;     // classify_e hits accumulated over the run
  bool all_cases_hit() const {
    return counters.case1_nonneg && counters.case1_neg && counters.case2 &&
           counters.case3 && counters.e_exact_pow;
  }
};

// Random trials over the configured radices plus fixed adversarial inputs:
// all-(rho-1) operands and small-radix sweeps at threshold 2 that drive the
// recursion through every E case including the exact -rho^k point.
VerifyReport run_verify(const VerifyOptions& opts);

}  // namespace krmul
