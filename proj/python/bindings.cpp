// bindings.cpp - python module exposing the three multipliers over limb
// vectors plus the E-case coverage counters.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <vector>

#include "krmul/karatsuba_roche.hpp"
#include "krmul/karatsuba_std.hpp"
#include "krmul/limb_core.hpp"
#include "krmul/schoolbook.hpp"
#include "krmul/text_io.hpp"

namespace py = pybind11;

namespace {

void check_operand(const std::vector<krmul::limb>& a, std::uint32_t rho) {
  for (auto l : a)
    if (l >= rho) throw std::invalid_argument("limb out of range for radix");
}

std::vector<krmul::limb> mul_limbs(const std::vector<krmul::limb>& a,
                                   const std::vector<krmul::limb>& b,
                                   std::uint32_t rho, const std::string& algo,
                                   std::size_t threshold) {
  if (!krmul::radix_valid(rho)) throw std::invalid_argument("radix out of range");
  check_operand(a, rho);
  check_operand(b, rho);
  std::vector<krmul::limb> d(a.size() + b.size());
  if (algo == "sb") {
    krmul::sb_mul(rho, d.data(), a.data(), a.size(), b.data(), b.size());
  } else if (algo == "ks") {
    krmul::ScratchArena arena(krmul::ks_scratch_limbs(a.size(), b.size()));
    krmul::ks_mul(rho, d.data(), a.data(), a.size(), b.data(), b.size(), arena,
                  threshold);
  } else if (algo == "kr") {
    krmul::mpi_mul_kr(rho, d.data(), a.data(), a.size(), b.data(), b.size(),
                      threshold);
  } else {
    throw std::invalid_argument("algo must be one of 'sb', 'ks', 'kr'");
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "space-efficient multi-precision multiplication kernels";
  m.attr("default_threshold") = krmul::kDefaultThreshold;

  m.def("mul_limbs", &mul_limbs, py::arg("a"), py::arg("b"), py::arg("rho"),
        py::arg("algo") = "kr", py::arg("threshold") = krmul::kDefaultThreshold,
        "Multiply two limb sequences (most significant limb first); returns "
        "len(a)+len(b) limbs.");

  m.def("to_hex", [](const std::vector<krmul::limb>& a, std::uint32_t rho) {
    return krmul::to_hex(rho, a.data(), a.size());
  });
  m.def("parse_hex", [](const std::string& s, std::uint32_t rho) {
    return krmul::parse_hex(rho, s);
  });

  m.def("ecase_counters", [] {
    const auto c = krmul::ecase_counters();
    py::dict d;
    d["case1_nonneg"] = c.case1_nonneg;
    d["case1_neg"] = c.case1_neg;
    d["case2"] = c.case2;
    d["case3"] = c.case3;
    d["e_exact_pow"] = c.e_exact_pow;
    return d;
  });
  m.def("reset_ecase_counters", &krmul::reset_ecase_counters);
}
