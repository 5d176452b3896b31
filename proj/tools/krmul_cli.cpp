// krmul_cli.cpp - command line front end: mul, verify, bench.
//
// Exit codes: 0 success, 1 verification mismatch or runtime failure,
// 2 usage/parse errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "krmul/bench.hpp"
#include "krmul/karatsuba_roche.hpp"
#include "krmul/karatsuba_std.hpp"
#include "krmul/schoolbook.hpp"
#include "krmul/text_io.hpp"
#include "krmul/verify.hpp"

namespace {

int cmd_mul(std::uint32_t rho, const std::string& a_text,
            const std::string& b_text, const std::string& algo_text,
            std::size_t threshold) {
  krmul::Algo algo;
  if (!krmul::algo_from_name(algo_text, algo)) {
    std::cerr << "unknown algorithm '" << algo_text << "' (expected sb|ks|kr)\n";
    return 2;
  }
  std::vector<krmul::limb> a, b;
  try {
    a = krmul::parse_natural(rho, a_text);
    b = krmul::parse_natural(rho, b_text);
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  }
  std::vector<krmul::limb> d(a.size() + b.size());
  switch (algo) {
    case krmul::Algo::sb:
      krmul::sb_mul(rho, d.data(), a.data(), a.size(), b.data(), b.size());
      break;
    case krmul::Algo::ks: {
      krmul::ScratchArena arena(krmul::ks_scratch_limbs(a.size(), b.size()));
      krmul::ks_mul(rho, d.data(), a.data(), a.size(), b.data(), b.size(),
                    arena, threshold);
      break;
    }
    case krmul::Algo::kr:
      krmul::mpi_mul_kr(rho, d.data(), a.data(), a.size(), b.data(), b.size(),
                        threshold);
      break;
  }
  auto trimmed = krmul::trim_leading_zeros(d);
  std::cout << krmul::format_natural(rho, trimmed.data(), trimmed.size())
            << "\n";
  return 0;
}

int cmd_verify(const krmul::VerifyOptions& opts) {
  const auto report = krmul::run_verify(opts);
  if (report.vacuous) {
    std::cout << "warning: 0 trials requested, vacuous pass\n";
    return 0;
  }
  const auto& c = report.counters;
  std::cout << "checked " << report.products_checked
            << " products (sb vs ks vs kr)\n"
            << "cases hit: C1+=" << c.case1_nonneg << " C1-=" << c.case1_neg
            << " C2=" << c.case2 << " C3=" << c.case3
            << " E=-rho^k=" << c.e_exact_pow << "\n";
  if (!report.ok) {
    std::cout << report.mismatch << "\nFAIL\n";
    return 1;
  }
  if (!report.all_cases_hit()) {
    std::cout << "FAIL: not every E case was exercised\n";
    return 1;
  }
  std::cout << "OK\n";
  return 0;
}

int cmd_bench(const krmul::BenchConfig& cfg, const std::string& out_path) {
  const auto records = krmul::run_bench(cfg);
  if (out_path.empty() || out_path == "-") {
    krmul::write_csv(std::cout, records);
    return 0;
  }
  std::ofstream os(out_path);
  if (!os) {
    std::cerr << "cannot open '" << out_path << "' for writing\n";
    return 1;
  }
  krmul::write_csv(os, records);
  if (!os.good()) {
    std::cerr << "write failure on '" << out_path << "'\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multi-precision natural-number multiplication workbench"};
  app.require_subcommand(1);

  unsigned radix_bits = 16;
  app.add_option("--radix-bits", radix_bits,
                 "limb width in bits; the radix is 2^bits")
      ->check(CLI::Range(1u, 16u));

  // mul
  auto* mul = app.add_subcommand("mul", "multiply two numerals");
  std::string a_text, b_text, algo_text = "kr";
  std::size_t mul_threshold = krmul::kDefaultThreshold;
  mul->add_option("a", a_text, "first factor")->required();
  mul->add_option("b", b_text, "second factor")->required();
  mul->add_option("--algo", algo_text, "sb, ks or kr");
  mul->add_option("--threshold", mul_threshold, "Karatsuba cutoff");

  // verify
  auto* verify = app.add_subcommand(
      "verify", "cross-check sb/ks/kr on random and adversarial inputs");
  krmul::VerifyOptions vopts;
  verify->add_option("--trials", vopts.trials, "number of random products");
  verify->add_option("--max-len", vopts.max_len, "maximum operand length");
  verify->add_option("--seed", vopts.seed, "random seed");
  verify->add_option("--threshold", vopts.threshold, "Karatsuba cutoff");
  verify->add_option("--radices", vopts.radices, "radices to draw from");

  // bench
  auto* bench = app.add_subcommand("bench", "timing experiment, CSV output");
  krmul::BenchConfig bcfg;
  std::string out_path = "-";
  std::string algos_text = "sb,ks,kr";
  std::size_t step = 0, geometric = 2;
  bench->add_option("--min", bcfg.min_len, "smallest length");
  bench->add_option("--max", bcfg.max_len, "largest length");
  bench->add_option("--step", step, "arithmetic length step");
  bench->add_option("--geometric", geometric, "geometric growth factor");
  bench->add_option("--algos", algos_text, "comma-separated subset of sb,ks,kr");
  bench->add_option("--out", out_path, "CSV path ('-' for stdout)");
  bench->add_option("--seed", bcfg.seed, "random seed");
  bench->add_option("--threshold", bcfg.threshold, "Karatsuba cutoff");
  bench->add_option("--reps", bcfg.reps_override,
                    "fixed repetitions per length (0 = auto schedule)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::uint32_t rho = 1u << radix_bits;

  if (mul->parsed()) return cmd_mul(rho, a_text, b_text, algo_text, mul_threshold);

  if (verify->parsed()) {
    for (std::uint32_t r : vopts.radices) {
      if (!krmul::radix_valid(r)) {
        std::cerr << "radix " << r << " out of range [2, 65536]\n";
        return 2;
      }
    }
    return cmd_verify(vopts);
  }

  if (bench->parsed()) {
    bcfg.rho = rho;
    bcfg.step = step;
    bcfg.geometric = geometric;
    bcfg.algos.clear();
    std::stringstream ss(algos_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      krmul::Algo a;
      if (!krmul::algo_from_name(tok, a)) {
        std::cerr << "unknown algorithm '" << tok << "'\n";
        return 2;
      }
      bcfg.algos.push_back(a);
    }
    if (bcfg.algos.empty() || bcfg.min_len == 0 || bcfg.max_len < bcfg.min_len) {
      std::cerr << "invalid bench configuration\n";
      return 2;
    }
    return cmd_bench(bcfg, out_path);
  }
  return 2;
}
