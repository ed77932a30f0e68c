// Command-line surface: exact generalized Stirling numbers, first-kind
// Stirling numbers, the rational zeta approximant, decay sweeps, the zeta
// oracle, and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 argument error, 3 I/O.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zetastir/report.hpp"
#include "zetastir/verify.hpp"
#include "zetastir/zeta.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitIoError = 3;

struct SnpOptions {
  long n = 0;
  long p = 1;
  std::string method = "explicit";
  std::string format = "frac";
  unsigned digits = 30;
};

int run_snp(const SnpOptions& o) {
  zetastir::Rational v;
  if (o.method == "explicit") {
    v = zetastir::gen_stirling_explicit(static_cast<unsigned long>(o.n),
                                        static_cast<unsigned long>(o.p));
  } else if (o.method == "recurrence") {
    v = zetastir::gen_stirling_row(static_cast<unsigned long>(o.p),
                                   static_cast<std::size_t>(o.n))
            .values[static_cast<std::size_t>(o.n)];
  } else {
    v = zetastir::gen_stirling_butzer(static_cast<unsigned long>(o.n),
                                      static_cast<unsigned long>(o.p));
  }
  if (o.format == "dec") {
    std::cout << zetastir::decimal_render(v, o.digits) << "\n";
  } else {
    std::cout << v.fraction_str() << "\n";
  }
  return kExitOk;
}

struct ZetaOptions {
  long p = 2;
  long N = 2;
  std::string format = "frac";
  unsigned digits = 30;
  std::vector<long> limit_override;
};

int run_zeta(const ZetaOptions& o) {
  zetastir::ZetaApproxResult r;
  if (o.limit_override.empty()) {
    r = zetastir::zeta_n_approx(o.p, o.N);
  } else {
    std::cerr << "warning: custom truncation limits " << o.limit_override[0] << ","
              << o.limit_override[1] << "; output departs from the defining zeta_N(p) sums\n";
    r = zetastir::zeta_n_limits(o.p, o.N, o.limit_override[0], o.limit_override[1]);
  }
  if (o.format == "dec") {
    std::cout << zetastir::decimal_render(r.value, o.digits) << "\n";
  } else {
    std::cout << r.value.fraction_str() << "\n";
  }
  return kExitOk;
}

struct SweepOptions {
  long p = 2;
  long n_min = 0;
  long n_max = -1;
  long step = 4;
  std::string out_path;
  std::string format = "csv";
  unsigned digits = 30;
};

int run_sweep(const SweepOptions& o) {
  if (o.step <= 0) throw CLI::ValidationError("--step must be positive");
  std::vector<long> Ns;
  for (long N = o.n_min; N <= o.n_max; N += o.step) Ns.push_back(N);
  if (Ns.empty()) throw CLI::ValidationError("empty N range");
  auto records = zetastir::error_sweep(o.p, Ns);
  std::string payload = o.format == "json" ? zetastir::sweep_json(records, o.digits)
                                           : zetastir::sweep_csv(records, o.digits);
  std::ofstream out(o.out_path, std::ios::binary);
  if (!out || !(out << payload) || !out.flush()) {
    std::cerr << "error: cannot write " << o.out_path << "\n";
    return kExitIoError;
  }
  if (records.size() >= 2) {
    zetastir::Rational slope = zetastir::regression_slope_ln_abs_err(records);
    std::cout << "ln-error slope: " << zetastir::decimal_render(slope, 6) << "\n";
  } else {
    std::cout << "ln-error slope: n/a (single record)\n";
  }
  return kExitOk;
}

int run_verify(const std::string& suite) {
  std::vector<zetastir::CheckResult> checks;
  if (suite == "stirling") checks = zetastir::verify_stirling();
  else if (suite == "gf") checks = zetastir::verify_gf();
  else if (suite == "gamma") checks = zetastir::verify_gamma();
  else if (suite == "integral") checks = zetastir::verify_integral();
  else if (suite == "zeta") checks = zetastir::verify_zeta();
  else checks = zetastir::verify_all();
  bool all_ok = true;
  for (const auto& c : checks) {
    std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
    std::cout << "\n";
    all_ok = all_ok && c.passed;
  }
  std::cout << (all_ok ? "verification passed" : "verification FAILED") << "\n";
  return all_ok ? kExitOk : kExitVerifyFailed;
}

int run_oracle(long p, unsigned digits) {
  zetastir::Ball z = zetastir::zeta_oracle(p, zetastir::pow10(-static_cast<long>(digits)));
  std::cout << zetastir::decimal_render(z.center(), digits) << "\n";
  std::cout << "radius <= " << zetastir::decimal_render(z.radius(), digits + 10) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact generalized Stirling numbers and rational zeta approximants"};
  app.require_subcommand(1);

  SnpOptions snp;
  CLI::App* snp_cmd = app.add_subcommand("snp", "print S_n^p");
  snp_cmd->add_option("--n", snp.n, "row index n >= 0")->required()->check(CLI::NonNegativeNumber);
  snp_cmd->add_option("--p", snp.p, "order p >= 1")->required()->check(CLI::PositiveNumber);
  snp_cmd->add_option("--method", snp.method, "evaluation route")
      ->check(CLI::IsMember({"explicit", "recurrence", "butzer"}));
  snp_cmd->add_option("--format", snp.format)->check(CLI::IsMember({"frac", "dec"}));
  snp_cmd->add_option("--digits", snp.digits)->check(CLI::PositiveNumber);

  long s1_n = 0, s1_k = 0;
  CLI::App* s1_cmd = app.add_subcommand("stirling1", "print s(n,k)");
  s1_cmd->add_option("--n", s1_n)->required()->check(CLI::NonNegativeNumber);
  s1_cmd->add_option("--k", s1_k)->required()->check(CLI::NonNegativeNumber);

  ZetaOptions zeta;
  CLI::App* zeta_cmd = app.add_subcommand("zeta", "print the rational approximant zeta_N(p)");
  zeta_cmd->add_option("--p", zeta.p)->required();
  zeta_cmd->add_option("--N", zeta.N)->required();
  zeta_cmd->add_option("--format", zeta.format)->check(CLI::IsMember({"frac", "dec"}));
  zeta_cmd->add_option("--digits", zeta.digits)->check(CLI::PositiveNumber);
  zeta_cmd->add_option("--limit-override", zeta.limit_override,
                       "first,second truncation limits (exploratory)")
      ->delimiter(',')
      ->expected(2);

  SweepOptions sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "error decay experiment over a range of N");
  sweep_cmd->add_option("--p", sweep.p)->required();
  sweep_cmd->add_option("--n-min", sweep.n_min)->required();
  sweep_cmd->add_option("--n-max", sweep.n_max)->required();
  sweep_cmd->add_option("--step", sweep.step);
  sweep_cmd->add_option("--out", sweep.out_path, "output file")->required();
  sweep_cmd->add_option("--format", sweep.format)->check(CLI::IsMember({"csv", "json"}));
  sweep_cmd->add_option("--digits", sweep.digits)->check(CLI::PositiveNumber);

  std::string suite = "all";
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the identity verification suites");
  verify_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "stirling", "gf", "gamma", "integral", "zeta"}));

  long oracle_p = 2;
  unsigned oracle_digits = 30;
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "print a zeta(p) enclosure");
  oracle_cmd->add_option("--p", oracle_p)->required();
  oracle_cmd->add_option("--digits", oracle_digits)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArguments;
  }

  try {
    if (snp_cmd->parsed()) return run_snp(snp);
    if (s1_cmd->parsed()) {
      if (s1_k > s1_n) {
        std::cerr << "error: need 0 <= k <= n\n";
        return kExitBadArguments;
      }
      zetastir::StirlingFirstTable t(static_cast<std::size_t>(s1_n));
      std::cout << t.at(static_cast<std::size_t>(s1_n), static_cast<std::size_t>(s1_k)).get_str()
                << "\n";
      return kExitOk;
    }
    if (zeta_cmd->parsed()) return run_zeta(zeta);
    if (sweep_cmd->parsed()) return run_sweep(sweep);
    if (verify_cmd->parsed()) return run_verify(suite);
    if (oracle_cmd->parsed()) return run_oracle(oracle_p, oracle_digits);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArguments;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArguments;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArguments;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  }
  return kExitBadArguments;
}
