// binconc: exact binomial concentration values, tables and verification suites.

#include "binconc.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace binconc;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
// --coeffs accepts vectors this close to unit norm and rescales them, so
// 8-digit inputs like 0.70710678 are usable.
constexpr double kCoeffNormTol = 1e-7;

struct FArgs {
  std::int64_t n = 0;
  std::int64_t k = 0;
  int digits = 6;
  bool exact = false;
  bool truncate = false;
};

struct TableArgs {
  std::int64_t n_min = 3;
  std::int64_t n_max = 20;
  std::string k_policy = "full";
  int digits = 2;
  std::string format = "markdown";
  bool truncate = false;
};

struct VerifyArgs {
  std::string suite = "all";
  std::optional<std::int64_t> n_max;
  std::size_t count = 10000;
  std::uint64_t seed = 1;
};

struct RademacherArgs {
  std::vector<double> coeffs;
  std::optional<std::size_t> random;
  std::uint64_t seed = 0;
  std::size_t max_n = 15;
  double t = 1.0;
  std::optional<std::uint64_t> trials;
};

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(12);
  out << x;
  return out.str();
}

int cmd_f(const FArgs& a) {
  const ExactProb v = f(a.n, a.k);
  if (a.exact) {
    std::cout << v.str() << '\n';
  } else {
    std::cout << to_decimal(v, a.digits, a.truncate ? Rounding::Truncate : Rounding::HalfEven) << '\n';
  }
  return 0;
}

int cmd_table(const TableArgs& a) {
  static const std::map<std::string, KPolicy> policies{{"half", KPolicy::Half}, {"full", KPolicy::Full}};
  static const std::map<std::string, TableFormat> formats{
      {"csv", TableFormat::Csv}, {"markdown", TableFormat::Markdown}, {"latex", TableFormat::Latex}, {"json", TableFormat::Json}};
  TableSpec spec;
  spec.n_min = a.n_min;
  spec.n_max = a.n_max;
  spec.k_policy = policies.at(a.k_policy);
  spec.digits = a.digits;
  spec.format = formats.at(a.format);
  spec.rounding = a.truncate ? Rounding::Truncate : Rounding::HalfEven;
  std::cout << render_table(spec);
  return 0;
}

SuiteResult run_suite(const std::string& suite, const VerifyArgs& a) {
  auto n_or = [&](std::int64_t fallback) { return a.n_max.value_or(fallback); };
  if (suite == "theorem") return verify_theorem(n_or(500));
  if (suite == "chvatal") return verify_chvatal(n_or(200));
  if (suite == "be") return verify_berry_esseen(n_or(200));
  if (suite == "cases") return verify_cases(n_or(500));
  if (suite == "rademacher") return verify_rademacher(a.count, a.seed);
  throw std::domain_error("unknown suite " + suite);
}

int cmd_verify(const VerifyArgs& a) {
  if (a.n_max && *a.n_max < 2) throw std::domain_error("verify: --n-max must be >= 2");
  const std::vector<std::string> suites =
      a.suite == "all" ? std::vector<std::string>{"theorem", "chvatal", "be", "cases", "rademacher"}
                       : std::vector<std::string>{a.suite};
  const ReportLine* first_bad = nullptr;
  SuiteResult all;
  for (const auto& s : suites) {
    SuiteResult r = run_suite(s, a);
    for (const auto& line : r.lines) std::cout << line.jsonl() << '\n';
    std::size_t failed = 0;
    for (const auto& line : r.lines) failed += line.ok ? 0 : 1;
    std::cerr << "suite " << s << ": " << r.lines.size() << " certificates, " << failed << " failed\n";
    for (const auto& note : r.notes) std::cerr << "note: " << note << '\n';
    all.append(std::move(r));
  }
  std::cout.flush();
  first_bad = all.first_failure();
  if (first_bad) {
    std::cerr << "FAILED, first counterexample: " << first_bad->jsonl() << '\n';
    return kExitFailure;
  }
  std::cerr << "all certificates hold\n";
  return 0;
}

int cmd_chvatal(std::int64_t n) {
  const auto mins = argmin_chvatal(n);
  std::cout << "minimizers: {";
  for (std::size_t i = 0; i < mins.size(); ++i) std::cout << (i ? ", " : "") << mins[i];
  std::cout << "} (2n/3 = ";
  if ((2 * n) % 3 == 0) {
    std::cout << 2 * n / 3;
  } else {
    std::cout << 2 * n << "/3";
  }
  std::cout << ")\n";
  return 0;
}

int cmd_rademacher(const RademacherArgs& a) {
  if (a.random) {
    const TomaszewskiReport r = tomaszewski_property(*a.random, a.seed, a.max_n);
    std::cout << "vectors: " << r.count << ", min P(|X|<=1) = " << fmt(r.min_prob) << '\n';
    std::cout << "all >= 0.5: " << (r.holds ? "true" : "false") << '\n';
    return r.holds ? 0 : kExitFailure;
  }
  const double norm = std::sqrt(SignVector::norm_squared(a.coeffs));
  if (std::abs(norm - 1.0) > kCoeffNormTol) {
    throw std::domain_error("rademacher: coefficients have norm " + fmt(norm) + ", expected 1");
  }
  const SignVector v = SignVector::normalized(a.coeffs);
  const std::string event = "P(|X|<=" + fmt(a.t) + ")";
  if (a.trials || v.size() > rademacher::kMaxExhaustive) {
    const MonteCarloEstimate e = sample_prob_within(v, a.t, a.trials.value_or(1000000), a.seed);
    std::cout << event << " ~ " << fmt(e.estimate) << " (se " << fmt(e.std_error) << ", " << e.trials << " trials)\n";
  } else {
    std::cout << event << " = " << fmt(prob_within(v, a.t)) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact binomial concentration f_n(k) = P(|B(n,k/n) - k| <= sqrt(k(n-k)/n))"};
  app.require_subcommand(1);

  FArgs fa;
  auto* f_cmd = app.add_subcommand("f", "print f_n(k)");
  f_cmd->add_option("--n", fa.n, "number of trials")->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{2147483647}));
  f_cmd->add_option("--k", fa.k, "mean, 0 <= k <= n")->required();
  f_cmd->add_option("--digits", fa.digits, "fractional digits")->check(CLI::Range(1, 50));
  f_cmd->add_flag("--exact", fa.exact, "print num/den");
  f_cmd->add_flag("--truncate", fa.truncate, "truncate instead of round-half-even");

  TableArgs ta;
  auto* t_cmd = app.add_subcommand("table", "tabulate f_n(k)");
  t_cmd->add_option("--n-min", ta.n_min)->capture_default_str();
  t_cmd->add_option("--n-max", ta.n_max)->capture_default_str();
  t_cmd->add_option("--k-policy", ta.k_policy, "half: k <= n/2, full: k <= n-1")
      ->check(CLI::IsMember({"half", "full"}))
      ->capture_default_str();
  t_cmd->add_option("--digits", ta.digits)->capture_default_str();
  t_cmd->add_option("--format", ta.format)
      ->check(CLI::IsMember({"csv", "markdown", "latex", "json"}))
      ->capture_default_str();
  t_cmd->add_flag("--truncate", ta.truncate, "truncate instead of round-half-even");

  VerifyArgs va;
  auto* v_cmd = app.add_subcommand("verify", "run verification suites; JSON lines on stdout");
  v_cmd->add_option("--suite", va.suite)
      ->check(CLI::IsMember({"theorem", "chvatal", "be", "cases", "rademacher", "all"}))
      ->capture_default_str();
  v_cmd->add_option("--n-max", va.n_max, "largest n (defaults: theorem 500, chvatal 200, be 200, cases 500)");
  v_cmd->add_option("--count", va.count, "random vectors for the rademacher suite")->capture_default_str();
  v_cmd->add_option("--seed", va.seed, "seed for the rademacher suite")->capture_default_str();

  std::int64_t chv_n = 0;
  auto* c_cmd = app.add_subcommand("chvatal", "argmin over m of P(B(n, m/n) <= m)");
  c_cmd->add_option("--n", chv_n)->required();

  RademacherArgs ra;
  auto* r_cmd = app.add_subcommand("rademacher", "P(|sum a_j eps_j| <= t) for unit vectors a");
  auto* coeffs = r_cmd->add_option("--coeffs", ra.coeffs, "comma-separated unit vector")->delimiter(',');
  auto* random = r_cmd->add_option("--random", ra.random, "check this many random unit vectors");
  coeffs->excludes(random);
  r_cmd->add_option("--seed", ra.seed)->capture_default_str();
  r_cmd->add_option("--max-n", ra.max_n, "longest random vector")->capture_default_str();
  r_cmd->add_option("--t", ra.t, "threshold")->capture_default_str();
  r_cmd->add_option("--trials", ra.trials, "Monte Carlo instead of exhaustive enumeration");

  try {
    app.parse(argc, argv);
    if (r_cmd->parsed() && !*coeffs && !*random) throw CLI::RequiredError("--coeffs or --random");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (f_cmd->parsed()) return cmd_f(fa);
    if (t_cmd->parsed()) return cmd_table(ta);
    if (v_cmd->parsed()) return cmd_verify(va);
    if (c_cmd->parsed()) return cmd_chvatal(chv_n);
    if (r_cmd->parsed()) return cmd_rademacher(ra);
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
