// Acceptance run: one PASS/FAIL line per criterion, details on stderr.

#include "binconc.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

using namespace binconc;

namespace {

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

  void check(bool ok, const std::string& what) {
    if (!ok) {
      ok_ = false;
      failures_.push_back(what);
    }
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  bool finish() const {
    std::cout << (ok_ ? "PASS" : "FAIL") << " criterion " << id_ << ": " << title_ << " (" << std::fixed
              << std::setprecision(1) << elapsed() << " s)" << std::endl;
    for (const auto& f : failures_) std::cerr << "  criterion " << id_ << ": " << f << '\n';
    return ok_;
  }

 private:
  int id_;
  std::string title_;
  std::chrono::steady_clock::time_point start_;
  bool ok_ = true;
  std::vector<std::string> failures_;
};

std::string num(double x, int digits = 10) {
  std::ostringstream out;
  out << std::setprecision(digits) << x;
  return out.str();
}

struct Printed {
  std::int64_t n;
  std::int64_t k;
  double value;
};

std::vector<Printed> load(const std::string& name) {
  std::ifstream in(std::string(BINCONC_TEST_DATA) + "/" + name);
  std::vector<Printed> rows;
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string n, k, v;
    std::getline(ss, n, ',');
    std::getline(ss, k, ',');
    std::getline(ss, v, ',');
    rows.push_back({std::stoll(n), std::stoll(k), std::stod(v)});
  }
  return rows;
}

bool theorem_reproduction() {
  Criterion c(1, "exact argmin of f_n is {1, n-1} with min ((n-1)/n)^(n-1), n in [2, 500]");
  for (std::int64_t n = 2; n <= 500; ++n) {
    const ArgminReport r = argmin_f(n);
    const std::vector<std::int64_t> expected = n == 2 ? std::vector<std::int64_t>{1} : std::vector<std::int64_t>{1, n - 1};
    c.check(r.minimizers == expected, "n=" + std::to_string(n) + " minimizers differ");
    c.check(r.min_value == f1_closed_form(n), "n=" + std::to_string(n) + " minimum differs from closed form");
  }
  c.check(c.elapsed() < 300, "runtime over 5 minutes");
  return c.finish();
}

bool symmetry() {
  Criterion c(2, "f_n(k) = f_n(n-k) exactly, n <= 500");
  for (std::int64_t n = 1; n <= 500; ++n) c.check(symmetry_check(n), "n=" + std::to_string(n));
  return c.finish();
}

bool printed_constants() {
  Criterion c(3, "printed constants: f_40(1), Phi(1)-Phi(-1), C_5..C_8, k = 4 and k = 9 anchors");
  const double f40 = f(40, 1).to_double();
  c.check(std::abs(f40 - 0.36323244) <= 5e-9,
          "f_40(1) = " + num(f40) + ", expected 0.36323244 +- 5e-9; the printed value equals (39/40)^40 = " +
              num(std::pow(39.0 / 40.0, 40.0)));
  const double w = normal_cdf(1) - normal_cdf(-1);
  c.check(w > 0.68268948 && w < 0.68268950, "Phi(1)-Phi(-1) = " + num(w, 17));
  const double printed_ck[] = {1.80299, 1.52806, 1.26193, 1.01213};
  for (int k = 5; k <= 8; ++k) {
    const double ck = ck_constant(k);
    c.check(std::abs(ck - printed_ck[k - 5]) <= 5e-6, "C_" + std::to_string(k) + " = " + num(ck));
  }
  const double k4 = static_cast<double>(k4_sufficient(40));
  c.check(std::abs(k4 - 1.42635) <= 5e-6, "k = 4 anchor = " + num(k4));
  const double k9 = static_cast<double>(k9_sufficient(100));
  c.check(std::abs(k9 - 1.25277) <= 5e-6, "k = 9 anchor = " + num(k9));
  return c.finish();
}

bool tables() {
  Criterion c(4, "printed tables n = 3..38 within 0.01, n = 39 list within 5e-7, regeneration under 60 s");
  TableSpec spec;
  spec.n_min = 3;
  spec.n_max = 39;
  spec.k_policy = KPolicy::Full;
  spec.digits = 6;
  const auto entries = table_entries(spec);
  auto value = [&](std::int64_t n, std::int64_t k) {
    for (const auto& e : entries) {
      if (e.n == n && e.k == k) return e.value.to_double();
    }
    return std::numeric_limits<double>::quiet_NaN();
  };
  const auto printed = load("printed_tables.csv");
  c.check(printed.size() == 702, "expected 702 printed entries, read " + std::to_string(printed.size()));
  for (const auto& p : printed) {
    const double v = value(p.n, p.k);
    c.check(std::abs(v - p.value) <= 0.01, "n=" + std::to_string(p.n) + " k=" + std::to_string(p.k) + " f=" + num(v));
  }
  const auto list = load("printed_n39.csv");
  c.check(list.size() == 19, "expected 19 entries for n = 39");
  for (const auto& p : list) {
    const double v = value(p.n, p.k);
    c.check(std::abs(v - p.value) <= 5e-7, "n=39 k=" + std::to_string(p.k) + " f=" + num(v));
  }
  for (auto format : {TableFormat::Csv, TableFormat::Markdown, TableFormat::Latex, TableFormat::Json}) {
    spec.format = format;
    c.check(!render_table(spec).empty(), "empty rendering");
  }
  c.check(c.elapsed() < 60, "regeneration over 60 s");
  return c.finish();
}

bool berry_esseen_chain() {
  Criterion c(5, "be_bound <= C0/sqrt(k) < 0.15014495 and f_n(k) > 0.38239958, n in [40, 200], k in [10, n/2]");
  c.check(be::kC0 / std::sqrt(10.0) < be::kSideCap, "C0/sqrt(10) >= 0.15014495");
  for (std::int64_t n = 40; n <= 200; ++n) {
    for (std::int64_t k = 10; 2 * k <= n; ++k) {
      const std::string at = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      const double bound = be_bound(n, k);
      const double k_cap = be::kC0 / std::sqrt(static_cast<double>(k));
      c.check(bound <= k_cap * (1 + 1e-12) && k_cap < be::kSideCap, at + " bound chain");
      c.check(f(n, k).rational() > be::lower_bound_exact(), at + " f_n(k) <= 0.38239958");
      c.check(verify_chain(n, k).holds, at + " chain report");
      const double disc = sup_discrepancy(n, k);
      c.check(disc <= bound, at + " sup discrepancy " + num(disc) + " > " + num(bound));
    }
  }
  return c.finish();
}

bool case_certificates() {
  Criterion c(6, "closed forms k = 2..4 and ratio inequality i = 7..11 for n in [40, 500]; f_n(9) > 0.61 for n < 100");
  for (std::int64_t n = 40; n <= 500; ++n) {
    const std::string at = "n=" + std::to_string(n);
    for (std::int64_t k = 2; k <= 4; ++k) {
      c.check(closed_form_f(n, k) == f(n, k), at + " k=" + std::to_string(k) + " closed form");
    }
    for (std::int64_t i = 7; i <= 11; ++i) c.check(product_ratio_ge_one(n, 9, i), at + " i=" + std::to_string(i));
    if (n < 100) c.check(f(n, 9).rational() > BigRational(61, 100), at + " f_n(9) <= 0.61");
  }
  return c.finish();
}

bool tomaszewski() {
  Criterion c(7, "P(|X|<=1) = 1/2 at (1/sqrt2, 1/sqrt2); 10^4 random unit vectors, n <= 15, all >= 1/2");
  const double h = 1 / std::sqrt(2.0);
  const double p = prob_within(SignVector({h, h}), 1);
  c.check(p == 0.5, "extremal pair gives " + num(p));
  const TomaszewskiReport r = tomaszewski_property(10000, 20240601, 15);
  c.check(r.holds, "minimum " + num(r.min_prob));
  c.check(c.elapsed() < 120, "runtime over 2 minutes");
  return c.finish();
}

bool properties() {
  Criterion c(8, "PMF normalization, CDF monotonicity, inclusive window boundary, Chvatal argmin, n in [2, 200]");
  for (std::int64_t n = 1; n <= 60; ++n) {
    for (std::int64_t k = 0; k <= n; ++k) {
      const BinomialParams params(n, k);
      BigRational total = 0;
      ExactProb prev = ExactProb::zero();
      bool monotone = true;
      for (std::int64_t i = 0; i <= n; ++i) {
        total += pmf(params, i).rational();
        const ExactProb cd = cdf(params, i);
        monotone = monotone && prev <= cd;
        prev = cd;
      }
      const std::string at = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      c.check(total == 1, at + " pmf sum");
      c.check(monotone && prev == ExactProb::one(), at + " cdf");
    }
  }
  const ConcentrationQuery q(4, 2);
  c.check(q.contains(1) && q.contains(3) && window(4, 2) == Window{1, 3} && f(4, 2) == ExactProb(7, 8),
          "n=4 k=2 boundary atoms excluded");
  for (std::int64_t n = 2; n <= 200; ++n) {
    const auto nearest = nearest_to_two_thirds(n);
    for (auto m : argmin_chvatal(n)) {
      c.check(std::find(nearest.begin(), nearest.end(), m) != nearest.end(), "chvatal n=" + std::to_string(n));
    }
  }
  return c.finish();
}

}  // namespace

int main() {
  int failed = 0;
  for (auto run : {theorem_reproduction, symmetry, printed_constants, tables, berry_esseen_chain, case_certificates,
                   tomaszewski, properties}) {
    failed += run() ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
