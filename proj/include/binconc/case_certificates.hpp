#pragma once

// Certificates for f_n(k) >= f_n(1) when n >= 40 and 2 <= k <= 9.
//
// Every comparison between two probabilities is exact. The sufficient
// conditions that compare powers such as (1 - 3/(n-1))^(n-2) against 1 run
// in long double with a 1e-9 guard band.
// Monotonicity of those powers in n is sampled on monotonicity_grid(), not
// proven.

#include "binconc/berry_esseen.hpp"
#include "binconc/concentration.hpp"
#include "binconc/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace binconc {

enum class CaseId { K2, K3, K4, K5to8, K9 };

inline CaseId case_for(std::int64_t k) {
  switch (k) {
    case 2: return CaseId::K2;
    case 3: return CaseId::K3;
    case 4: return CaseId::K4;
    case 5: case 6: case 7: case 8: return CaseId::K5to8;
    case 9: return CaseId::K9;
    default: throw std::domain_error("case_for: k must be in [2, 9], got " + std::to_string(k));
  }
}

inline const char* to_string(CaseId id) {
  switch (id) {
    case CaseId::K2: return "K2";
    case CaseId::K3: return "K3";
    case CaseId::K4: return "K4";
    case CaseId::K5to8: return "K5to8";
    case CaseId::K9: return "K9";
  }
  return "?";
}

enum class Relation { GreaterEq, Greater, Equal };

struct CaseCertificate {
  CaseId case_id = CaseId::K2;
  std::int64_t k = 0;       // 0 when the check is not tied to one k
  std::int64_t n_lo = 0;    // n range covered; n_lo == n_hi for a single n
  std::int64_t n_hi = 0;
  std::string check;
  Relation relation = Relation::GreaterEq;
  double lhs = 0;
  double rhs = 0;
  bool exact = false;
  bool verdict = false;
  std::string detail;

  ReportLine to_report() const {
    ReportLine line;
    line.suite = "cases";
    line.name = std::string(to_string(case_id)) + "/" + check;
    if (n_lo == n_hi) line.n = n_lo;
    if (k != 0) line.k = k;
    line.lhs = lhs;
    line.rhs = rhs;
    line.ok = verdict;
    line.exact = exact;
    line.detail = detail;
    if (n_lo != n_hi) {
      line.detail = "n in [" + std::to_string(n_lo) + ", " + std::to_string(n_hi) + "]" +
                    (detail.empty() ? "" : "; " + detail);
    }
    return line;
  }
};

namespace detail {

inline bool relate(Relation r, const BigRational& lhs, const BigRational& rhs) {
  switch (r) {
    case Relation::GreaterEq: return lhs >= rhs;
    case Relation::Greater: return lhs > rhs;
    case Relation::Equal: return lhs == rhs;
  }
  return false;
}

inline bool relate(Relation r, long double lhs, long double rhs) {
  const long double guard = be::kGuard;
  switch (r) {
    case Relation::GreaterEq: return lhs >= rhs + guard;
    case Relation::Greater: return lhs > rhs + guard;
    case Relation::Equal: return std::abs(lhs - rhs) <= guard;
  }
  return false;
}

inline double to_double(const BigRational& q) {
  if (q < 0) return -ratio_to_double(-boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
  return ratio_to_double(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

inline CaseCertificate exact_cert(CaseId id, std::int64_t k, std::int64_t n, std::string check, Relation rel,
                                  const BigRational& lhs, const BigRational& rhs, std::string detail = {}) {
  return {id, k, n, n, std::move(check), rel, to_double(lhs), to_double(rhs), true, relate(rel, lhs, rhs),
          std::move(detail)};
}

inline CaseCertificate float_cert(CaseId id, std::int64_t k, std::int64_t n_lo, std::int64_t n_hi, std::string check,
                                  Relation rel, long double lhs, long double rhs, std::string detail = {}) {
  return {id, k, n_lo, n_hi, std::move(check), rel, static_cast<double>(lhs), static_cast<double>(rhs), false,
          relate(rel, lhs, rhs), std::move(detail)};
}

// |value - printed| <= tol, for constants printed to a fixed number of digits.
inline CaseCertificate approx_cert(CaseId id, std::int64_t k, std::int64_t n_lo, std::int64_t n_hi, std::string check,
                                   long double value, double printed, double tol) {
  std::ostringstream d;
  d << "tol=" << tol;
  return {id, k, n_lo, n_hi, std::move(check), Relation::Equal, static_cast<double>(value), printed, false,
          std::abs(value - static_cast<long double>(printed)) <= tol, d.str()};
}

// (1 - a/(x-1))^e in long double.
inline long double shrink_pow(long double x, long double a, long double e) {
  return std::exp(e * std::log1p(-a / (x - 1)));
}

inline long double factorial(int i) {
  long double r = 1;
  for (int j = 2; j <= i; ++j) r *= j;
  return r;
}

// sum_{i=lo}^{hi} k^i / i!
inline long double poisson_weight_sum(int k, int lo, int hi) {
  long double s = 0;
  for (int i = lo; i <= hi; ++i) s += std::pow(static_cast<long double>(k), i) / factorial(i);
  return s;
}

inline void require_case_n(std::int64_t n, const char* what) {
  if (n < be::kMinN) throw std::domain_error(std::string(what) + ": n must be >= 40, got " + std::to_string(n));
}

// log of shrink_pow, the quantity whose monotonicity is certified.
inline long double log_shrink_pow(long double x, long double a, long double e) { return e * std::log1p(-a / (x - 1)); }

// Strict monotonicity of (1 - a/(x-1))^(x-c) on a grid, checked on the log.
// Steps near 10^6 are ~1e-12, so the guard is a rounding floor relative to
// |log|, not the absolute kGuard.
inline CaseCertificate monotone_cert(CaseId id, std::int64_t k, const std::vector<std::int64_t>& grid, std::string check,
                                     long double a, long double c, bool increasing, std::string detail) {
  const long double sign = increasing ? 1 : -1;
  long double worst = INFINITY;
  long double scale = 0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const auto x0 = static_cast<long double>(grid[i - 1]);
    const auto x1 = static_cast<long double>(grid[i]);
    const long double h0 = log_shrink_pow(x0, a, x0 - c);
    const long double h1 = log_shrink_pow(x1, a, x1 - c);
    worst = std::min(worst, sign * (h1 - h0));
    scale = std::max({scale, std::abs(h0), std::abs(h1)});
  }
  const long double noise = 1024 * std::numeric_limits<long double>::epsilon() * scale;
  return {id, k, grid.front(), grid.back(), std::move(check), Relation::Greater, static_cast<double>(worst),
          static_cast<double>(noise), false, worst > noise, std::move(detail) + "; min log step vs rounding floor"};
}

}  // namespace detail

/// f_n(k) for k in {2, 3, 4} from its closed form over n^(n-1):
///   k=2: 2(n-2)^(n-1) + (10/3)(n-1)(n-2)^(n-2)
///   k=3: (9/2)(n-1)(n-3)^(n-2) + (63/8)(n-1)(n-2)(n-3)^(n-3)
///   k=4: (32/3)(n-1)(n-2)(n-4)^(n-3) + (96/5)(n-1)(n-2)(n-3)(n-4)^(n-4)
/// Valid while the window is {k-1, k, k+1}, which holds for n >= 40.
inline ExactProb closed_form_f(std::int64_t n, std::int64_t k) {
  detail::require_case_n(n, "closed_form_f");
  using boost::multiprecision::pow;
  const BigInt N(n);
  const auto e = [n](std::int64_t d) { return static_cast<unsigned>(n - d); };
  BigRational num;
  switch (k) {
    case 2:
      num = BigRational(2 * pow(N - 2, e(1))) + BigRational(10, 3) * BigRational((N - 1) * pow(N - 2, e(2)));
      break;
    case 3:
      num = BigRational(9, 2) * BigRational((N - 1) * pow(N - 3, e(2))) +
            BigRational(63, 8) * BigRational((N - 1) * (N - 2) * pow(N - 3, e(3)));
      break;
    case 4:
      num = BigRational(32, 3) * BigRational((N - 1) * (N - 2) * pow(N - 4, e(3))) +
            BigRational(96, 5) * BigRational((N - 1) * (N - 2) * (N - 3) * pow(N - 4, e(4)));
      break;
    default:
      throw std::domain_error("closed_form_f: k must be 2, 3 or 4, got " + std::to_string(k));
  }
  return ExactProb::from_rational(num / BigRational(pow(N, e(1))));
}

/// C_k = sum_{i=k-2}^{k+2} k^i/i! (1 - (k-1)/39)^38, for k in 5..8.
inline double ck_constant(std::int64_t k) {
  if (k < 5 || k > 8) throw std::domain_error("ck_constant: k must be in [5, 8], got " + std::to_string(k));
  const int kk = static_cast<int>(k);
  return static_cast<double>(detail::poisson_weight_sum(kk, kk - 2, kk + 2) *
                             detail::shrink_pow(40.0L, kk - 1, 38.0L));
}

/// Printed approximations of C_5..C_8 (index k - 5).
inline constexpr std::array<double, 4> kPrintedCk = {1.80299, 1.52806, 1.26193, 1.01213};
inline constexpr double kPrintedK3Bound = 1.65;
inline constexpr double kPrintedK4Anchor = 1.42635;
inline constexpr double kPrintedK9Anchor = 1.25277;

/// (32/3 + 96/5)(1 - 3/(n-1))^(n-2).
inline long double k4_sufficient(long double n) {
  return (32.0L / 3 + 96.0L / 5) * detail::shrink_pow(n, 3, n - 2);
}

/// sum_{i=lo}^{hi} 9^i/i! (1 - 8/(n-1))^(n-2).
inline long double k9_sufficient(long double n, int lo = 7, int hi = 11) {
  return detail::poisson_weight_sum(9, lo, hi) * detail::shrink_pow(n, 8, n - 2);
}

/// (n-2)(n-3)...(n-i+1) >= (n-k)^(i-2), exactly; the factor dropped when the
/// window sum is bounded below by the Poisson-weight sum.
inline bool product_ratio_ge_one(std::int64_t n, std::int64_t k, std::int64_t i, BigInt* lhs = nullptr,
                                 BigInt* rhs = nullptr) {
  BigInt prod = 1;
  for (std::int64_t j = 2; j <= i - 1; ++j) prod *= n - j;
  const BigInt power = boost::multiprecision::pow(BigInt(n - k), static_cast<unsigned>(i - 2));
  if (lhs) *lhs = prod;
  if (rhs) *rhs = power;
  return prod >= power;
}

/// The k = 9 argument at one n >= 40:
///  (a) (n-2)...(n-i+1) >= (n-9)^(i-2) for i = 7..11, with the i = 11 reduction
///      (n-2)(n-10) - (n-9)^2 = 6n - 61 >= 0;
///  (b) n >= 100: sum_{i=7}^{11} 9^i/i! (1 - 8/(n-1))^(n-2) >= 1;
///  (c) n < 100: f_n(9) > 61/100 > 38/100 > f_n(1), exactly.
inline CaseCertificate case5_chain(std::int64_t n) {
  detail::require_case_n(n, "case5_chain");
  std::ostringstream out;
  bool ok = true;
  for (std::int64_t i = 7; i <= 11; ++i) {
    const bool r = product_ratio_ge_one(n, 9, i);
    ok = ok && r;
    out << "ratio_i" << i << '=' << (r ? "ok" : "FAIL") << ' ';
  }
  const std::int64_t identity = (n - 2) * (n - 10) - (n - 9) * (n - 9);
  const bool reduction = identity == 6 * n - 61 && 6 * n >= 61;
  ok = ok && reduction;
  out << "6n-61=" << 6 * n - 61;

  CaseCertificate c;
  c.case_id = CaseId::K9;
  c.k = 9;
  c.n_lo = c.n_hi = n;
  if (n >= 100) {
    const long double s = k9_sufficient(static_cast<long double>(n));
    c.check = "sufficient_sum";
    c.relation = Relation::GreaterEq;
    c.lhs = static_cast<double>(s);
    c.rhs = 1.0;
    c.exact = false;
    ok = ok && detail::relate(Relation::GreaterEq, s, 1.0L);
    out << " sum_7_11=" << static_cast<double>(s)
        << " sum_7_9=" << static_cast<double>(k9_sufficient(static_cast<long double>(n), 7, 9));
  } else {
    const ExactProb f9 = f(n, 9);
    const BigRational bar(61, 100);
    c.check = "direct_f9";
    c.relation = Relation::Greater;
    c.lhs = f9.to_double();
    c.rhs = 0.61;
    c.exact = true;
    const bool direct = f9.rational() > bar && f(n, 1).rational() < BigRational(38, 100);
    ok = ok && direct;
  }
  c.verdict = ok;
  c.detail = out.str();
  return c;
}

/// Global (n-independent) certificates: printed constants, limits and sampled
/// monotonicity of the powers used by the sufficient conditions.
inline std::vector<CaseCertificate> constant_certificates(std::int64_t n_hi = 1000000) {
  using detail::float_cert;
  using detail::shrink_pow;
  std::vector<CaseCertificate> out;
  const auto grid40 = monotonicity_grid(40);
  const auto grid100 = monotonicity_grid(100);

  // K2: ((x-2)/(x-1))^(x-2) decreases to 1/e and 10/(3e) > 1.
  out.push_back(float_cert(CaseId::K2, 2, 40, n_hi, "limit_10_over_3e", Relation::Greater, 10.0L / (3.0L * std::exp(1.0L)),
                           1.0L));
  out.push_back(detail::monotone_cert(CaseId::K2, 2, grid40, "monotone_decreasing", 1, 2, false, "((x-2)/(x-1))^(x-2)"));

  // K3: lower bound at n = 40 using the limit 1/e^2.
  const long double k3 = 4.5L * shrink_pow(40, 2, 38) + 63.0L / 8 * (38.0L / 39) * std::exp(-2.0L);
  out.push_back(float_cert(CaseId::K3, 3, 40, n_hi, "lower_bound", Relation::Greater, k3, 1.0L));
  out.push_back(detail::approx_cert(CaseId::K3, 3, 40, n_hi, "printed_bound", k3, kPrintedK3Bound, 5e-3));
  out.push_back(detail::monotone_cert(CaseId::K3, 3, grid40, "monotone_increasing", 2, 2, true, "(1-2/(x-1))^(x-2)"));
  out.push_back(detail::monotone_cert(CaseId::K3, 3, grid40, "monotone_decreasing", 2, 3, false, "(1-2/(x-1))^(x-3)"));

  // K4: anchor at n = 40 and monotone increase.
  const long double k4 = k4_sufficient(40);
  out.push_back(float_cert(CaseId::K4, 4, 40, n_hi, "anchor", Relation::Greater, k4, 1.0L));
  out.push_back(detail::approx_cert(CaseId::K4, 4, 40, n_hi, "printed_anchor", k4, kPrintedK4Anchor, 5e-6));
  out.push_back(detail::monotone_cert(CaseId::K4, 4, grid40, "monotone_increasing", 3, 2, true, "(1-3/(x-1))^(x-2)"));

  // K5..K8: C_k > 1, matches print, monotone increase.
  for (int k = 5; k <= 8; ++k) {
    const long double ck = ck_constant(k);
    out.push_back(float_cert(CaseId::K5to8, k, 40, n_hi, "C_k", Relation::Greater, ck, 1.0L));
    out.push_back(
        detail::approx_cert(CaseId::K5to8, k, 40, n_hi, "printed_C_k", ck, kPrintedCk[static_cast<std::size_t>(k - 5)], 5e-6));
    out.push_back(detail::monotone_cert(CaseId::K5to8, k, grid40, "monotone_increasing", k - 1, 2, true, "(1-(k-1)/(x-1))^(x-2)"));
  }

  // K9: anchor at n = 100 and monotone increase from 100.
  const long double k9 = k9_sufficient(100);
  out.push_back(float_cert(CaseId::K9, 9, 100, n_hi, "anchor", Relation::Greater, k9, 1.0L,
                           "sum over i=7..11; the i=7..9 sum is " +
                               std::to_string(static_cast<double>(k9_sufficient(100, 7, 9)))));
  out.push_back(detail::approx_cert(CaseId::K9, 9, 100, n_hi, "printed_anchor", k9, kPrintedK9Anchor, 5e-6));
  out.push_back(detail::monotone_cert(CaseId::K9, 9, grid100, "monotone_increasing", 8, 2, true, "(1-8/(x-1))^(x-2)"));
  return out;
}

/// Certificates for one (n, k), n >= 40, k in 2..9.
inline std::vector<CaseCertificate> certificates_at(std::int64_t n, std::int64_t k) {
  detail::require_case_n(n, "certificates_at");
  using detail::exact_cert;
  using detail::float_cert;
  using detail::shrink_pow;
  const CaseId id = case_for(k);
  std::vector<CaseCertificate> out;

  // sigma bounds as integer inequalities: a^2 n < k(n-k) < b^2 n
  const std::int64_t a = k <= 4 ? 1 : 2;
  const std::int64_t v = k * (n - k);
  out.push_back(exact_cert(id, k, n, "sigma_above_" + std::to_string(a), Relation::Greater, BigRational(v),
                           BigRational(a * a * n)));
  out.push_back(exact_cert(id, k, n, "sigma_below_" + std::to_string(a + 1), Relation::Greater,
                           BigRational((a + 1) * (a + 1) * n), BigRational(v)));
  const Window w = window(n, k);
  out.push_back(exact_cert(id, k, n, "window", Relation::Equal, BigRational(w.hi - w.lo + 1),
                           BigRational(2 * a + 1), "[" + std::to_string(w.lo) + ", " + std::to_string(w.hi) + "]"));
  out.back().verdict = out.back().verdict && w.lo == k - a && w.hi == k + a;

  const ExactProb fk = f(n, k);
  const ExactProb f1 = f(n, 1);
  out.push_back(exact_cert(id, k, n, "f_ge_f1", Relation::GreaterEq, fk.rational(), f1.rational()));

  const long double x = static_cast<long double>(n);
  switch (id) {
    case CaseId::K2:
    case CaseId::K3:
    case CaseId::K4: {
      out.push_back(exact_cert(id, k, n, "closed_form", Relation::Equal, closed_form_f(n, k).rational(), fk.rational()));
      long double s = 0;
      if (k == 2) s = 10.0L / 3 * shrink_pow(x, 1, x - 2);
      if (k == 3) s = 4.5L * shrink_pow(x, 2, x - 2) + 63.0L / 8 * (1 - 1 / (x - 1)) * shrink_pow(x, 2, x - 3);
      if (k == 4) s = k4_sufficient(x);
      out.push_back(float_cert(id, k, n, n, "sufficient", Relation::GreaterEq, s, 1.0L));
      break;
    }
    case CaseId::K5to8: {
      bool ratios = true;
      for (std::int64_t i = k - 2; i <= k + 2; ++i) ratios = ratios && product_ratio_ge_one(n, k, i);
      CaseCertificate c = exact_cert(id, k, n, "product_ratios", Relation::GreaterEq, 1, 1,
                                     "(n-2)...(n-i+1) >= (n-k)^(i-2) for i=k-2..k+2");
      c.verdict = ratios;
      out.push_back(c);
      const int kk = static_cast<int>(k);
      const long double s = detail::poisson_weight_sum(kk, kk - 2, kk + 2) * shrink_pow(x, kk - 1, x - 2);
      out.push_back(float_cert(id, k, n, n, "sufficient", Relation::GreaterEq, s, 1.0L));
      break;
    }
    case CaseId::K9:
      out.push_back(case5_chain(n));
      break;
  }
  return out;
}

/// Every certificate for n in [40, n_max] and k in 2..9, followed by the
/// n-independent constant certificates.
inline std::vector<CaseCertificate> verify_all_cases(std::int64_t n_max) {
  detail::require_case_n(n_max, "verify_all_cases");
  std::vector<CaseCertificate> out;
  for (std::int64_t n = be::kMinN; n <= n_max; ++n) {
    for (std::int64_t k = 2; k <= 9; ++k) {
      auto certs = certificates_at(n, k);
      out.insert(out.end(), std::make_move_iterator(certs.begin()), std::make_move_iterator(certs.end()));
    }
  }
  auto global = constant_certificates();
  out.insert(out.end(), std::make_move_iterator(global.begin()), std::make_move_iterator(global.end()));
  return out;
}

}  // namespace binconc
