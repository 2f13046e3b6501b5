#pragma once

#include "binconc/concentration.hpp"
#include "binconc/normal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace binconc {

/// Constants of the normal-approximation argument for n >= 40, k >= 10.
namespace be {
inline constexpr double kC0 = 0.4748;               // Berry-Esseen constant, i.i.d. summands
inline constexpr double kSideCap = 0.15014495;      // upper bound on C0 / sqrt(10)
inline constexpr double kTwoSidedCap = 0.3002899;   // 2 * kSideCap as printed
inline constexpr double kPhiWidthFloor = 0.68268948;
inline constexpr double kLowerBound = 0.38239958;   // kPhiWidthFloor - kTwoSidedCap
inline constexpr double kGuard = 1e-9;
inline constexpr std::int64_t kMinN = 40;
inline constexpr std::int64_t kMinK = 10;
inline constexpr double kPrintedF40 = 0.36323244;

/// 0.38239958 as an exact fraction.
inline BigRational lower_bound_exact() { return BigRational(38239958, 100000000); }
}  // namespace be

namespace detail {
inline void require_nondegenerate(std::int64_t n, std::int64_t k) {
  if (n < 2 || k < 1 || k > n - 1) {
    throw std::domain_error("Berry-Esseen: need 1 <= k <= n-1, got n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
  }
}
}  // namespace detail

/// Moments of one Bernoulli(k/n) summand Y.
struct SummandMoments {
  std::int64_t n = 0;
  std::int64_t k = 0;
  double sigma = 0;  // sqrt(k(n-k))/n
  double rho = 0;    // E|Y - EY|^3 / sigma^3

  static SummandMoments make(std::int64_t n, std::int64_t k) {
    detail::require_nondegenerate(n, k);
    const double nd = static_cast<double>(n);
    const double kd = static_cast<double>(k);
    const double v = kd * (nd - kd);
    return {n, k, std::sqrt(v) / nd, (nd * nd + 2 * kd * kd - 2 * nd * kd) / (nd * std::sqrt(v))};
  }
};

/// E|Y - EY|^3 = k(n-k)(n^2 + 2k^2 - 2nk) / n^4, exactly.
inline BigRational third_abs_moment_exact(std::int64_t n, std::int64_t k) {
  detail::require_nondegenerate(n, k);
  const BigInt nn(n);
  const BigInt kk(k);
  return BigRational(kk * (nn - kk) * (nn * nn + 2 * kk * kk - 2 * nn * kk), nn * nn * nn * nn);
}

inline double third_abs_moment(std::int64_t n, std::int64_t k) {
  detail::require_nondegenerate(n, k);
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  return kd * (nd - kd) * (nd * nd + 2 * kd * kd - 2 * nd * kd) / (nd * nd * nd * nd);
}

/// (n^2 + 2k^2 - 2nk) / (n sqrt(k(n-k))).
inline double rho(std::int64_t n, std::int64_t k) { return SummandMoments::make(n, k).rho; }

/// C0 rho / sqrt(n).
inline double be_bound(std::int64_t n, std::int64_t k, double c0 = be::kC0) {
  if (!(c0 > 0)) throw std::domain_error("be_bound: c0 must be positive");
  return c0 * rho(n, k) / std::sqrt(static_cast<double>(n));
}

/// C0 sqrt((n-k)/(nk)), which dominates be_bound when k <= n/2.
inline double simplified_bound(std::int64_t n, std::int64_t k, double c0 = be::kC0) {
  detail::require_nondegenerate(n, k);
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  return c0 * std::sqrt((nd - kd) / (nd * kd));
}

/// sup_x |P((X - k)/sigma < x) - Phi(x)| for X ~ B(n, k/n), taken over the
/// exact lattice CDF: at each atom both the left limit and the value count.
inline double sup_discrepancy(std::int64_t n, std::int64_t k) {
  detail::require_nondegenerate(n, k);
  const BinomialParams p(n, k);
  const BigInt scale = p.scale();
  const std::vector<BigInt> terms = detail::scaled_terms(p);
  const double sd = std::sqrt(static_cast<double>(k) * static_cast<double>(n - k) / static_cast<double>(n));

  double worst = 0;
  double below = 0;  // P(X < i)
  BigInt cumulative = 0;
  for (std::int64_t i = 0; i <= n; ++i) {
    cumulative += terms[static_cast<std::size_t>(i)];
    const double at_or_below = detail::ratio_to_double(cumulative, scale);
    const double phi = normal_cdf(static_cast<double>(i - k) / sd);
    worst = std::max({worst, std::abs(below - phi), std::abs(at_or_below - phi)});
    below = at_or_below;
  }
  return worst;
}

struct BerryEsseenReport {
  std::int64_t n = 0;
  std::int64_t k = 0;
  double c0 = be::kC0;
  double rho = 0;
  double bound = 0;             // C0 rho / sqrt(n)
  double simplified_bound = 0;  // C0 sqrt((n-k)/(nk))
  double k_bound = 0;           // C0 / sqrt(k)
  double phi_width = 0;         // Phi(1) - Phi(-1)
  double lower_bound = be::kLowerBound;
  double f_value = 0;
  double window_discrepancy = 0;  // |f - phi_width|

  bool moment_reduction = false;  // n^2 + 2k^2 - 2nk <= n^2 - nk, exact
  bool bound_chain = false;       // bound <= simplified <= C0/sqrt(k) <= C0/sqrt(10) < side cap
  bool phi_floor = false;         // phi_width > 0.68268948
  bool window_ok = false;         // |f - phi_width| <= 2 bound <= 0.3002899
  bool f_exceeds = false;         // f_n(k) > 0.38239958, exact
  bool holds = false;
};

/// Checks each link of the lower bound f_n(k) > 0.38239958 for one (n, k)
/// with n >= 40 and 10 <= k <= n/2, including the exact value of f_n(k).
inline BerryEsseenReport verify_chain(std::int64_t n, std::int64_t k, double c0 = be::kC0) {
  if (n < be::kMinN || k < be::kMinK || 2 * k > n) {
    throw std::domain_error("verify_chain: need n >= 40 and 10 <= k <= n/2, got n=" + std::to_string(n) +
                            " k=" + std::to_string(k));
  }
  BerryEsseenReport r;
  r.n = n;
  r.k = k;
  r.c0 = c0;
  r.rho = rho(n, k);
  r.bound = be_bound(n, k, c0);
  r.simplified_bound = simplified_bound(n, k, c0);
  r.k_bound = c0 / std::sqrt(static_cast<double>(k));
  r.phi_width = normal_cdf(1.0) - normal_cdf(-1.0);

  r.moment_reduction = n * n + 2 * k * k - 2 * n * k <= n * n - n * k;

  const double rel = 1e-12;
  const double ten_bound = c0 / std::sqrt(static_cast<double>(be::kMinK));
  r.bound_chain = r.bound <= r.simplified_bound * (1 + rel) && r.simplified_bound <= r.k_bound * (1 + rel) &&
                  r.k_bound <= ten_bound * (1 + rel) && ten_bound < be::kSideCap - be::kGuard;
  r.phi_floor = r.phi_width > be::kPhiWidthFloor + be::kGuard;

  const ExactProb fx = f(n, k);
  r.f_value = fx.to_double();
  r.window_discrepancy = std::abs(r.f_value - r.phi_width);
  r.window_ok = r.window_discrepancy <= 2 * r.bound && 2 * r.bound < be::kTwoSidedCap - be::kGuard;
  r.f_exceeds = fx.rational() > be::lower_bound_exact();

  r.holds = r.moment_reduction && r.bound_chain && r.phi_floor && r.window_ok && r.f_exceeds;
  return r;
}

namespace detail {
// ((n-1)/n)^(n-1) in long double; exact rationals are impractical near n = 10^6.
inline long double f1_approx(std::int64_t n) {
  const long double nd = static_cast<long double>(n);
  return std::exp((nd - 1) * std::log1p(-1.0L / nd));
}
}  // namespace detail

/// Sample points for numerical monotonicity checks: every integer from
/// `start` to 200, then doubling from 400 up to 10^6 (10^6 included).
inline std::vector<std::int64_t> monotonicity_grid(std::int64_t start = 40) {
  std::vector<std::int64_t> grid;
  for (std::int64_t n = start; n <= 200; ++n) grid.push_back(n);
  for (std::int64_t n = 400; n < 1000000; n *= 2) grid.push_back(n);
  grid.push_back(1000000);
  return grid;
}

struct F40ThresholdReport {
  double f40 = 0;                    // exact f_40(1) rounded to double
  bool decreasing_on_grid = false;   // f_n(1) strictly decreasing on the grid
  bool f41_below_f40 = false;        // exact rational comparison
  bool below_lower_bound = false;    // f_40(1) < 0.38239958, exact
  bool matches_printed = false;      // |f_40(1) - 0.36323244| <= 5e-9
  bool limit_near_inverse_e = false; // |f_{10^6}(1) - 1/e| <= 1e-5
  bool printed_below_lower_bound = be::kPrintedF40 < be::kLowerBound;

  /// Everything the n >= 40, k >= 10 argument relies on.
  bool supports_argument() const {
    return decreasing_on_grid && f41_below_f40 && below_lower_bound && limit_near_inverse_e;
  }
  /// supports_argument() plus agreement with the printed value 0.36323244.
  bool holds() const { return supports_argument() && matches_printed && printed_below_lower_bound; }
};

inline F40ThresholdReport verify_f40_threshold() {
  F40ThresholdReport r;
  const ExactProb f40 = f(40, 1);
  r.f40 = f40.to_double();
  r.f41_below_f40 = f(41, 1) < f40;
  r.below_lower_bound = f40.rational() < be::lower_bound_exact();
  r.matches_printed = std::abs(r.f40 - be::kPrintedF40) <= 5e-9;

  const auto grid = monotonicity_grid();
  r.decreasing_on_grid = true;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(detail::f1_approx(grid[i]) < detail::f1_approx(grid[i - 1]))) r.decreasing_on_grid = false;
  }
  r.limit_near_inverse_e =
      std::abs(detail::f1_approx(1000000) - std::exp(-1.0L)) <= 1e-5L;
  return r;
}

}  // namespace binconc
