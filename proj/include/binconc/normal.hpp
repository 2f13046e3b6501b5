#pragma once

#include <cmath>
#include <numbers>

namespace binconc {

namespace detail {

// erf(x) = 2/sqrt(pi) * exp(-x^2) * sum_j 2^j x^(2j+1) / (1*3*...*(2j+1)).
// All terms positive, so there is no cancellation for moderate x.
inline double erf_series(double x) {
  if (x == 0.0) return 0.0;
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int j = 1; j < 200; ++j) {
    term *= 2.0 * x2 / (2.0 * j + 1.0);
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-17) break;
  }
  return 2.0 * std::numbers::inv_sqrtpi * std::exp(-x2) * sum;
}

// erfc(x) for x > 0 by the Laplace continued fraction
//   erfc(x) = exp(-x^2)/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
// evaluated with the modified Lentz algorithm.
inline double erfc_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  double fval = x;
  double c = x;
  double d = 0.0;
  for (int j = 1; j < 500; ++j) {
    const double a = 0.5 * j;
    d = x + a * d;
    if (std::abs(d) < tiny) d = tiny;
    c = x + a / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    fval *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::numbers::inv_sqrtpi * std::exp(-x * x) / fval;
}

inline constexpr double kErfSwitch = 2.5;

}  // namespace detail

/// Complementary error function, absolute error below 1e-15 on the real line.
inline double erfc(double x) {
  if (std::isnan(x)) return x;
  if (x >= detail::kErfSwitch) return detail::erfc_continued_fraction(x);
  if (x <= -detail::kErfSwitch) return 2.0 - detail::erfc_continued_fraction(-x);
  return 1.0 - detail::erf_series(x);
}

inline double erf(double x) {
  if (std::isnan(x)) return x;
  if (std::abs(x) < detail::kErfSwitch) return detail::erf_series(x);
  return x > 0 ? 1.0 - detail::erfc_continued_fraction(x) : detail::erfc_continued_fraction(-x) - 1.0;
}

/// Standard normal CDF.
inline double normal_cdf(double x) { return 0.5 * binconc::erfc(-x / std::numbers::sqrt2); }

}  // namespace binconc
