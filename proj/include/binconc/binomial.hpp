#pragma once

#include "binconc/exact_prob.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace binconc {

/// B(n, p) with rational success probability p = k/n.
class BinomialParams {
 public:
  BinomialParams(std::int64_t n, std::int64_t k) : n_(n), k_(k) {
    if (n < 1 || n > std::numeric_limits<std::int32_t>::max()) {
      throw std::domain_error("BinomialParams: n must be in [1, 2^31)");
    }
    if (k < 0 || k > n) {
      throw std::domain_error("BinomialParams: k=" + std::to_string(k) + " outside [0, " +
                              std::to_string(n) + "]");
    }
  }

  std::int64_t n() const noexcept { return n_; }
  std::int64_t k() const noexcept { return k_; }

  /// B(n, (n-k)/n), the law of n - X.
  BinomialParams mirrored() const { return {n_, n_ - k_}; }

  /// n^n, the common denominator of every PMF value.
  BigInt scale() const { return boost::multiprecision::pow(BigInt(n_), static_cast<unsigned>(n_)); }

  friend bool operator==(const BinomialParams&, const BinomialParams&) = default;

 private:
  std::int64_t n_;
  std::int64_t k_;
};

namespace detail {

inline BigInt binomial_coefficient(std::int64_t n, std::int64_t i) {
  i = std::min(i, n - i);
  BigInt c = 1;
  for (std::int64_t j = 0; j < i; ++j) {
    c *= n - j;
    c /= j + 1;
  }
  return c;
}

// Sum over i in [lo, hi] of C(n,i) k^i (n-k)^(n-i); divide by n^n for the
// probability. Requires 0 <= lo <= hi <= n.
inline BigInt scaled_mass(const BinomialParams& p, std::int64_t lo, std::int64_t hi) {
  const std::int64_t n = p.n();
  const std::int64_t k = p.k();
  if (k == 0) return lo == 0 ? p.scale() : BigInt(0);
  if (k == n) return hi == n ? p.scale() : BigInt(0);

  BigInt term = binomial_coefficient(n, lo) *
                boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(lo)) *
                boost::multiprecision::pow(BigInt(n - k), static_cast<unsigned>(n - lo));
  BigInt sum = term;
  for (std::int64_t i = lo; i < hi; ++i) {
    // term_{i+1} = term_i * (n-i) k / ((i+1)(n-k)), exact in integers
    term *= (n - i) * k;
    term /= (i + 1) * (n - k);
    sum += term;
  }
  return sum;
}

// Every scaled PMF term, index i = 0..n.
inline std::vector<BigInt> scaled_terms(const BinomialParams& p) {
  const std::int64_t n = p.n();
  const std::int64_t k = p.k();
  std::vector<BigInt> terms(static_cast<std::size_t>(n + 1), BigInt(0));
  if (k == 0) {
    terms.front() = p.scale();
    return terms;
  }
  if (k == n) {
    terms.back() = p.scale();
    return terms;
  }
  BigInt term = boost::multiprecision::pow(BigInt(n - k), static_cast<unsigned>(n));
  terms[0] = term;
  for (std::int64_t i = 0; i < n; ++i) {
    term *= (n - i) * k;
    term /= (i + 1) * (n - k);
    terms[static_cast<std::size_t>(i + 1)] = term;
  }
  return terms;
}

}  // namespace detail

/// P(X = i) = C(n,i) k^i (n-k)^(n-i) / n^n.
inline ExactProb pmf(const BinomialParams& p, std::int64_t i) {
  if (i < 0 || i > p.n()) {
    throw std::domain_error("pmf: i=" + std::to_string(i) + " outside [0, " + std::to_string(p.n()) + "]");
  }
  return ExactProb::over_power(detail::scaled_mass(p, i, i), p.n(), static_cast<unsigned>(p.n()));
}

/// P(lo <= X <= hi); bounds are clamped to [0, n], empty windows give 0.
inline ExactProb interval_prob(const BinomialParams& p, std::int64_t lo, std::int64_t hi) {
  lo = std::max<std::int64_t>(lo, 0);
  hi = std::min(hi, p.n());
  if (lo > hi) return ExactProb::zero();
  return ExactProb::over_power(detail::scaled_mass(p, lo, hi), p.n(), static_cast<unsigned>(p.n()));
}

/// P(X <= m), total on the integers.
inline ExactProb cdf(const BinomialParams& p, std::int64_t m) {
  if (m < 0) return ExactProb::zero();
  if (m >= p.n()) return ExactProb::one();
  return interval_prob(p, 0, m);
}

}  // namespace binconc
