#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace binconc {

struct capacity_error : std::length_error {
  using std::length_error::length_error;
};

namespace rademacher {
inline constexpr std::size_t kMaxExhaustive = 30;
inline constexpr double kBoundaryTol = 1e-12;  // |sum| <= t + tol counts as inside
inline constexpr double kNormTol = 1e-12;
// Low coefficients enumerated by Gray code inside one chunk; the chunk base
// sum is recomputed from scratch so rounding drift stays within 2^12 updates.
inline constexpr std::size_t kChunkBits = 12;
}  // namespace rademacher

/// Coefficients a_1..a_n of X = sum a_j eps_j with sum a_j^2 = 1.
class SignVector {
 public:
  explicit SignVector(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::domain_error("SignVector: need at least one coefficient");
    if (std::abs(norm_squared(coeffs_) - 1.0) > rademacher::kNormTol) {
      throw std::domain_error("SignVector: coefficients must have unit Euclidean norm");
    }
  }

  /// Rescales an arbitrary nonzero vector to unit norm.
  static SignVector normalized(std::vector<double> coeffs) {
    const double norm = std::sqrt(norm_squared(coeffs));
    if (!(norm > 0) || !std::isfinite(norm)) throw std::domain_error("SignVector: zero or non-finite vector");
    for (double& a : coeffs) a /= norm;
    return SignVector(std::move(coeffs));
  }

  static double norm_squared(std::span<const double> a) {
    double s = 0;
    for (double x : a) s += x * x;
    return s;
  }

  std::span<const double> coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }

 private:
  std::vector<double> coeffs_;
};

/// P(|sum a_j eps_j| <= t) by enumerating all 2^n sign patterns.
inline double prob_within(const SignVector& a, double t) {
  const std::size_t n = a.size();
  if (n > rademacher::kMaxExhaustive) {
    throw capacity_error("prob_within: n=" + std::to_string(n) +
                         " exceeds the exhaustive limit of 30; use sample_prob_within");
  }
  const auto c = a.coeffs();
  const double limit = t + rademacher::kBoundaryTol;
  const std::size_t low = std::min(n, rademacher::kChunkBits);
  const std::uint64_t chunks = std::uint64_t{1} << (n - low);
  const std::uint64_t inner = std::uint64_t{1} << low;

  double low_all_plus = 0;
  for (std::size_t j = 0; j < low; ++j) low_all_plus += c[j];

  std::uint64_t count = 0;
  std::vector<int> sign(low);
  for (std::uint64_t h = 0; h < chunks; ++h) {
    double sum = low_all_plus;
    for (std::size_t j = low; j < n; ++j) sum += ((h >> (j - low)) & 1U) ? -c[j] : c[j];
    std::fill(sign.begin(), sign.end(), 1);
    if (std::abs(sum) <= limit) ++count;
    // reflected Gray code: step s flips coefficient countr_zero(s)
    for (std::uint64_t s = 1; s < inner; ++s) {
      const auto j = static_cast<std::size_t>(std::countr_zero(s));
      sum -= 2.0 * sign[j] * c[j];
      sign[j] = -sign[j];
      if (std::abs(sum) <= limit) ++count;
    }
  }
  return static_cast<double>(count) / static_cast<double>(std::uint64_t{1} << n);
}

struct MonteCarloEstimate {
  double estimate = 0;
  double std_error = 0;
  std::uint64_t trials = 0;
};

/// Seeded Monte Carlo estimate of P(|sum a_j eps_j| <= t). Signs are taken
/// straight from mt19937_64 output bits, so runs are reproducible.
inline MonteCarloEstimate sample_prob_within(const SignVector& a, double t, std::uint64_t trials, std::uint64_t seed) {
  if (trials < 1) throw std::domain_error("sample_prob_within: trials must be >= 1");
  std::mt19937_64 rng(seed);
  const auto c = a.coeffs();
  const double limit = t + rademacher::kBoundaryTol;
  std::uint64_t hits = 0;
  for (std::uint64_t r = 0; r < trials; ++r) {
    double sum = 0;
    std::uint64_t bits = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j % 64 == 0) bits = rng();
      sum += (bits & 1U) ? c[j] : -c[j];
      bits >>= 1;
    }
    if (std::abs(sum) <= limit) ++hits;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(trials);
  return {p, std::sqrt(p * (1 - p) / static_cast<double>(trials)), trials};
}

/// Random unit vector: uniform length in [1, max_n], Gaussian direction.
inline SignVector random_unit_vector(std::mt19937_64& rng, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> len(1, max_n);
  std::normal_distribution<double> gauss;
  std::vector<double> a(len(rng));
  do {
    for (double& x : a) x = gauss(rng);
  } while (SignVector::norm_squared(a) == 0);
  return SignVector::normalized(std::move(a));
}

struct TomaszewskiReport {
  std::size_t count = 0;
  double min_prob = 1;
  std::vector<double> worst;  // coefficients attaining min_prob
  bool holds = false;         // every sample had P(|X| <= 1) >= 1/2
};

/// Checks P(|X| <= 1) >= 1/2 on `count` random unit vectors of length <= max_n.
inline TomaszewskiReport tomaszewski_property(std::size_t count, std::uint64_t seed, std::size_t max_n = 15) {
  if (count < 1) throw std::domain_error("tomaszewski_property: count must be >= 1");
  if (max_n < 1 || max_n > 20) throw std::domain_error("tomaszewski_property: max_n must be in [1, 20]");
  std::mt19937_64 rng(seed);
  TomaszewskiReport r;
  r.count = count;
  r.holds = true;
  for (std::size_t i = 0; i < count; ++i) {
    const SignVector a = random_unit_vector(rng, max_n);
    const double p = prob_within(a, 1.0);
    if (r.worst.empty() || p < r.min_prob) {
      r.min_prob = p;
      r.worst.assign(a.coeffs().begin(), a.coeffs().end());
    }
    if (p < 0.5 - 1e-12) r.holds = false;
  }
  return r;
}

}  // namespace binconc
