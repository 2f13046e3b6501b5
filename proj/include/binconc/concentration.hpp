#pragma once

#include "binconc/binomial.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace binconc {

namespace detail {

inline std::int64_t isqrt(std::int64_t v) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace detail

/// Inclusive integer bounds [lo, hi].
struct Window {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const Window&, const Window&) = default;
};

/// An (n, k) pair together with Var(B(n, k/n)) = k(n-k)/n and the
/// one-standard-deviation window around the mean k.
///
/// Membership of i is the integer predicate n (i-k)^2 <= k(n-k), so an atom
/// sitting exactly one standard deviation away (n=4, k=2, i=1) is included.
class ConcentrationQuery {
 public:
  ConcentrationQuery(std::int64_t n, std::int64_t k)
      : params_(n, k), var_num_(k * (n - k)), var_den_(n) {
    const std::int64_t d = detail::isqrt(var_num_ / var_den_);
    window_ = {std::max<std::int64_t>(k - d, 0), std::min(k + d, n)};
  }

  const BinomialParams& params() const noexcept { return params_; }
  std::int64_t var_num() const noexcept { return var_num_; }
  std::int64_t var_den() const noexcept { return var_den_; }
  Window window() const noexcept { return window_; }

  bool contains(std::int64_t i) const {
    const auto d = static_cast<__int128>(i) - params_.k();
    return var_den_ * d * d <= var_num_;
  }

 private:
  BinomialParams params_;
  std::int64_t var_num_;
  std::int64_t var_den_;
  Window window_;
};

inline Window window(std::int64_t n, std::int64_t k) { return ConcentrationQuery(n, k).window(); }

namespace detail {

// f_n(k) scaled by n^n; every k for the same n shares that denominator.
inline BigInt scaled_f(std::int64_t n, std::int64_t k) {
  const ConcentrationQuery q(n, k);
  return scaled_mass(q.params(), q.window().lo, q.window().hi);
}

// q_m scaled by n^n.
inline BigInt scaled_chvatal_q(std::int64_t n, std::int64_t m) {
  const BinomialParams p(n, m);
  return m >= n ? p.scale() : scaled_mass(p, 0, m);
}

inline void require_chvatal_n(std::int64_t n) {
  if (n < 2) throw std::domain_error("chvatal: n must be >= 2, got " + std::to_string(n));
}

}  // namespace detail

/// f_n(k) = P(|B(n, k/n) - k| <= sqrt(k(n-k)/n)).
inline ExactProb f(std::int64_t n, std::int64_t k) {
  const ConcentrationQuery q(n, k);
  return interval_prob(q.params(), q.window().lo, q.window().hi);
}

/// ((n-1)/n)^(n-1), the claimed minimum of f_n over k for n >= 2.
inline ExactProb f1_closed_form(std::int64_t n) {
  if (n < 1) throw std::domain_error("f1_closed_form: n must be >= 1");
  const auto e = static_cast<unsigned>(n - 1);
  return {boost::multiprecision::pow(BigInt(n - 1), e), boost::multiprecision::pow(BigInt(n), e)};
}

/// q_m = P(B(n, m/n) <= m).
inline ExactProb chvatal_q(std::int64_t n, std::int64_t m) {
  detail::require_chvatal_n(n);
  if (m < 0 || m > n) throw std::domain_error("chvatal_q: m outside [0, n]");
  return cdf(BinomialParams(n, m), m);
}

struct ArgminReport {
  std::int64_t n = 0;
  std::vector<std::pair<std::int64_t, ExactProb>> values;  // k = 0..n
  std::vector<std::int64_t> minimizers;                    // ascending
  ExactProb min_value;
};

/// Exact scan of f_n(k) over k = 0..n. Ties are kept; comparison is on
/// integer numerators over the shared denominator n^n.
inline ArgminReport argmin_f(std::int64_t n) {
  if (n < 1) throw std::domain_error("argmin_f: n must be >= 1");
  std::vector<BigInt> scaled;
  scaled.reserve(static_cast<std::size_t>(n + 1));
  for (std::int64_t k = 0; k <= n; ++k) scaled.push_back(detail::scaled_f(n, k));

  ArgminReport report;
  report.n = n;
  const BigInt* best = &scaled.front();
  for (const auto& s : scaled) {
    if (s < *best) best = &s;
  }
  for (std::int64_t k = 0; k <= n; ++k) {
    const BigInt& s = scaled[static_cast<std::size_t>(k)];
    if (s == *best) report.minimizers.push_back(k);
    report.values.emplace_back(k, ExactProb::over_power(s, n, static_cast<unsigned>(n)));
  }
  report.min_value = ExactProb::over_power(*best, n, static_cast<unsigned>(n));
  return report;
}

/// The integers m in [0, n] nearest to 2n/3. |3m - 2n| is never a tie between
/// two integers, so this always has one element.
inline std::vector<std::int64_t> nearest_to_two_thirds(std::int64_t n) {
  std::vector<std::int64_t> out;
  std::int64_t best = -1;
  for (std::int64_t m = 0; m <= n; ++m) {
    const std::int64_t dist = std::abs(3 * m - 2 * n);
    if (best < 0 || dist < best) {
      best = dist;
      out.assign(1, m);
    } else if (dist == best) {
      out.push_back(m);
    }
  }
  return out;
}

/// Minimizers of q_m over m = 0..n.
inline std::vector<std::int64_t> argmin_chvatal(std::int64_t n) {
  detail::require_chvatal_n(n);
  std::vector<std::int64_t> out;
  BigInt best;
  for (std::int64_t m = 0; m <= n; ++m) {
    BigInt q = detail::scaled_chvatal_q(n, m);
    if (out.empty() || q < best) {
      best = std::move(q);
      out.assign(1, m);
    } else if (q == best) {
      out.push_back(m);
    }
  }
  return out;
}

/// True iff f_n(k) == f_n(n-k) for every k.
inline bool symmetry_check(std::int64_t n) {
  if (n < 1) throw std::domain_error("symmetry_check: n must be >= 1");
  for (std::int64_t k = 0; 2 * k < n; ++k) {
    if (detail::scaled_f(n, k) != detail::scaled_f(n, n - k)) return false;
  }
  return true;
}

}  // namespace binconc
