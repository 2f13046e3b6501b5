#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace binconc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class Rounding { HalfEven, Truncate };

namespace detail {

// num/den as a double with ~64 significant bits carried through the division.
// Requires 0 <= num and den > 0.
inline double ratio_to_double(const BigInt& num, const BigInt& den) {
  if (num == 0) return 0.0;
  const long shift = 64 + static_cast<long>(boost::multiprecision::msb(den)) -
                     static_cast<long>(boost::multiprecision::msb(num));
  BigInt q;
  if (shift >= 0) {
    q = (num << static_cast<unsigned>(shift)) / den;
  } else {
    q = num / (den << static_cast<unsigned>(-shift));
  }
  return std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
}

}  // namespace detail

/// A probability held as an exact fraction num/den with 0 <= num <= den,
/// always reduced to lowest terms.
class ExactProb {
 public:
  ExactProb() : num_(0), den_(1) {}

  ExactProb(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ <= 0) throw std::domain_error("ExactProb: denominator must be positive");
    if (num_ < 0 || num_ > den_) throw std::domain_error("ExactProb: value outside [0, 1]");
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  static ExactProb from_rational(const BigRational& r) {
    return {boost::multiprecision::numerator(r), boost::multiprecision::denominator(r)};
  }
  /// num / base^exp, reduced by dividing out only the primes of `base`;
  /// much cheaper than a full gcd when the denominator is a large power.
  static ExactProb over_power(BigInt num, std::int64_t base, unsigned exp) {
    if (base < 1) throw std::domain_error("ExactProb: power base must be >= 1");
    ExactProb out;
    out.den_ = boost::multiprecision::pow(BigInt(base), exp);
    if (num < 0 || num > out.den_) throw std::domain_error("ExactProb: value outside [0, 1]");
    if (num == 0) return zero();
    out.num_ = std::move(num);
    std::int64_t rest = base;
    for (std::int64_t p = 2; rest > 1; ++p) {
      if (p * p > rest) p = rest;
      if (rest % p != 0) continue;
      std::uint64_t left = 0;  // exponent of p still in den_
      while (rest % p == 0) {
        rest /= p;
        left += exp;
      }
      out.strip_prime(static_cast<std::uint64_t>(p), left);
    }
    return out;
  }
  static ExactProb zero() { return {}; }
  static ExactProb one() { return {1, 1}; }

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  BigRational rational() const { return BigRational(num_, den_); }
  ExactProb complement() const { return {den_ - num_, den_}; }
  double to_double() const { return detail::ratio_to_double(num_, den_); }

  /// "num/den", e.g. "7/8" or "1/1".
  std::string str() const { return num_.str() + "/" + den_.str(); }

  friend bool operator==(const ExactProb& a, const ExactProb& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const ExactProb& a, const ExactProb& b) {
    const BigInt lhs = a.num_ * b.den_;
    const BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend ExactProb operator*(const ExactProb& a, const ExactProb& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }

 private:
  // Divides num_ and den_ by p^j for the largest j <= left with p^j | num_.
  void strip_prime(std::uint64_t p, std::uint64_t left) {
    if (p == 2) {
      const std::uint64_t z = std::min<std::uint64_t>(boost::multiprecision::lsb(num_), left);
      num_ >>= z;
      den_ >>= z;
      return;
    }
    // word-sized power p^m first, then single factors
    std::uint64_t m = 1;
    std::uint64_t chunk = p;
    while (chunk <= std::numeric_limits<std::uint64_t>::max() / p) {
      chunk *= p;
      ++m;
    }
    BigInt q;
    BigInt r;
    for (const auto& [step, d] : {std::pair{m, chunk}, std::pair{std::uint64_t{1}, p}}) {
      while (left >= step) {
        boost::multiprecision::divide_qr(num_, BigInt(d), q, r);
        if (r != 0) break;
        num_.swap(q);
        den_ /= d;
        left -= step;
      }
    }
  }

  BigInt num_;
  BigInt den_;
};

/// Fixed-point decimal rendering with exactly `digits` fractional digits.
inline std::string to_decimal(const ExactProb& p, int digits, Rounding mode = Rounding::HalfEven) {
  if (digits < 1) throw std::domain_error("to_decimal: digits must be >= 1");
  const BigInt scaled = p.num() * boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(digits));
  BigInt q = scaled / p.den();
  if (mode == Rounding::HalfEven) {
    const BigInt twice_rem = 2 * (scaled % p.den());
    if (twice_rem > p.den() || (twice_rem == p.den() && (q & 1) != 0)) ++q;
  }
  std::string s = q.str();
  const auto width = static_cast<std::size_t>(digits) + 1;
  if (s.size() < width) s.insert(0, width - s.size(), '0');
  s.insert(s.size() - static_cast<std::size_t>(digits), 1, '.');
  return s;
}

}  // namespace binconc
