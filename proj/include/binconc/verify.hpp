#pragma once

#include "binconc/berry_esseen.hpp"
#include "binconc/case_certificates.hpp"
#include "binconc/concentration.hpp"
#include "binconc/rademacher.hpp"
#include "binconc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace binconc {

/// Certificates of one verification suite plus free-form notes for humans.
struct SuiteResult {
  std::vector<ReportLine> lines;
  std::vector<std::string> notes;

  bool ok() const {
    return std::all_of(lines.begin(), lines.end(), [](const ReportLine& l) { return l.ok; });
  }
  const ReportLine* first_failure() const {
    const auto it = std::find_if(lines.begin(), lines.end(), [](const ReportLine& l) { return !l.ok; });
    return it == lines.end() ? nullptr : &*it;
  }
  void append(SuiteResult other) {
    lines.insert(lines.end(), std::make_move_iterator(other.lines.begin()), std::make_move_iterator(other.lines.end()));
    notes.insert(notes.end(), std::make_move_iterator(other.notes.begin()), std::make_move_iterator(other.notes.end()));
  }
};

namespace detail {

inline std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << '}';
  return out.str();
}

inline ReportLine line(std::string suite, std::string name, std::optional<std::int64_t> n,
                       std::optional<std::int64_t> k, double lhs, double rhs, bool ok, bool exact,
                       std::string detail = {}) {
  return {std::move(suite), std::move(name), n, k, lhs, rhs, ok, exact, std::move(detail)};
}

}  // namespace detail

/// Exact argmin, symmetry and endpoint checks for n = 1..n_max.
inline SuiteResult verify_theorem(std::int64_t n_max) {
  SuiteResult out;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const ArgminReport rep = argmin_f(n);
    const std::vector<std::int64_t> expected = n == 1 ? std::vector<std::int64_t>{0, 1}
                                                      : std::vector<std::int64_t>{1, n - 1};
    const ExactProb closed = n == 1 ? ExactProb::one() : f1_closed_form(n);
    const bool contains = std::all_of(expected.begin(), expected.end(), [&](std::int64_t k) {
      return std::binary_search(rep.minimizers.begin(), rep.minimizers.end(), k);
    });
    out.lines.push_back(detail::line("theorem", "argmin", n, std::nullopt, rep.min_value.to_double(),
                                     closed.to_double(), contains && rep.min_value == closed, true,
                                     "minimizers=" + detail::join(rep.minimizers)));

    bool symmetric = true;
    for (std::int64_t k = 0; k <= n; ++k) {
      symmetric = symmetric && rep.values[static_cast<std::size_t>(k)].second ==
                                   rep.values[static_cast<std::size_t>(n - k)].second;
    }
    out.lines.push_back(detail::line("theorem", "symmetry", n, std::nullopt, 1, 1, symmetric, true));

    const bool endpoints = rep.values.front().second == ExactProb::one() && rep.values.back().second == ExactProb::one();
    out.lines.push_back(detail::line("theorem", "endpoints", n, std::nullopt, 1, 1, endpoints, true));
  }
  return out;
}

/// argmin_m q_m lies at the integer nearest 2n/3, n = 2..n_max.
inline SuiteResult verify_chvatal(std::int64_t n_max) {
  SuiteResult out;
  for (std::int64_t n = 2; n <= n_max; ++n) {
    const auto got = argmin_chvatal(n);
    const auto nearest = nearest_to_two_thirds(n);
    const bool ok = !got.empty() && std::all_of(got.begin(), got.end(), [&](std::int64_t m) {
      return std::find(nearest.begin(), nearest.end(), m) != nearest.end();
    });
    out.lines.push_back(detail::line("chvatal", "argmin", n, std::nullopt, static_cast<double>(got.front()),
                                     2.0 * static_cast<double>(n) / 3.0, ok, true,
                                     "minimizers=" + detail::join(got) + " nearest=" + detail::join(nearest)));
  }
  return out;
}

/// Normal-approximation chain for n in [40, n_max], 10 <= k <= n/2, plus the
/// n-independent constants and the f_n(1) threshold.
inline SuiteResult verify_berry_esseen(std::int64_t n_max, double c0 = be::kC0) {
  SuiteResult out;
  const double phi_width = normal_cdf(1.0) - normal_cdf(-1.0);
  {
    std::ostringstream d;
    d.precision(8);
    d << std::fixed << "phi_width=" << phi_width;
    out.lines.push_back(detail::line("be", "phi_width", std::nullopt, std::nullopt, phi_width, be::kPhiWidthFloor,
                                     phi_width > be::kPhiWidthFloor + be::kGuard, false, d.str()));
  }
  const double ten = c0 / std::sqrt(10.0);
  out.lines.push_back(detail::line("be", "side_cap", std::nullopt, 10, be::kSideCap, ten,
                                   ten < be::kSideCap - be::kGuard, false, "C0/sqrt(10) < 0.15014495"));
  out.lines.push_back(detail::line("be", "two_sided_cap", std::nullopt, std::nullopt, be::kTwoSidedCap,
                                   2 * be::kSideCap, std::abs(2 * be::kSideCap - be::kTwoSidedCap) <= 1e-15, false,
                                   "2 * 0.15014495 = 0.3002899"));

  const F40ThresholdReport t = verify_f40_threshold();
  out.lines.push_back(detail::line("be", "f40_below_lower_bound", 40, 1, be::kLowerBound, t.f40, t.below_lower_bound,
                                   true, "f_40(1) < 0.38239958"));
  out.lines.push_back(detail::line("be", "f1_decreasing", std::nullopt, 1, t.f40, std::exp(-1.0),
                                   t.decreasing_on_grid && t.f41_below_f40, false,
                                   "((n-1)/n)^(n-1) strictly decreasing on sampled n in [40, 1e6]"));
  out.lines.push_back(detail::line("be", "f1_limit", 1000000, 1, 1e-5,
                                   std::abs(static_cast<double>(detail::f1_approx(1000000)) - std::exp(-1.0)),
                                   t.limit_near_inverse_e, false, "|f_1e6(1) - 1/e| <= 1e-5"));
  if (!t.matches_printed) {
    std::ostringstream note;
    note.precision(8);
    note << std::fixed << "f_40(1) = " << t.f40 << " differs from the printed 0.36323244, which equals (39/40)^40 = "
         << std::pow(39.0 / 40.0, 40.0) << "; the threshold argument only needs f_40(1) < 0.38239958";
    out.notes.push_back(note.str());
  }

  for (std::int64_t n = be::kMinN; n <= n_max; ++n) {
    for (std::int64_t k = be::kMinK; 2 * k <= n; ++k) {
      const BerryEsseenReport r = verify_chain(n, k, c0);
      out.lines.push_back(detail::line("be", "chain", n, k, r.f_value, be::kLowerBound, r.holds, true));
      const double disc = sup_discrepancy(n, k);
      out.lines.push_back(detail::line("be", "discrepancy", n, k, r.bound, disc, disc <= r.bound, false));
    }
  }
  return out;
}

inline SuiteResult verify_cases(std::int64_t n_max) {
  SuiteResult out;
  for (const auto& c : verify_all_cases(n_max)) out.lines.push_back(c.to_report());
  return out;
}

/// Desk-scale checks of P(|sum a_j eps_j| <= 1) >= 1/2.
inline SuiteResult verify_rademacher(std::size_t count = 10000, std::uint64_t seed = 1, std::size_t max_n = 15) {
  SuiteResult out;
  const double h = 1.0 / std::sqrt(2.0);
  const double p2 = prob_within(SignVector({h, h}), 1.0);
  out.lines.push_back(detail::line("rademacher", "extremal_pair", 2, std::nullopt, p2, 0.5,
                                   std::abs(p2 - 0.5) <= 1e-12, true, "a = (1/sqrt2, 1/sqrt2)"));
  const double t = 1.0 / std::sqrt(3.0);
  const double p3 = prob_within(SignVector({t, t, t}), 1.0);
  out.lines.push_back(detail::line("rademacher", "equal_triple", 3, std::nullopt, p3, 0.75,
                                   std::abs(p3 - 0.75) <= 1e-12, true, "a = (1/sqrt3, 1/sqrt3, 1/sqrt3)"));
  for (std::size_t n = 1; n <= 4; ++n) {
    std::vector<double> e(n, 0.0);
    e.back() = 1.0;
    const double p = prob_within(SignVector(e), 1.0);
    out.lines.push_back(detail::line("rademacher", "basis_vector", static_cast<std::int64_t>(n), std::nullopt, p, 1.0,
                                     p == 1.0, true));
  }
  const TomaszewskiReport r = tomaszewski_property(count, seed, max_n);
  out.lines.push_back(detail::line("rademacher", "random_unit_vectors", std::nullopt, std::nullopt, r.min_prob, 0.5,
                                   r.holds, true,
                                   std::to_string(count) + " vectors, n <= " + std::to_string(max_n) +
                                       ", seed " + std::to_string(seed)));
  return out;
}

}  // namespace binconc
