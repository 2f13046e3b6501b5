#include "binconc/berry_esseen.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace binconc;

namespace {
// E|Y - p|^3 for Y ~ Bernoulli(p), straight from the two atoms.
double two_point_third_moment(std::int64_t n, std::int64_t k) {
  const double p = static_cast<double>(k) / static_cast<double>(n);
  return p * std::pow(1 - p, 3) + (1 - p) * std::pow(p, 3);
}
}  // namespace

TEST(Moments, ThirdAbsMoment) {
  EXPECT_DOUBLE_EQ(third_abs_moment(2, 1), 0.125);
  EXPECT_DOUBLE_EQ(third_abs_moment(40, 10), 0.1171875);
  EXPECT_EQ(third_abs_moment_exact(40, 10), BigRational(300000, 2560000));
  for (std::int64_t n = 2; n <= 60; ++n) {
    for (std::int64_t k = 1; k < n; ++k) {
      ASSERT_NEAR(third_abs_moment(n, k), two_point_third_moment(n, k), 1e-15) << n << ' ' << k;
    }
  }
  EXPECT_THROW(third_abs_moment(5, 0), std::domain_error);
}

TEST(Moments, Rho) {
  EXPECT_NEAR(rho(2, 1), 1.0, 1e-15);
  EXPECT_NEAR(rho(4, 2), 1.0, 1e-15);
  EXPECT_NEAR(rho(40, 10), 1.443376, 5e-7);
  for (std::int64_t n = 2; n <= 50; ++n) {
    for (std::int64_t k = 1; k < n; ++k) {
      const auto m = SummandMoments::make(n, k);
      ASSERT_NEAR(m.rho, two_point_third_moment(n, k) / std::pow(m.sigma, 3), 1e-12);
    }
  }
}

TEST(BeBound, Examples) {
  EXPECT_NEAR(be_bound(40, 20), 0.4748 / std::sqrt(40.0), 1e-15);
  EXPECT_NEAR(be_bound(40, 20), 0.075073, 1e-6);
  EXPECT_NEAR(be_bound(40, 10), 0.108358, 1e-6);
  EXPECT_THROW(be_bound(40, 10, 0), std::domain_error);
}

TEST(BeBound, ChainOfSimplifications) {
  for (std::int64_t n = 40; n <= 200; ++n) {
    for (std::int64_t k = 10; 2 * k <= n; ++k) {
      ASSERT_LE(be_bound(n, k), simplified_bound(n, k) * (1 + 1e-12));
      ASSERT_LE(simplified_bound(n, k), 0.4748 / std::sqrt(static_cast<double>(k)) * (1 + 1e-12));
    }
  }
  EXPECT_LT(0.4748 / std::sqrt(10.0), 0.15014495);
}

TEST(SupDiscrepancy, WithinBerryEsseen) {
  for (std::int64_t n : {2, 10, 40, 77, 150}) {
    for (std::int64_t k = 1; k < n; ++k) ASSERT_LE(sup_discrepancy(n, k), be_bound(n, k)) << n << ' ' << k;
  }
  // B(2, 1/2): the CDF jumps from 1/4 to 3/4 at the mean, where Phi = 1/2
  EXPECT_NEAR(sup_discrepancy(2, 1), 0.25, 1e-15);
}

TEST(VerifyChain, Examples) {
  const auto r = verify_chain(40, 10);
  EXPECT_TRUE(r.holds);
  EXPECT_NEAR(r.f_value, 0.638912, 5e-7);
  EXPECT_GT(r.f_value, 0.3824);
  EXPECT_TRUE(verify_chain(40, 20).holds);
  EXPECT_TRUE(verify_chain(100, 50).holds);
  EXPECT_THROW(verify_chain(39, 10), std::domain_error);
  EXPECT_THROW(verify_chain(40, 9), std::domain_error);
  EXPECT_THROW(verify_chain(40, 21), std::domain_error);
}

TEST(F40Threshold, ComputedValueAndArgument) {
  const auto t = verify_f40_threshold();
  // (39/40)^39; the printed 0.36323244 is (39/40)^40
  EXPECT_NEAR(t.f40, 0.37254609, 5e-9);
  EXPECT_NEAR(std::pow(39.0 / 40.0, 40.0), be::kPrintedF40, 5e-9);
  EXPECT_TRUE(t.f41_below_f40);
  EXPECT_TRUE(t.below_lower_bound);
  EXPECT_TRUE(t.decreasing_on_grid);
  EXPECT_TRUE(t.limit_near_inverse_e);
  EXPECT_TRUE(t.supports_argument());
  EXPECT_FALSE(t.matches_printed);
}

TEST(Grid, Shape) {
  const auto g = monotonicity_grid();
  EXPECT_EQ(g.front(), 40);
  EXPECT_EQ(g.back(), 1000000);
  EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
}
