#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tensorval/coefficients.hpp"

using namespace tensorval;
using namespace tensorval::coeff;

namespace {

ExactScalar pi_term(long long num, long long den, int half_pow) { return ExactScalar(Rational(num, den), half_pow); }

// Gamma(n/2)/Gamma((n+s)/2) Gamma((n-j+s)/2)/Gamma((n-j)/2) / ((2 sqrt(pi))^s (s/2)!), in floating point.
double top_closed_form(int n, int j, int s) {
  const double h = s / 2;
  double g = std::tgamma(n / 2.0) / std::tgamma((n + s) / 2.0);
  g *= n == j ? (s == 0 ? 1.0 : 0.0) : std::tgamma((n - j + s) / 2.0) / std::tgamma((n - j) / 2.0);
  return g / (std::pow(2.0 * std::sqrt(std::numbers::pi), s) * std::tgamma(h + 1.0));
}

}  // namespace

TEST(ExactScalar, ArithmeticKeepsNormalForm) {
  const ExactScalar a = pi_term(1, 2, 2);
  const ExactScalar b = pi_term(1, 3, 2);
  EXPECT_EQ(a + b, pi_term(5, 6, 2));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(a * b, pi_term(1, 6, 4));
  EXPECT_EQ(a / b, ExactScalar(Rational(3, 2)));
  const ExactScalar mixed = a + ExactScalar(1);
  EXPECT_FALSE(mixed.is_monomial());
  EXPECT_NEAR(mixed.to_double(), std::numbers::pi / 2 + 1, 1e-15);
  EXPECT_THROW(ExactScalar(1) / ExactScalar(), std::domain_error);
}

TEST(ExactScalar, ToDoubleMonotoneInRational) {
  for (int h = -4; h <= 4; ++h) EXPECT_LT(pi_term(1, 3, h).to_double(), pi_term(1, 2, h).to_double());
}

TEST(GammaHalf, Examples) {
  EXPECT_EQ(gamma_half(1), pi_term(1, 1, 1));
  EXPECT_EQ(gamma_half(6), ExactScalar(2));
  EXPECT_EQ(gamma_half(5), pi_term(3, 4, 1));
}

TEST(GammaHalf, MatchesTgamma) {
  for (int t = 1; t <= 30; ++t) EXPECT_NEAR(gamma_half(t).to_double() / std::tgamma(t / 2.0), 1.0, 1e-13) << t;
}

TEST(RgammaRatio, PoleConventions) {
  EXPECT_TRUE(rgamma_ratio(2, 0).is_zero());
  EXPECT_TRUE(rgamma_ratio(3, -2).is_zero());
  EXPECT_EQ(rgamma_ratio(0, 0), ExactScalar(1));
  EXPECT_EQ(rgamma_ratio(2, 2), ExactScalar(1));
  EXPECT_THROW(rgamma_ratio(0, 2), std::domain_error);
}

TEST(RgammaRatio, PolePoleLimit) {
  // Gamma(-1 + e)/Gamma(0 + e) -> -1 as e -> 0.
  EXPECT_EQ(rgamma_ratio(-2, 0), ExactScalar(-1));
  EXPECT_EQ(rgamma_ratio(0, -2), ExactScalar(-1));
}

TEST(Alpha, Examples) {
  for (int n = 1; n <= 5; ++n)
    for (int j = 0; j <= n; ++j) EXPECT_EQ(alpha(n, j, j), ExactScalar(1));
  EXPECT_EQ(alpha(2, 0, 1), pi_term(2, 1, -2));
  EXPECT_EQ(alpha(3, 1, 2), pi_term(1, 4, 2));
}

TEST(KfCoeffE, Examples) {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= k; ++j) {
        EXPECT_EQ(kf_coeff_e(n, j, k, 0, 0, 0), alpha(n, j, k));
        for (int p = 1; p <= 3; ++p) EXPECT_TRUE(kf_coeff_e(n, j, k, 0, 0, p).is_zero());
        for (int s = 0; s <= 6; ++s)
          for (int m = 0; m <= s / 2; ++m)
            EXPECT_EQ(kf_coeff_e(n, j, j, s, m, 0), ExactScalar(m == 0 ? 1 : 0));
      }
}

TEST(KfCoeffE, TopClosedFormAgainstFloatingGamma) {
  for (int n = 1; n <= 5; ++n)
    for (int j = 0; j <= n; ++j)
      for (int s = 0; s <= 6; s += 2)
        EXPECT_NEAR(kf_coeff_e(n, j, n, s, s / 2, 0).to_double(), top_closed_form(n, j, s), 1e-14)
            << n << ' ' << j << ' ' << s;
}

TEST(TcmCoeffC, Examples) {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= k; ++j) {
        EXPECT_EQ(tcm_coeff_c(n, j, k, 0, 0, 0), alpha(n, j, k));
        for (int s = 0; s <= 6; ++s) {
          EXPECT_TRUE(tcm_coeff_c(n, j, k, s, 1, 0).is_zero());
          for (int m = 0; m <= s / 2; ++m)
            for (int i = 0; i <= 1; ++i)
              EXPECT_EQ(tcm_coeff_c(n, j, j, s, i, m), ExactScalar(m == 0 && i == 0 ? 1 : 0));
        }
      }
}

TEST(TcmCoeffEbar, Examples) {
  for (int n = 1; n <= 5; ++n)
    for (int j = 0; j <= n; ++j) {
      EXPECT_EQ(tcm_coeff_ebar(n, j, 0), ExactScalar(1));
      for (int s = 1; s <= 7; s += 2) EXPECT_TRUE(tcm_coeff_ebar(n, j, s).is_zero());
    }
  EXPECT_EQ(tcm_coeff_ebar(2, 0, 2), pi_term(1, 4, -2));
}

TEST(CroftonCoeffEqual, PlanarLineExample) {
  EXPECT_EQ(crofton_coeff_equal(2, 1, 2), pi_term(1, 8, -2));
  EXPECT_TRUE(crofton_coeff_equal(2, 1, 1).is_zero());
  EXPECT_TRUE(crofton_coeff_equal(3, 2, 3).is_zero());
}

TEST(SphereConstants, Examples) {
  EXPECT_EQ(sphere_constants(2).omega, pi_term(2, 1, 2));
  EXPECT_EQ(sphere_constants(3).kappa, pi_term(4, 3, 2));
  EXPECT_EQ(sphere_constants(4).omega, pi_term(2, 1, 4));
  EXPECT_EQ(ball_volume(0), ExactScalar(1));
  for (int n = 1; n <= 8; ++n) {
    EXPECT_NEAR(sphere_constants(n).omega.to_double(), 2 * std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0),
                1e-12);
    EXPECT_EQ(sphere_constants(n).omega, ExactScalar(n) * sphere_constants(n).kappa);
  }
}

// Reconstruction of the kinematic coefficients from the curvature-measure coefficients.
TEST(Reconstruction, KinematicFromCurvatureCoefficients) {
  const ExactScalar two_pi(Rational(2), 2);
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= n; ++k)
      for (int j = 0; j <= k; ++j)
        for (int s = 0; s <= 6; ++s) {
          const int big_m = s / 2;
          for (int m = 0; m <= big_m; ++m) {
            const ExactScalar over_k(Rational(1, k));
            const ExactScalar c1 = tcm_coeff_c(n, j, k, s, 1, m);
            const ExactScalar c1n = m < big_m ? tcm_coeff_c(n, j, k, s, 1, m + 1) : ExactScalar();
            const ExactScalar e0 = tcm_coeff_c(n, j, k, s, 0, m) + two_pi * over_k * c1 -
                                   two_pi * two_pi * over_k * ExactScalar(s - 2 * m) * c1n;
            EXPECT_EQ(kf_coeff_e(n, j, k, s, m, 0), e0) << n << j << k << s << m;
            for (int p = 1; p <= 3; ++p) {
              const ExactScalar ep = two_pi * over_k * (c1 - two_pi * ExactScalar(s - 2 * m + p) * c1n);
              EXPECT_EQ(kf_coeff_e(n, j, k, s, m, p), ep) << n << j << k << s << m << p;
            }
          }
        }
}
