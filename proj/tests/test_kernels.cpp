#include <gtest/gtest.h>

#include "lumbral.hpp"
#include "oracles.hpp"

using namespace lumbral;

TEST(Kernels, LambdaRejectsZeroUnlessLimit) {
  EXPECT_THROW(Lambda(Rational(0)), DomainError);
  EXPECT_TRUE(Lambda::from_rational(Rational(0)).is_limit());
  EXPECT_FALSE(Lambda(Rational(1, 2)).is_limit());
  EXPECT_EQ(Lambda(Rational(1, 2)).scaled(Rational(1, 3)).value(), Rational(1, 6));
}

TEST(Kernels, LambdaFallingExamples) {
  const Rational lam(1, 2);
  EXPECT_EQ(lambda_falling(0, lam), PolyX(Rational(1)));
  EXPECT_EQ(lambda_falling(2, lam), PolyX({Rational(0), -lam, Rational(1)}));
  EXPECT_EQ(lambda_falling(2, lam)(Rational(3)), Rational(15, 2));
  for (std::size_t n = 0; n <= 8; ++n) {
    const PolyX p = lambda_falling(n, Rational(-2, 3));
    EXPECT_EQ(p.degree(), static_cast<long>(n));
    EXPECT_EQ(p.leading(), Rational(1));
    if (n > 0) {
      EXPECT_EQ(p(Rational(0)), Rational(0));
    }
    EXPECT_EQ(p, oracle::lfall_poly(n, Rational(-2, 3)));
  }
  EXPECT_EQ(falling(3), lambda_falling(3, Rational(1)));
}

TEST(Kernels, DegenerateExpExamples) {
  const Lambda half(Rational(1, 2));
  const Series zero = degenerate_exp(Rational(0), half, 5);
  EXPECT_EQ(zero, Series::one(5));
  EXPECT_EQ(degenerate_exp(Rational(1), half, 5)[2], Rational(1, 2));
  // classical limit gives x^n
  const PolySeries e = degenerate_exp(Lambda::classical_limit(), 6);
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(e[n], PolyX::monomial(Rational(1), n));
}

TEST(Kernels, LambdaLogExamples) {
  for (const auto& lv : {Rational(1, 2), Rational(-1, 3), Rational(1, 3)}) {
    const Series f = lambda_log_series(Lambda(lv), 8);
    EXPECT_EQ(f[0], Rational(0));
    EXPECT_EQ(f[1], Rational(1));
    EXPECT_EQ(f[2], lv - Rational(1));
  }
  EXPECT_EQ(lambda_log_series(Lambda(Rational(1)), 8), Series::identity(8));
  const Series classical = lambda_log_series(Lambda::classical_limit(), 8);
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_EQ(classical[n], (n % 2 ? Rational(1) : Rational(-1)) * Rational::factorial(n - 1));
  }
}

TEST(Kernels, LambdaLogClosedFormProduct) {
  // lambda^{n-1} (1)_{n,1/lambda} = prod_{j=1}^{n-1} (lambda - j)
  for (const auto& lv : {Rational(1, 2), Rational(-1, 3), Rational(2, 5), Rational(3), Rational(7, 4)}) {
    const Series f = lambda_log_series(Lambda(lv), 16);
    for (std::size_t n = 1; n <= 16; ++n) {
      Rational prod(1);
      for (std::size_t j = 1; j < n; ++j) prod *= lv - Rational(static_cast<long>(j));
      ASSERT_EQ(f[n], prod) << "n=" << n;
      ASSERT_EQ(f[n], lv.pow(static_cast<long>(n) - 1) * oracle::lfall(Rational(1), n, lv.inverse()));
    }
  }
}

TEST(Kernels, InversePairLaw) {
  const std::size_t N = 16;
  for (const auto& lv : {Rational(1, 2), Rational(-1, 3), Rational(2, 5), Rational(3)}) {
    const Lambda l(lv);
    const Series e = degenerate_exp_minus_one(l, N);
    const Series g = lambda_log_series(l, N);
    EXPECT_EQ(series_compose(e, g), Series::identity(N));
    EXPECT_EQ(series_compose(g, e), Series::identity(N));
    EXPECT_EQ(series_comp_inverse(e), g);
  }
}

TEST(Kernels, ExponentAdditivity) {
  // (x + y)_{n,lambda} = sum_j C(n,j) (x)_{j,lambda} (y)_{n-j,lambda}, checked on
  // a grid of rational x, y so that the bivariate identity holds coefficientwise
  // in y for the x-polynomial (degree n in each variable).
  const Rational lam(2, 5);
  for (std::size_t n = 0; n <= 12; ++n) {
    for (long yi = -3; yi <= 3; ++yi) {
      const Rational y(yi, 2);
      PolyX rhs;
      for (std::size_t j = 0; j <= n; ++j) {
        rhs += lambda_falling(j, lam) * (Rational::binomial(n, j) * lambda_falling_value(y, n - j, lam));
      }
      ASSERT_EQ(lambda_falling(n, lam).substitute_affine(Rational(1), y), rhs);
    }
  }
}
