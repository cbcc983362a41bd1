#include <gtest/gtest.h>

#include <random>

#include "lumbral.hpp"
#include "oracles.hpp"

using namespace lumbral;

namespace {

const Lambda kHalf(Rational(1, 2));

// Random pair with o(g) = 0 and o(f) = 1, the way a user might hand-roll one.
ShefferPair random_pair(std::mt19937_64& rng, const Lambda& l, std::size_t N) {
  std::vector<Rational> g(N + 1), f(N + 1);
  for (auto& v : g) v = oracle::random_rational(rng);
  for (auto& v : f) v = oracle::random_rational(rng);
  if (g[0].is_zero()) g[0] = Rational(1);
  f[0] = Rational(0);
  if (f[1].is_zero()) f[1] = Rational(-2, 3);
  return {Series(N, g), Series(N, f), l};
}

}  // namespace

TEST(Pairing, Examples) {
  const Rational lam(1, 3);
  for (std::size_t k = 0; k <= 5; ++k) {
    const Series tk = series_pow(Series::identity(6), k);
    for (std::size_t n = 0; n <= 5; ++n) {
      EXPECT_EQ(pair_functional(tk, lambda_falling(n, lam), lam), n == k ? Rational::factorial(n) : Rational(0));
    }
  }
  const Series f = lambda_log_series(Lambda(lam), 6);
  EXPECT_EQ(pair_functional(f, PolyX(Rational(1)), lam), f[0]);
  EXPECT_EQ(pair_functional(f, lambda_falling(2, lam), lam), Rational(-2, 3));
  EXPECT_THROW(pair_functional(Series::one(2), lambda_falling(3, lam), lam), OrderError);
}

TEST(DiffOperator, Examples) {
  const Rational lam(2, 5);
  for (std::size_t n = 0; n <= 5; ++n) {
    EXPECT_EQ(apply_lambda_diff_op(0, lambda_falling(n, lam), lam), PolyX::monomial(Rational(1), n));
  }
  EXPECT_EQ(apply_lambda_diff_op(1, lambda_falling(2, lam), lam), PolyX::monomial(Rational(2), 1));
  EXPECT_TRUE(apply_lambda_diff_op(3, lambda_falling(2, lam), lam).is_zero());
}

TEST(ShefferPair, OrderConditions) {
  EXPECT_THROW(ShefferPair(Series(4), Series::identity(4), kHalf), PairError);
  EXPECT_THROW(ShefferPair(Series::one(4), Series::one(4), kHalf), PairError);
  EXPECT_THROW(ShefferPair(Series::one(4), series_pow(Series::identity(4), 2), kHalf), PairError);
  EXPECT_THROW(ShefferPair(Series::one(4), Series::identity(5), kHalf), DimensionError);
}

TEST(ShefferGenerate, KnownSequences) {
  for (const auto& lv : {Rational(1, 2), Rational(-1, 3), Rational(2, 5), Rational(3, 4)}) {
    const Lambda l(lv);
    EXPECT_EQ(sheffer_generate(falling_pair(l, 10), 10).polys, lambda_falling_table(10, lv));
    EXPECT_EQ(sheffer_generate(bell_pair(l, 10), 10).polys, fully_degenerate_bell_table(10, l));
    for (long m = 1; m <= 3; ++m) {
      EXPECT_EQ(sheffer_generate(dowling_pair(m, l, 10), 10).polys, fully_degenerate_dowling_table(10, m, l));
    }
    EXPECT_EQ(sheffer_generate(bernoulli_pair(l, 10), 10).polys, degenerate_bernoulli_table(10, l));
    EXPECT_EQ(sheffer_generate(bernoulli2_pair(l, 10), 10).polys, degenerate_bernoulli2_table(10, l));
    for (long k = 0; k <= 3; ++k) {
      EXPECT_EQ(sheffer_generate(poly_bell_pair(k, l, 8), 8).polys, degenerate_poly_bell_table(8, k, l));
    }
  }
}

TEST(ShefferGenerate, ZeroAndOrderCap) {
  const auto seq = sheffer_generate(bell_pair(kHalf, 3), 0);
  ASSERT_EQ(seq.polys.size(), 1u);
  EXPECT_EQ(seq.polys[0], PolyX(Rational(1)));
  EXPECT_THROW(sheffer_generate(bell_pair(kHalf, 3), 4), OrderError);
}

TEST(ShefferGenerate, BiorthogonalityOnRandomPairs) {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 20; ++i) {
    const Lambda l(oracle::random_rational(rng).is_zero() ? Rational(1, 9) : Rational(1 + i, 7));
    const auto seq = sheffer_generate(random_pair(rng, l, 10), 10);
    EXPECT_TRUE(is_biorthogonal(seq));
    for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(seq.polys[n].degree(), static_cast<long>(n));
  }
}

TEST(ShefferGenerate, DetectsBrokenSequence) {
  auto seq = sheffer_generate(bell_pair(kHalf, 6), 6);
  seq.polys[3] += PolyX(Rational(1));
  EXPECT_FALSE(is_biorthogonal(seq));
}

TEST(Connection, Examples) {
  for (const auto& lv : {Rational(1, 2), Rational(-1, 3), Rational(2, 5)}) {
    const Lambda l(lv);
    const ShefferPair bell = bell_pair(l, 9);
    EXPECT_EQ(connection_coefficients(bell, bell, 9), Triangle::identity(9));
    EXPECT_EQ(connection_coefficients(falling_pair(l, 9), bell, 9), degenerate_stirling1(9, l));
    for (long m = 1; m <= 3; ++m) {
      const Triangle c = connection_coefficients(dowling_pair(m, l, 9), bell, 9);
      const Triangle s1 = degenerate_stirling1(9, l);
      const Triangle w = degenerate_whitney2(9, m, l);
      for (std::size_t n = 0; n <= 9; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
          Rational ref;
          for (std::size_t j = k; j <= n; ++j) ref += s1(j, k) * w(n, j);
          ASSERT_EQ(c(n, k), ref);
        }
      }
    }
  }
}

TEST(Connection, LambdaMismatch) {
  EXPECT_THROW(connection_coefficients(bell_pair(kHalf, 4), bell_pair(Lambda(Rational(1, 3)), 4), 4), ParameterError);
}

TEST(ExpandInBasis, Examples) {
  for (const auto& lv : {Rational(1, 2), Rational(-1, 3)}) {
    const Lambda l(lv);
    const ShefferPair bell = bell_pair(l, 8);
    const auto phi = fully_degenerate_bell_table(8, l);
    for (std::size_t j = 0; j <= 8; ++j) {
      auto c = expand_in_basis(phi[j], bell);
      ASSERT_EQ(c.size(), j + 1);
      for (std::size_t k = 0; k <= j; ++k) EXPECT_EQ(c[k], k == j ? Rational(1) : Rational(0));
    }
    const Triangle s1 = degenerate_stirling1(8, l);
    const Series beta = degenerate_bernoulli_numbers(8, l);
    for (std::size_t n = 0; n <= 8; ++n) {
      EXPECT_EQ(expand_in_basis(lambda_falling(n, lv), bell), s1.row(n));
      const auto c = expand_in_basis(degenerate_bernoulli(n, l), bell);
      for (std::size_t k = 0; k <= n; ++k) {
        Rational ref;
        for (std::size_t m = k; m <= n; ++m) ref += Rational::binomial(n, m) * beta[n - m] * s1(m, k);
        EXPECT_EQ(c[k], ref);
      }
    }
  }
  EXPECT_TRUE(expand_in_basis(PolyX(), bell_pair(kHalf, 3)).empty());
  EXPECT_THROW(expand_in_basis(PolyX::monomial(Rational(1), 5), bell_pair(kHalf, 3)), OrderError);
}

TEST(ExpandInBasis, RoundTripRandom) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Lambda l(Rational(trial + 1, 11));
    const ShefferPair pair = random_pair(rng, l, 7);
    const auto basis = sheffer_generate(pair, 7).polys;
    std::vector<Rational> c(8);
    for (auto& v : c) v = oracle::random_rational(rng);
    const PolyX p(c);
    EXPECT_EQ(reconstruct(expand_in_basis(p, pair), basis), p);
  }
}
