#include <gtest/gtest.h>

#include "lumbral.hpp"
#include "oracles.hpp"

using namespace lumbral;

namespace {

void expect_matches(const Triangle& t, const oracle::Table& ref) {
  for (std::size_t n = 0; n <= t.n_max(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) ASSERT_EQ(t(n, k), ref[n][k]) << "(" << n << "," << k << ")";
  }
}

const std::vector<Rational> kLambdas{Rational(1, 2), Rational(-1, 3), Rational(2, 5), Rational(3, 4)};

}  // namespace

TEST(Stirling, ClassicalExamples) {
  const Triangle s1 = stirling1(6);
  const Triangle s2 = stirling2(6);
  EXPECT_EQ(s1(3, 1), Rational(2));
  EXPECT_EQ(s2(4, 2), Rational(7));
  for (std::size_t n = 0; n <= 6; ++n) {
    EXPECT_EQ(s1(n, n), Rational(1));
    EXPECT_EQ(s2(n, n), Rational(1));
  }
  expect_matches(stirling1(12), oracle::stirling1(12));
  expect_matches(stirling2(10), oracle::stirling2(10));
}

TEST(Stirling, DegenerateExamples) {
  for (const auto& lv : kLambdas) {
    const Lambda l(lv);
    const Triangle s1 = degenerate_stirling1(12, l);
    const Triangle s2 = degenerate_stirling2(12, l);
    EXPECT_EQ(s1(2, 1), lv - Rational(1));
    EXPECT_EQ(s2(2, 1), Rational(1) - lv);
    for (std::size_t n = 0; n <= 12; ++n) {
      EXPECT_EQ(s1(n, n), Rational(1));
      EXPECT_EQ(s2(n, n), Rational(1));
    }
    expect_matches(s1, oracle::deg_stirling1(12, lv));
    expect_matches(s2, oracle::deg_stirling2(12, lv));
  }
}

TEST(Stirling, DegenerateByBasisAgrees) {
  for (const auto& lv : kLambdas) {
    const Lambda l(lv);
    EXPECT_EQ(degenerate_stirling1(10, l), degenerate_stirling1_by_basis(10, l));
    EXPECT_EQ(degenerate_stirling2(10, l), degenerate_stirling2_by_basis(10, l));
  }
}

TEST(Stirling, LimitMatchesClassical) {
  const Lambda zero = Lambda::classical_limit();
  EXPECT_EQ(degenerate_stirling1(12, zero), stirling1(12));
  EXPECT_EQ(degenerate_stirling2(12, zero), stirling2(12));
}

TEST(Stirling, OrthogonalityDegenerate) {
  for (const auto& lv : kLambdas) {
    const Lambda l(lv);
    const Triangle s1 = degenerate_stirling1(14, l);
    const Triangle s2 = degenerate_stirling2(14, l);
    EXPECT_EQ(triangle_product(s1, s2), Triangle::identity(14));
    EXPECT_EQ(triangle_product(s2, s1), Triangle::identity(14));
  }
}

TEST(Whitney, DegenerateExamples) {
  for (const auto& lv : kLambdas) {
    const Lambda l(lv);
    for (long m = 1; m <= 3; ++m) {
      const Triangle w = degenerate_whitney2(8, m, l);
      for (std::size_t n = 0; n <= 8; ++n) {
        EXPECT_EQ(w(n, n), Rational(1));
        EXPECT_EQ(w(n, 0), lambda_falling_value(Rational(1), n, lv));
      }
      EXPECT_EQ(w(2, 1), Rational(m) - lv + Rational(2));
      EXPECT_EQ(w, degenerate_whitney2_by_basis(8, m, l));
    }
  }
  EXPECT_THROW(degenerate_whitney2(3, 0, Lambda(Rational(1, 2))), DomainError);
}

TEST(Whitney, DegenerateLimitIsClassical) {
  for (long m = 1; m <= 3; ++m) EXPECT_EQ(degenerate_whitney2(10, m, Lambda::classical_limit()), whitney2(10, m));
}

TEST(Whitney, RWhitneyAgainstClosedForm) {
  for (long m = 1; m <= 3; ++m) {
    for (long r = 0; r <= 3; ++r) {
      const Triangle w = r_whitney2(9, m, r);
      for (long n = 0; n <= 9; ++n) {
        for (long k = 0; k <= n; ++k) ASSERT_EQ(w(n, k), oracle::r_whitney2(n, k, m, r)) << m << r << n << k;
        EXPECT_EQ(w(n, 0), Rational(r).pow(n));
        EXPECT_EQ(w(n, n), Rational(1));
      }
    }
  }
}

TEST(Whitney, FirstKindSmallCase) {
  const Triangle v = whitney1(3, 1);
  EXPECT_EQ(v(1, 0), Rational(-1));
  EXPECT_EQ(v(1, 1), Rational(1));
}

TEST(Whitney, Orthogonality) {
  for (long m = 1; m <= 3; ++m) {
    EXPECT_EQ(triangle_product(whitney1(12, m), whitney2(12, m)), Triangle::identity(12));
    EXPECT_EQ(triangle_product(whitney2(12, m), whitney1(12, m)), Triangle::identity(12));
    for (long r = 0; r <= 2; ++r) {
      EXPECT_EQ(triangle_product(r_whitney1(12, m, r), r_whitney2(12, m, r)), Triangle::identity(12));
      EXPECT_EQ(triangle_product(r_whitney2(12, m, r), r_whitney1(12, m, r)), Triangle::identity(12));
    }
  }
}

TEST(Partitions, ColouredExamples) {
  for (long m = 1; m <= 4; ++m) EXPECT_EQ(enumerate_colored_partitions(1, 1, m, 1), 1);
  for (std::size_t n = 0; n <= 6; ++n) {
    for (long r = 0; r <= 2; ++r) {
      if (n + static_cast<std::size_t>(r) == 0) continue;
      EXPECT_EQ(enumerate_colored_partitions(n, n, 2, static_cast<std::size_t>(r)), 1);
    }
  }
}

TEST(Partitions, ColouredEqualsRWhitney) {
  for (long m = 1; m <= 3; ++m) {
    for (std::size_t r = 0; r <= 2; ++r) {
      const Triangle w = r_whitney2(8, m, static_cast<long>(r));
      for (std::size_t n = 0; n + r <= 8; ++n) {
        const auto row = colored_partition_row(n, m, r);
        for (std::size_t k = 0; k <= n; ++k) ASSERT_EQ(Rational(row[k]), w(n, k)) << m << r << n << k;
      }
    }
  }
}

TEST(Partitions, M1R1IsShiftedStirling2) {
  const auto s2 = oracle::stirling2(8);
  for (std::size_t n = 0; n <= 7; ++n) {
    const auto row = colored_partition_row(n, 1, 1);
    for (std::size_t k = 0; k <= n; ++k) ASSERT_EQ(Rational(row[k]), s2[n + 1][k + 1]);
  }
}

TEST(Partitions, CapAndDomainErrors) {
  EXPECT_THROW(colored_partition_row(10, 1, 1), ResourceError);
  EXPECT_NO_THROW(colored_partition_row(9, 1, 1));
  EXPECT_THROW(colored_partition_row(3, 1, 1, 3), ResourceError);
  EXPECT_THROW(colored_partition_row(3, 0, 1), DomainError);
  EXPECT_THROW(enumerate_colored_partitions(2, 3, 1, 1), DomainError);
}
