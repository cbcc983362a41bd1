#ifndef LUMBRAL_STIRLING_WHITNEY_HPP
#define LUMBRAL_STIRLING_WHITNEY_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "lumbral/errors.hpp"
#include "lumbral/kernels.hpp"
#include "lumbral/poly.hpp"
#include "lumbral/series.hpp"
#include "lumbral/triangle.hpp"

namespace lumbral {

namespace detail {

inline void require_positive_m(long m) {
  if (m < 1) throw DomainError("m must be a positive integer, got " + std::to_string(m));
}

// T(n, k) = [t^n/n!] base * (step)^k / k!.
inline Triangle power_triangle(const Series& base, const Series& step) {
  const std::size_t n_max = base.order_cap();
  TriangleBuilder<Rational> out(n_max);
  Series power = base;
  Rational k_fact(1);
  for (std::size_t k = 0; k <= n_max; ++k) {
    if (k > 0) {
      power = series_mul(power, step);
      k_fact *= Rational(static_cast<long>(k));
    }
    for (std::size_t n = k; n <= n_max; ++n) out.set(n, k, power[n] / k_fact);
  }
  return std::move(out).build();
}

// Coefficients c with p = sum_k c[k] basis[k], where deg basis[k] = k.
inline std::vector<Rational> expand_in_graded_basis(const PolyX& p, const std::vector<PolyX>& basis) {
  if (p.is_zero()) return {};
  const auto deg = static_cast<std::size_t>(p.degree());
  if (basis.size() <= deg) throw DimensionError("expand_in_graded_basis: basis too short");
  std::vector<Rational> c(deg + 1);
  PolyX rest = p;
  for (std::size_t d = deg + 1; d-- > 0;) {
    if (basis[d].degree() != static_cast<long>(d)) throw DimensionError("expand_in_graded_basis: basis not graded");
    c[d] = rest.coeff(d) / basis[d].leading();
    if (!c[d].is_zero()) rest -= basis[d] * c[d];
  }
  return c;
}

inline Triangle triangle_from_rows(std::size_t n_max, const std::function<std::vector<Rational>(std::size_t)>& row) {
  TriangleBuilder<Rational> out(n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto r = row(n);
    for (std::size_t k = 0; k < r.size() && k <= n; ++k) out.set(n, k, r[k]);
  }
  return std::move(out).build();
}

}  // namespace detail

// S1(n, k): (x)_n = sum_k S1(n, k) x^k (signed).
inline Triangle stirling1(std::size_t n_max) {
  const auto fallings = lambda_falling_table(n_max, Rational(1));
  return detail::triangle_from_rows(n_max, [&](std::size_t n) { return fallings[n].coeffs(); });
}

// S2(n, k): x^n = sum_k S2(n, k) (x)_k.
inline Triangle stirling2(std::size_t n_max) {
  return detail::triangle_from_rows(n_max, [](std::size_t n) {
    return to_lambda_falling_basis(PolyX::monomial(Rational(1), n), Rational(1));
  });
}

// (1/k!) (log_lambda(1+t))^k = sum_n S_{1,lambda}(n, k) t^n/n!.
inline Triangle degenerate_stirling1(std::size_t n_max, const Lambda& lambda) {
  return detail::power_triangle(Series::one(n_max), lambda_log_series(lambda, n_max));
}

// (1/k!) (e_lambda(t) - 1)^k = sum_n S_{2,lambda}(n, k) t^n/n!.
inline Triangle degenerate_stirling2(std::size_t n_max, const Lambda& lambda) {
  return detail::power_triangle(Series::one(n_max), degenerate_exp_minus_one(lambda, n_max));
}

// Change-of-basis route: (x)_n = sum_k S_{1,lambda}(n, k) (x)_{k,lambda}.
inline Triangle degenerate_stirling1_by_basis(std::size_t n_max, const Lambda& lambda) {
  const auto fallings = lambda_falling_table(n_max, Rational(1));
  return detail::triangle_from_rows(
      n_max, [&](std::size_t n) { return to_lambda_falling_basis(fallings[n], lambda.value()); });
}

// Change-of-basis route: (x)_{n,lambda} = sum_k S_{2,lambda}(n, k) (x)_k.
inline Triangle degenerate_stirling2_by_basis(std::size_t n_max, const Lambda& lambda) {
  const auto fallings = lambda_falling_table(n_max, lambda.value());
  return detail::triangle_from_rows(
      n_max, [&](std::size_t n) { return to_lambda_falling_basis(fallings[n], Rational(1)); });
}

// e_lambda(t) (1/k!) ((e_lambda^m(t) - 1)/m)^k = sum_n W_{m,lambda}(n, k) t^n/n!.
inline Triangle degenerate_whitney2(std::size_t n_max, long m, const Lambda& lambda) {
  detail::require_positive_m(m);
  const Series step = (degenerate_exp(Rational(m), lambda, n_max) - Series::one(n_max)) * Rational(1, m);
  return detail::power_triangle(degenerate_exp(Rational(1), lambda, n_max), step);
}

// Change-of-basis route: (m x + 1)_{n,lambda} = sum_k W_{m,lambda}(n, k) m^k (x)_k.
inline Triangle degenerate_whitney2_by_basis(std::size_t n_max, long m, const Lambda& lambda) {
  detail::require_positive_m(m);
  const Rational mr(m);
  return detail::triangle_from_rows(n_max, [&](std::size_t n) {
    const PolyX shifted = lambda_falling(n, lambda.value()).substitute_affine(mr, Rational(1));
    auto q = to_lambda_falling_basis(shifted, Rational(1));
    for (std::size_t k = 0; k < q.size(); ++k) q[k] /= mr.pow(static_cast<long>(k));
    return q;
  });
}

// (m x + r)^n = sum_k W^{(r)}_m(n, k) m^k (x)_k.
inline Triangle r_whitney2(std::size_t n_max, long m, long r) {
  detail::require_positive_m(m);
  if (r < 0) throw DomainError("r must be nonnegative");
  const Rational mr(m);
  const PolyX linear({Rational(r), mr});
  return detail::triangle_from_rows(n_max, [&](std::size_t n) {
    PolyX power(Rational(1));
    for (std::size_t i = 0; i < n; ++i) power *= linear;
    auto q = to_lambda_falling_basis(power, Rational(1));
    for (std::size_t k = 0; k < q.size(); ++k) q[k] /= mr.pow(static_cast<long>(k));
    return q;
  });
}

// m^n (x)_n = sum_k V^{(r)}_m(n, k) (m x + r)^k, solved top-down in the
// graded basis {(m x + r)^k}.
inline Triangle r_whitney1(std::size_t n_max, long m, long r) {
  detail::require_positive_m(m);
  if (r < 0) throw DomainError("r must be nonnegative");
  const Rational mr(m);
  const PolyX linear({Rational(r), mr});
  std::vector<PolyX> basis{PolyX(Rational(1))};
  for (std::size_t k = 1; k <= n_max; ++k) basis.push_back(basis.back() * linear);
  return detail::triangle_from_rows(n_max, [&](std::size_t n) {
    return detail::expand_in_graded_basis(falling(n) * mr.pow(static_cast<long>(n)), basis);
  });
}

// Classical Whitney numbers are the r = 1 case.
inline Triangle whitney2(std::size_t n_max, long m) { return r_whitney2(n_max, m, 1); }
inline Triangle whitney1(std::size_t n_max, long m) { return r_whitney1(n_max, m, 1); }

}  // namespace lumbral

#endif  // LUMBRAL_STIRLING_WHITNEY_HPP
