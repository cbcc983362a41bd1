#ifndef LUMBRAL_FAMILIES_HPP
#define LUMBRAL_FAMILIES_HPP

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lumbral/errors.hpp"
#include "lumbral/kernels.hpp"
#include "lumbral/poly.hpp"
#include "lumbral/series.hpp"
#include "lumbral/stirling_whitney.hpp"
#include "lumbral/triangle.hpp"

namespace lumbral {

namespace detail {

// sum_k T(n, k) basis[k] for each row n.
inline std::vector<PolyX> combine_rows(const Triangle& t, const std::vector<PolyX>& basis) {
  std::vector<PolyX> out;
  out.reserve(t.n_max() + 1);
  for (std::size_t n = 0; n <= t.n_max(); ++n) {
    PolyX acc;
    for (std::size_t k = 0; k <= n; ++k) {
      if (!t(n, k).is_zero()) acc += basis.at(k) * t(n, k);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

inline std::vector<PolyX> monomials(std::size_t n_max) {
  std::vector<PolyX> out;
  for (std::size_t k = 0; k <= n_max; ++k) out.push_back(PolyX::monomial(Rational(1), k));
  return out;
}

// (e_lambda^m(t) - 1)/m.
inline Series whitney_step(long m, const Lambda& lambda, std::size_t order_cap) {
  return (degenerate_exp(Rational(m), lambda, order_cap) - Series::one(order_cap)) * Rational(1, m);
}

// f(t)/t computed from one extra order so that the result keeps order_cap.
template <typename Build>
Series over_t(Build&& build, std::size_t order_cap) {
  return divide_by_t(build(order_cap + 1));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Bell family

// Fully degenerate Bell polynomials phi_{n,lambda}(x) = sum_k S_{2,lambda}(n,k) (x)_{k,lambda},
// for a caller-supplied S_{2,lambda} triangle.
inline std::vector<PolyX> fully_degenerate_bell_from(const Triangle& s2, const Lambda& lambda) {
  return detail::combine_rows(s2, lambda_falling_table(s2.n_max(), lambda.value()));
}

inline std::vector<PolyX> fully_degenerate_bell_table(std::size_t n_max, const Lambda& lambda) {
  return fully_degenerate_bell_from(degenerate_stirling2(n_max, lambda), lambda);
}

inline PolyX fully_degenerate_bell(std::size_t n, const Lambda& lambda) {
  return fully_degenerate_bell_table(n, lambda)[n];
}

// e_lambda^x(e_lambda(t) - 1).
inline PolySeries fully_degenerate_bell_gf(std::size_t order_cap, const Lambda& lambda) {
  return series_compose(degenerate_exp(lambda, order_cap), degenerate_exp_minus_one(lambda, order_cap));
}

// Partial degenerate Bell polynomials Bel_{n,lambda}(x) = sum_k S_{2,lambda}(n,k) x^k.
inline std::vector<PolyX> partial_degenerate_bell_table(std::size_t n_max, const Lambda& lambda) {
  return detail::combine_rows(degenerate_stirling2(n_max, lambda), detail::monomials(n_max));
}

inline PolyX partial_degenerate_bell(std::size_t n, const Lambda& lambda) {
  return partial_degenerate_bell_table(n, lambda)[n];
}

// exp(x (e_lambda(t) - 1)).
inline PolySeries partial_degenerate_bell_gf(std::size_t order_cap, const Lambda& lambda) {
  return series_compose(classical_exp_symbolic(order_cap), degenerate_exp_minus_one(lambda, order_cap));
}

// Classical Bell polynomials Bel_n(x) = sum_k S2(n,k) x^k.
inline PolyX bell_polynomial(std::size_t n) {
  return detail::combine_rows(stirling2(n), detail::monomials(n))[n];
}

// ---------------------------------------------------------------------------
// Dowling family

// d_{m,lambda}(n,x) = sum_k W_{m,lambda}(n,k) (x)_{k,lambda} for a supplied W triangle.
inline std::vector<PolyX> fully_degenerate_dowling_from(const Triangle& w, const Lambda& lambda) {
  return detail::combine_rows(w, lambda_falling_table(w.n_max(), lambda.value()));
}

inline std::vector<PolyX> fully_degenerate_dowling_table(std::size_t n_max, long m, const Lambda& lambda) {
  return fully_degenerate_dowling_from(degenerate_whitney2(n_max, m, lambda), lambda);
}

inline PolyX fully_degenerate_dowling(std::size_t n, long m, const Lambda& lambda) {
  return fully_degenerate_dowling_table(n, m, lambda)[n];
}

// e_lambda(t) e_lambda^x((e_lambda^m(t) - 1)/m).
inline PolySeries fully_degenerate_dowling_gf(std::size_t order_cap, long m, const Lambda& lambda) {
  detail::require_positive_m(m);
  const auto inner = series_compose(degenerate_exp(lambda, order_cap), detail::whitney_step(m, lambda, order_cap));
  return series_mul(degenerate_exp(Rational(1), lambda, order_cap), inner);
}

// D_{m,lambda}(n,x) = sum_k W_{m,lambda}(n,k) x^k.
inline std::vector<PolyX> degenerate_dowling_table(std::size_t n_max, long m, const Lambda& lambda) {
  return detail::combine_rows(degenerate_whitney2(n_max, m, lambda), detail::monomials(n_max));
}

inline PolyX degenerate_dowling(std::size_t n, long m, const Lambda& lambda) {
  return degenerate_dowling_table(n, m, lambda)[n];
}

// e_lambda(t) exp(x (e_lambda^m(t) - 1)/m).
inline PolySeries degenerate_dowling_gf(std::size_t order_cap, long m, const Lambda& lambda) {
  detail::require_positive_m(m);
  const auto inner = series_compose(classical_exp_symbolic(order_cap), detail::whitney_step(m, lambda, order_cap));
  return series_mul(degenerate_exp(Rational(1), lambda, order_cap), inner);
}

// Classical Dowling polynomials D_m(n,x) = sum_k W_m(n,k) x^k.
inline PolyX dowling_polynomial(std::size_t n, long m) {
  return detail::combine_rows(whitney2(n, m), detail::monomials(n))[n];
}

// ---------------------------------------------------------------------------
// Bernoulli family

// t/(e_lambda(t) - 1); its coefficients are the degenerate Bernoulli numbers.
inline Series degenerate_bernoulli_numbers(std::size_t order_cap, const Lambda& lambda) {
  return series_reciprocal(
      detail::over_t([&](std::size_t cap) { return degenerate_exp_minus_one(lambda, cap); }, order_cap));
}

// (t/(e_lambda(t) - 1)) e_lambda^x(t) = sum_n beta_{n,lambda}(x) t^n/n!.
inline std::vector<PolyX> degenerate_bernoulli_table(std::size_t n_max, const Lambda& lambda) {
  return series_mul(degenerate_bernoulli_numbers(n_max, lambda), degenerate_exp(lambda, n_max)).coeffs();
}

inline PolyX degenerate_bernoulli(std::size_t n, const Lambda& lambda) {
  return degenerate_bernoulli_table(n, lambda)[n];
}

// t/log_lambda(1 + t); coefficients are the degenerate Bernoulli numbers of the second kind.
inline Series degenerate_bernoulli2_numbers(std::size_t order_cap, const Lambda& lambda) {
  return series_reciprocal(
      detail::over_t([&](std::size_t cap) { return lambda_log_series(lambda, cap); }, order_cap));
}

// (t/log_lambda(1+t)) (1+t)^x with (1+t)^x = sum_j (x)_j t^j/j!.
inline std::vector<PolyX> degenerate_bernoulli2_table(std::size_t n_max, const Lambda& lambda) {
  const PolySeries one_plus_t_pow_x(n_max, lambda_falling_table(n_max, Rational(1)));
  return series_mul(degenerate_bernoulli2_numbers(n_max, lambda), one_plus_t_pow_x).coeffs();
}

inline PolyX degenerate_bernoulli2(std::size_t n, const Lambda& lambda) {
  return degenerate_bernoulli2_table(n, lambda)[n];
}

// ---------------------------------------------------------------------------
// Poly-exponential and poly-Bell

// Ei_{k,lambda}(t) = sum_{n>=1} (1)_{n,lambda} t^n/((n-1)! n^k); as an EGF,
// a[n] = (1)_{n,lambda} n^{1-k}.
inline Series degenerate_polyexp_series(long k, const Lambda& lambda, std::size_t order_cap) {
  std::vector<Rational> out(order_cap + 1);
  for (std::size_t n = 1; n <= order_cap; ++n) {
    out[n] = lambda_falling_value(Rational(1), n, lambda.value()) * Rational(static_cast<long>(n)).pow(1 - k);
  }
  return Series(order_cap, std::move(out));
}

// Ei_{k,lambda}(log_lambda(1+t)) / (e_lambda(t) - 1).
inline Series degenerate_poly_bernoulli_numbers(std::size_t order_cap, long k, const Lambda& lambda) {
  const Series numer = detail::over_t(
      [&](std::size_t cap) {
        return series_compose(degenerate_polyexp_series(k, lambda, cap), lambda_log_series(lambda, cap));
      },
      order_cap);
  const Series denom = detail::over_t([&](std::size_t cap) { return degenerate_exp_minus_one(lambda, cap); }, order_cap);
  return series_divide(numer, denom);
}

inline std::vector<PolyX> degenerate_poly_bell_table(std::size_t n_max, long k, const Lambda& lambda) {
  return series_mul(degenerate_poly_bernoulli_numbers(n_max, k, lambda), degenerate_exp(lambda, n_max)).coeffs();
}

inline PolyX degenerate_poly_bell(std::size_t n, long k, const Lambda& lambda) {
  return degenerate_poly_bell_table(n, k, lambda)[n];
}

// ---------------------------------------------------------------------------
// Family dispatch

enum class Family {
  kBellClassical,
  kBellPartialDeg,
  kBellFullyDeg,
  kDowlingClassical,
  kDowlingDeg,
  kDowlingFullyDeg,
  kBernoulliDeg,
  kBernoulli2Deg,
  kPolyBellDeg,
};

struct FamilyId {
  Family tag;
  std::optional<long> m;
  std::optional<long> k;
  std::optional<Lambda> lambda;

  static bool needs_m(Family f) { return f == Family::kDowlingClassical || f == Family::kDowlingDeg || f == Family::kDowlingFullyDeg; }
  static bool needs_k(Family f) { return f == Family::kPolyBellDeg; }
  static bool needs_lambda(Family f) { return f != Family::kBellClassical && f != Family::kDowlingClassical; }

  // Parameters present iff the family uses them.
  void validate() const {
    if (needs_m(tag) != m.has_value()) throw ParameterError(needs_m(tag) ? "family requires m" : "family takes no m");
    if (needs_k(tag) != k.has_value()) throw ParameterError(needs_k(tag) ? "family requires k" : "family takes no k");
    if (needs_lambda(tag) != lambda.has_value()) {
      throw ParameterError(needs_lambda(tag) ? "family requires lambda" : "family takes no lambda");
    }
  }
};

inline PolyX family_polynomial(const FamilyId& id, std::size_t n) {
  id.validate();
  switch (id.tag) {
    case Family::kBellClassical:
      return bell_polynomial(n);
    case Family::kBellPartialDeg:
      return partial_degenerate_bell(n, *id.lambda);
    case Family::kBellFullyDeg:
      return fully_degenerate_bell(n, *id.lambda);
    case Family::kDowlingClassical:
      return dowling_polynomial(n, *id.m);
    case Family::kDowlingDeg:
      return degenerate_dowling(n, *id.m, *id.lambda);
    case Family::kDowlingFullyDeg:
      return fully_degenerate_dowling(n, *id.m, *id.lambda);
    case Family::kBernoulliDeg:
      return degenerate_bernoulli(n, *id.lambda);
    case Family::kBernoulli2Deg:
      return degenerate_bernoulli2(n, *id.lambda);
    case Family::kPolyBellDeg:
      return degenerate_poly_bell(n, *id.k, *id.lambda);
  }
  throw ParameterError("unknown family");
}

// ---------------------------------------------------------------------------
// Dobinski-like series (the one floating-point surface)

struct DobinskiResult {
  double partial_sum;
  double reference;

  double relative_error() const {
    const double diff = std::fabs(partial_sum - reference);
    return reference == 0.0 ? diff : diff / std::fabs(reference);
  }
};

namespace detail {

// The series converges for lambda < 1/2 (term ratio -> lambda/(1-lambda)),
// and terminates when x/lambda is a nonnegative integer.
inline void check_dobinski_domain(const Rational& lambda, const Rational& x) {
  if (lambda.sign() <= 0 || lambda >= Rational(1)) {
    throw DomainError("dobinski: lambda must satisfy 0 < lambda < 1, got " + lambda.to_string());
  }
  const Rational ratio = x / lambda;
  const bool terminates = ratio.is_integer() && ratio.sign() >= 0;
  if (lambda >= Rational(1, 2) && !terminates) {
    throw DomainError("dobinski: series diverges for lambda >= 1/2 unless x/lambda is a nonnegative integer");
  }
}

}  // namespace detail

// Partial sums S_0, ..., S_K of
//   e_lambda^x(-1) sum_k (k)_{n,lambda}/k! (1/(1-lambda))^k (x)_{k,lambda},
// with e_lambda^x(-1) = (1 - lambda)^{x/lambda}.
inline std::vector<double> dobinski_partial_sums(std::size_t n, const Rational& lambda, const Rational& x,
                                                 std::size_t terms) {
  detail::check_dobinski_domain(lambda, x);
  const long double lam = lambda.to_double();
  const long double xv = x.to_double();
  const long double r = 1.0L / (1.0L - lam);
  const long double prefactor = std::pow(1.0L - lam, xv / lam);
  std::vector<double> out;
  out.reserve(terms + 1);
  long double coeff = 1.0L;  // (x)_{k,lambda} r^k / k!
  long double acc = 0.0L;
  for (std::size_t k = 0; k <= terms; ++k) {
    const auto kk = static_cast<long double>(k);
    long double falling_k = 1.0L;  // (k)_{n,lambda}
    for (std::size_t j = 0; j < n; ++j) falling_k *= kk - static_cast<long double>(j) * lam;
    acc += coeff * falling_k;
    out.push_back(static_cast<double>(prefactor * acc));
    coeff *= (xv - kk * lam) * r / (kk + 1.0L);
  }
  return out;
}

inline DobinskiResult dobinski_eval(std::size_t n, const Rational& lambda, const Rational& x, std::size_t terms) {
  const auto sums = dobinski_partial_sums(n, lambda, x, terms);
  const Rational exact = fully_degenerate_bell(n, Lambda(lambda))(x);
  return {sums.back(), exact.to_double()};
}

}  // namespace lumbral

#endif  // LUMBRAL_FAMILIES_HPP
