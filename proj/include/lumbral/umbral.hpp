#ifndef LUMBRAL_UMBRAL_HPP
#define LUMBRAL_UMBRAL_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lumbral/errors.hpp"
#include "lumbral/families.hpp"
#include "lumbral/kernels.hpp"
#include "lumbral/poly.hpp"
#include "lumbral/series.hpp"
#include "lumbral/triangle.hpp"

namespace lumbral {

// <f(t) | p(x)>_lambda: expand p = sum_n q_n (x)_{n,lambda} and return
// sum_n f[n] q_n, so that <f | (x)_{k,lambda}> = f[k].
inline Rational pair_functional(const Series& f, const PolyX& p, const Rational& lambda) {
  if (p.degree() > static_cast<long>(f.order_cap())) {
    throw OrderError("pair_functional: series truncated at " + std::to_string(f.order_cap()) +
                     " cannot pair with a degree-" + std::to_string(p.degree()) + " polynomial");
  }
  const auto q = to_lambda_falling_basis(p, lambda);
  Rational acc;
  for (std::size_t n = 0; n < q.size(); ++n) acc += f[n] * q[n];
  return acc;
}

// (t^k)_lambda: (x)_{n,lambda} -> (n)_k x^{n-k} for k <= n, else 0.  The result
// is expressed in the monomial basis.
inline PolyX apply_lambda_diff_op(std::size_t k, const PolyX& p, const Rational& lambda) {
  const auto q = to_lambda_falling_basis(p, lambda);
  PolyX out;
  for (std::size_t n = k; n < q.size(); ++n) {
    if (q[n].is_zero()) continue;
    out += PolyX::monomial(q[n] * falling(k)(Rational(static_cast<long>(n))), n - k);
  }
  return out;
}

// A pair (g, f) with o(g) = 0 and o(f) = 1, determining a lambda-Sheffer sequence.
class ShefferPair {
 public:
  ShefferPair(Series g, Series f, Lambda lambda) : g_(std::move(g)), f_(std::move(f)), lambda_(std::move(lambda)) {
    g_.check_same_cap(f_);
    if (g_[0].is_zero()) throw PairError("ShefferPair: g must have order 0");
    if (f_.order_cap() < 1 || !f_[0].is_zero() || f_[1].is_zero()) throw PairError("ShefferPair: f must have order 1");
  }

  const Series& g() const { return g_; }
  const Series& f() const { return f_; }
  const Lambda& lambda() const { return lambda_; }
  std::size_t order_cap() const { return g_.order_cap(); }

  ShefferPair truncated(std::size_t order_cap) const {
    return ShefferPair(truncate(g_, order_cap), truncate(f_, order_cap), lambda_);
  }

 private:
  Series g_;
  Series f_;
  Lambda lambda_;
};

// (1, t): the sequence (x)_{n,lambda}.
inline ShefferPair falling_pair(const Lambda& lambda, std::size_t order_cap) {
  return {Series::one(order_cap), Series::identity(order_cap), lambda};
}

// (1, log_lambda(1+t)): the fully degenerate Bell polynomials.
inline ShefferPair bell_pair(const Lambda& lambda, std::size_t order_cap) {
  return {Series::one(order_cap), lambda_log_series(lambda, order_cap), lambda};
}

// ((1 + m t)^{-1/m}, (1/m) log_{lambda/m}(1 + m t)): the fully degenerate
// Dowling polynomials.
inline ShefferPair dowling_pair(long m, const Lambda& lambda, std::size_t order_cap) {
  detail::require_positive_m(m);
  const Rational mr(m);
  const Series g = binomial_series(-mr.inverse(), mr, order_cap);
  const Series f = scale_argument(lambda_log_series(lambda.scaled(mr.inverse()), order_cap), mr) * mr.inverse();
  return {g, f, lambda};
}

// (1, (1/m) log_{lambda/m}(1 + m t)): the sequence m^n phi_{n,lambda/m}(x/m).
inline ShefferPair scaled_bell_pair(long m, const Lambda& lambda, std::size_t order_cap) {
  detail::require_positive_m(m);
  const Rational mr(m);
  return {Series::one(order_cap),
          scale_argument(lambda_log_series(lambda.scaled(mr.inverse()), order_cap), mr) * mr.inverse(), lambda};
}

// ((e_lambda(t) - 1)/t, t): the degenerate Bernoulli polynomials.
inline ShefferPair bernoulli_pair(const Lambda& lambda, std::size_t order_cap) {
  return {detail::over_t([&](std::size_t cap) { return degenerate_exp_minus_one(lambda, cap); }, order_cap),
          Series::identity(order_cap), lambda};
}

// (t/(e_lambda(t) - 1), e_lambda(t) - 1): degenerate Bernoulli polynomials of the second kind.
inline ShefferPair bernoulli2_pair(const Lambda& lambda, std::size_t order_cap) {
  return {degenerate_bernoulli_numbers(order_cap, lambda), degenerate_exp_minus_one(lambda, order_cap), lambda};
}

// ((e_lambda(t) - 1)/Ei_{k,lambda}(log_lambda(1+t)), t): degenerate poly-Bell polynomials.
inline ShefferPair poly_bell_pair(long k, const Lambda& lambda, std::size_t order_cap) {
  return {series_reciprocal(degenerate_poly_bernoulli_numbers(order_cap, k, lambda)), Series::identity(order_cap),
          lambda};
}

struct LambdaShefferSequence {
  ShefferPair pair;
  std::vector<PolyX> polys;

  std::size_t n_max() const { return polys.size() - 1; }
};

// <g f^k | s_n>_lambda = n! delta_{n,k} for all n, k <= n_max.
inline bool is_biorthogonal(const LambdaShefferSequence& seq) {
  const std::size_t n_max = seq.n_max();
  const ShefferPair p = seq.pair.truncated(std::max<std::size_t>(n_max, 1));
  Series probe = p.g();
  for (std::size_t k = 0; k <= n_max; ++k) {
    if (k > 0) probe = series_mul(probe, p.f());
    for (std::size_t n = 0; n <= n_max; ++n) {
      const Rational expected = n == k ? Rational::factorial(n) : Rational(0);
      if (pair_functional(probe, seq.polys[n], p.lambda().value()) != expected) return false;
    }
  }
  return true;
}

// s_{n,lambda}(x) = [t^n/n!] (1/g(fbar(t))) e_lambda^x(fbar(t)).
inline LambdaShefferSequence sheffer_generate(const ShefferPair& pair, std::size_t n_max) {
  if (n_max > pair.order_cap()) {
    throw OrderError("sheffer_generate: n_max " + std::to_string(n_max) + " exceeds order cap " +
                     std::to_string(pair.order_cap()));
  }
  // f needs order cap >= 1 to be invertible, so n_max = 0 is computed at 1 and cut back
  const std::size_t cap = std::max<std::size_t>(n_max, 1);
  const ShefferPair p = pair.truncated(cap);
  const Series fbar = series_comp_inverse(p.f());
  const Series scale = series_reciprocal(series_compose(p.g(), fbar));
  const PolySeries gen = series_mul(scale, series_compose(degenerate_exp(p.lambda(), cap), fbar));
  auto polys = gen.coeffs();
  polys.resize(n_max + 1);
  LambdaShefferSequence seq{pair, std::move(polys)};
  if (!is_biorthogonal(seq)) throw Error("sheffer_generate: biorthogonality check failed");
  return seq;
}

// c_{n,k} with s_n = sum_k c_{n,k} r_k, where s ~ (g, f) = source and
// r ~ (h, l) = target:
//   c_{n,k} = [t^n/n!] (h(fbar)/g(fbar)) l(fbar)^k / k!.
inline Triangle connection_coefficients(const ShefferPair& source, const ShefferPair& target, std::size_t n_max) {
  if (!(source.lambda() == target.lambda())) throw ParameterError("connection_coefficients: lambda mismatch");
  if (n_max > source.order_cap() || n_max > target.order_cap()) {
    throw OrderError("connection_coefficients: n_max exceeds an order cap");
  }
  const std::size_t cap = std::max<std::size_t>(n_max, 1);
  const ShefferPair s = source.truncated(cap);
  const ShefferPair r = target.truncated(cap);
  const Series fbar = series_comp_inverse(s.f());
  const Series base = series_divide(series_compose(r.g(), fbar), series_compose(s.g(), fbar));
  const Series step = series_compose(r.f(), fbar);
  const Triangle full = detail::power_triangle(base, step);
  return cap == n_max ? full : detail::triangle_from_rows(n_max, [&](std::size_t n) { return full.row(n); });
}

// C_k = (1/k!) <h(t) l(t)^k | p(x)>_lambda for target ~ (h, l), so that
// p = sum_k C_k r_k.
inline std::vector<Rational> expand_in_basis(const PolyX& p, const ShefferPair& target) {
  if (p.is_zero()) return {};
  const auto deg = static_cast<std::size_t>(p.degree());
  if (deg > target.order_cap()) throw OrderError("expand_in_basis: degree exceeds order cap");
  const ShefferPair r = target.truncated(std::max<std::size_t>(deg, 1));
  std::vector<Rational> out(deg + 1);
  Series probe = r.g();
  Rational k_fact(1);
  for (std::size_t k = 0; k <= deg; ++k) {
    if (k > 0) {
      probe = series_mul(probe, r.f());
      k_fact *= Rational(static_cast<long>(k));
    }
    out[k] = pair_functional(probe, p, r.lambda().value()) / k_fact;
  }
  return out;
}

// sum_k coeffs[k] basis[k].
inline PolyX reconstruct(const std::vector<Rational>& coeffs, const std::vector<PolyX>& basis) {
  PolyX out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_zero()) out += basis.at(k) * coeffs[k];
  }
  return out;
}

}  // namespace lumbral

#endif  // LUMBRAL_UMBRAL_HPP
