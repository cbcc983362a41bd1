#ifndef LUMBRAL_KERNELS_HPP
#define LUMBRAL_KERNELS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "lumbral/errors.hpp"
#include "lumbral/poly.hpp"
#include "lumbral/rational.hpp"
#include "lumbral/series.hpp"

namespace lumbral {

// The degeneracy parameter.  Either a nonzero rational, or the classical
// limit lambda -> 0, which has to be requested explicitly: the degenerate
// kernels are only defined for nonzero lambda, and the limit mode computes
// the classical kernels (exp, log) directly instead of through formulas
// containing 1/lambda.
class Lambda {
 public:
  explicit Lambda(Rational value) : value_(std::move(value)) {
    if (value_.is_zero()) throw DomainError("lambda = 0 requires Lambda::classical_limit()");
  }

  static Lambda classical_limit() { return Lambda(); }

  // Maps 0 to the classical limit.
  static Lambda from_rational(const Rational& value) {
    return value.is_zero() ? classical_limit() : Lambda(value);
  }

  bool is_limit() const { return value_.is_zero(); }

  // 0 in limit mode.
  const Rational& value() const { return value_; }

  Lambda scaled(const Rational& factor) const {
    if (is_limit()) return *this;
    return Lambda(value_ * factor);
  }

  std::string to_string() const { return value_.to_string(); }

  friend bool operator==(const Lambda& a, const Lambda& b) { return a.value_ == b.value_; }

 private:
  Lambda() = default;
  Rational value_;
};

// (x)_{n,lambda} = x (x - lambda) ... (x - (n-1) lambda); lambda = 0 gives x^n.
inline PolyX lambda_falling(std::size_t n, const Rational& lambda) {
  PolyX out(Rational(1));
  for (std::size_t j = 0; j < n; ++j) {
    out *= PolyX({-(lambda * Rational(static_cast<long>(j))), Rational(1)});
  }
  return out;
}

// (x)_{0..n_max, lambda}, sharing the partial products.
inline std::vector<PolyX> lambda_falling_table(std::size_t n_max, const Rational& lambda) {
  std::vector<PolyX> out;
  out.reserve(n_max + 1);
  out.emplace_back(Rational(1));
  for (std::size_t j = 1; j <= n_max; ++j) {
    out.push_back(out.back() * PolyX({-(lambda * Rational(static_cast<long>(j - 1))), Rational(1)}));
  }
  return out;
}

// Classical falling factorial (x)_n = x (x-1) ... (x-n+1).
inline PolyX falling(std::size_t n) { return lambda_falling(n, Rational(1)); }

// (a)_{n,lambda} for a rational argument.
inline Rational lambda_falling_value(const Rational& a, std::size_t n, const Rational& lambda) {
  Rational out(1);
  for (std::size_t j = 0; j < n; ++j) out *= a - lambda * Rational(static_cast<long>(j));
  return out;
}

// Coefficients q with p(x) = sum_n q[n] (x)_{n,lambda}.  The basis is monic
// and degree-graded, so this is back-substitution from the top degree.
inline std::vector<Rational> to_lambda_falling_basis(const PolyX& p, const Rational& lambda) {
  if (p.is_zero()) return {};
  const auto deg = static_cast<std::size_t>(p.degree());
  const auto basis = lambda_falling_table(deg, lambda);
  std::vector<Rational> q(deg + 1);
  PolyX rest = p;
  for (std::size_t d = deg + 1; d-- > 0;) {
    q[d] = rest.coeff(d);
    if (!q[d].is_zero()) rest -= basis[d] * q[d];
  }
  return q;
}

inline PolyX from_lambda_falling_basis(const std::vector<Rational>& q, const Rational& lambda) {
  if (q.empty()) return {};
  const auto basis = lambda_falling_table(q.size() - 1, lambda);
  PolyX out;
  for (std::size_t n = 0; n < q.size(); ++n) {
    if (!q[n].is_zero()) out += basis[n] * q[n];
  }
  return out;
}

// e_lambda^a(t) = sum_n (a)_{n,lambda} t^n/n! for a rational exponent a.
// In limit mode this is exp(a t).
inline Series degenerate_exp(const Rational& a, const Lambda& lambda, std::size_t order_cap) {
  std::vector<Rational> out(order_cap + 1);
  for (std::size_t n = 0; n <= order_cap; ++n) out[n] = lambda_falling_value(a, n, lambda.value());
  return Series(order_cap, std::move(out));
}

// e_lambda^x(t) with symbolic x: a[n] = (x)_{n,lambda}.  In limit mode a[n] = x^n.
inline PolySeries degenerate_exp(const Lambda& lambda, std::size_t order_cap) {
  return PolySeries(order_cap, lambda_falling_table(order_cap, lambda.value()));
}

// e^{x t} with symbolic x, independent of lambda.
inline PolySeries classical_exp_symbolic(std::size_t order_cap) {
  return degenerate_exp(Lambda::classical_limit(), order_cap);
}

// e_lambda(t) - 1.
inline Series degenerate_exp_minus_one(const Lambda& lambda, std::size_t order_cap) {
  return degenerate_exp(Rational(1), lambda, order_cap).with_coeff(0, Rational(0));
}

// log_lambda(1 + t), the compositional inverse of e_lambda(t) - 1:
// a[n] = lambda^{n-1} (1)_{n,1/lambda} = prod_{j=1}^{n-1} (lambda - j).
// In limit mode a[n] = (-1)^{n-1} (n-1)!, the classical log(1 + t).
inline Series lambda_log_series(const Lambda& lambda, std::size_t order_cap) {
  std::vector<Rational> out(order_cap + 1);
  if (order_cap == 0) return Series(0, std::move(out));
  if (lambda.is_limit()) {
    Rational v(1);
    for (std::size_t n = 1; n <= order_cap; ++n) {
      out[n] = v;
      v *= -Rational(static_cast<long>(n));
    }
    return Series(order_cap, std::move(out));
  }
  const Rational& lam = lambda.value();
  const Rational inv = lam.inverse();
  Rational power(1);
  for (std::size_t n = 1; n <= order_cap; ++n) {
    out[n] = power * lambda_falling_value(Rational(1), n, inv);
    power *= lam;
  }
  return Series(order_cap, std::move(out));
}

}  // namespace lumbral

#endif  // LUMBRAL_KERNELS_HPP
