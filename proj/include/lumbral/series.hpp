#ifndef LUMBRAL_SERIES_HPP
#define LUMBRAL_SERIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lumbral/errors.hpp"
#include "lumbral/poly.hpp"
#include "lumbral/rational.hpp"

namespace lumbral {

// Truncated exponential generating function sum_{n<=N} a[n] t^n/n!.
// C is Rational for numeric series or PolyX for series whose coefficients
// depend on a symbolic x.  Every binary operation requires equal N.
template <typename C>
class EgfSeries {
 public:
  using coeff_type = C;

  explicit EgfSeries(std::size_t order_cap) : a_(order_cap + 1) {}

  EgfSeries(std::size_t order_cap, std::vector<C> a) : a_(std::move(a)) {
    if (a_.size() > order_cap + 1) {
      throw DimensionError("EgfSeries: " + std::to_string(a_.size()) + " coefficients exceed order cap " +
                           std::to_string(order_cap));
    }
    a_.resize(order_cap + 1);
  }

  static EgfSeries constant(std::size_t order_cap, C c) {
    EgfSeries s(order_cap);
    s.a_[0] = std::move(c);
    return s;
  }
  static EgfSeries one(std::size_t order_cap) { return constant(order_cap, C(Rational(1))); }

  // The series t (a[1] = 1); degenerates to 0 when N = 0.
  static EgfSeries identity(std::size_t order_cap) {
    EgfSeries s(order_cap);
    if (order_cap >= 1) s.a_[1] = C(Rational(1));
    return s;
  }

  std::size_t order_cap() const { return a_.size() - 1; }
  const C& operator[](std::size_t n) const { return a_.at(n); }
  const std::vector<C>& coeffs() const { return a_; }

  // Smallest n with a[n] != 0; empty for the zero series.
  std::optional<std::size_t> order() const {
    for (std::size_t n = 0; n < a_.size(); ++n) {
      if (!a_[n].is_zero()) return n;
    }
    return std::nullopt;
  }

  EgfSeries with_coeff(std::size_t n, C c) const {
    EgfSeries out = *this;
    out.a_.at(n) = std::move(c);
    return out;
  }

  EgfSeries operator-() const {
    EgfSeries out = *this;
    for (auto& c : out.a_) c = -c;
    return out;
  }
  EgfSeries& operator+=(const EgfSeries& o) {
    check_same_cap(o);
    for (std::size_t n = 0; n < a_.size(); ++n) a_[n] += o.a_[n];
    return *this;
  }
  EgfSeries& operator-=(const EgfSeries& o) {
    check_same_cap(o);
    for (std::size_t n = 0; n < a_.size(); ++n) a_[n] -= o.a_[n];
    return *this;
  }
  EgfSeries& operator*=(const Rational& s) {
    for (auto& c : a_) c *= s;
    return *this;
  }

  friend EgfSeries operator+(EgfSeries a, const EgfSeries& b) { return a += b; }
  friend EgfSeries operator-(EgfSeries a, const EgfSeries& b) { return a -= b; }
  friend EgfSeries operator*(EgfSeries a, const Rational& s) { return a *= s; }
  friend EgfSeries operator*(const Rational& s, EgfSeries a) { return a *= s; }

  friend bool operator==(const EgfSeries& a, const EgfSeries& b) { return a.a_ == b.a_; }

  void check_same_cap(const EgfSeries& o) const {
    if (o.order_cap() != order_cap()) {
      throw DimensionError("EgfSeries: order caps differ (" + std::to_string(order_cap()) + " vs " +
                           std::to_string(o.order_cap()) + ")");
    }
  }

 private:
  std::vector<C> a_;
};

using Series = EgfSeries<Rational>;
using PolySeries = EgfSeries<PolyX>;

namespace detail {

// Row n of Pascal's triangle.
inline std::vector<Rational> binomial_row(std::size_t n) {
  std::vector<Rational> row(n + 1);
  for (std::size_t j = 0; j <= n; ++j) row[j] = Rational::binomial(n, j);
  return row;
}

inline std::vector<Rational> factorials(std::size_t n) {
  std::vector<Rational> out(n + 1);
  out[0] = Rational(1);
  for (std::size_t i = 1; i <= n; ++i) out[i] = out[i - 1] * Rational(static_cast<long>(i));
  return out;
}

// Truncated product of ordinary power series coefficient vectors.
inline std::vector<Rational> ordinary_mul(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                          std::size_t len) {
  std::vector<Rational> out(len);
  for (std::size_t i = 0; i < a.size() && i < len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < len; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace detail

// Binomial convolution: (f g)[n] = sum_j C(n,j) f[j] g[n-j].
template <typename A, typename B>
auto series_mul(const EgfSeries<A>& f, const EgfSeries<B>& g) {
  using R = std::remove_cvref_t<decltype(std::declval<A>() * std::declval<B>())>;
  if (f.order_cap() != g.order_cap()) {
    throw DimensionError("series_mul: order caps differ (" + std::to_string(f.order_cap()) + " vs " +
                         std::to_string(g.order_cap()) + ")");
  }
  const std::size_t cap = f.order_cap();
  std::vector<R> out(cap + 1);
  for (std::size_t n = 0; n <= cap; ++n) {
    const auto binom = detail::binomial_row(n);
    R acc{};
    for (std::size_t j = 0; j <= n; ++j) {
      if (f[j].is_zero() || g[n - j].is_zero()) continue;
      acc += (f[j] * g[n - j]) * binom[j];
    }
    out[n] = std::move(acc);
  }
  return EgfSeries<R>(cap, std::move(out));
}

template <typename C>
EgfSeries<C> operator*(const EgfSeries<C>& f, const EgfSeries<C>& g) {
  return series_mul(f, g);
}

// f^k by repeated squaring; f^0 = 1.
template <typename C>
EgfSeries<C> series_pow(const EgfSeries<C>& f, unsigned long k) {
  EgfSeries<C> result = EgfSeries<C>::one(f.order_cap());
  EgfSeries<C> base = f;
  while (k > 0) {
    if (k & 1UL) result = series_mul(result, base);
    k >>= 1;
    if (k > 0) base = series_mul(base, base);
  }
  return result;
}

// f(g(t)), evaluated by Horner's scheme on sum_k f[k]/k! g^k in the truncated
// ring.  Requires o(g) >= 1.
template <typename C>
EgfSeries<C> series_compose(const EgfSeries<C>& f, const Series& g) {
  if (f.order_cap() != g.order_cap()) {
    throw DimensionError("series_compose: order caps differ (" + std::to_string(f.order_cap()) + " vs " +
                         std::to_string(g.order_cap()) + ")");
  }
  if (!g[0].is_zero()) throw OrderError("series_compose: inner series has nonzero constant term");
  const std::size_t cap = f.order_cap();
  const auto fact = detail::factorials(cap);
  EgfSeries<C> acc(cap);
  for (std::size_t k = cap + 1; k-- > 0;) {
    acc = series_mul(acc, g);
    acc = acc.with_coeff(0, acc[0] + f[k] / fact[k]);
  }
  return acc;
}

// The series 1/f, for f[0] != 0.
inline Series series_reciprocal(const Series& f) {
  if (f[0].is_zero()) throw NotInvertibleError("series_reciprocal: zero constant term");
  const std::size_t cap = f.order_cap();
  const Rational inv0 = f[0].inverse();
  std::vector<Rational> b(cap + 1);
  b[0] = inv0;
  for (std::size_t n = 1; n <= cap; ++n) {
    const auto binom = detail::binomial_row(n);
    Rational acc;
    for (std::size_t j = 1; j <= n; ++j) {
      if (f[j].is_zero()) continue;
      acc += binom[j] * f[j] * b[n - j];
    }
    b[n] = -acc * inv0;
  }
  return Series(cap, std::move(b));
}

template <typename C>
EgfSeries<C> series_divide(const EgfSeries<C>& f, const Series& g) {
  return series_mul(f, series_reciprocal(g));
}

// f(t)/t for f[0] = 0; the result has order cap N-1.
template <typename C>
EgfSeries<C> divide_by_t(const EgfSeries<C>& f) {
  if (!f[0].is_zero()) throw OrderError("divide_by_t: nonzero constant term");
  if (f.order_cap() == 0) throw OrderError("divide_by_t: order cap 0");
  const std::size_t cap = f.order_cap() - 1;
  std::vector<C> out(cap + 1);
  for (std::size_t n = 0; n <= cap; ++n) out[n] = f[n + 1] / Rational(static_cast<long>(n + 1));
  return EgfSeries<C>(cap, std::move(out));
}

template <typename C>
EgfSeries<C> truncate(const EgfSeries<C>& f, std::size_t order_cap) {
  if (order_cap > f.order_cap()) {
    throw OrderError("truncate: cannot extend order cap " + std::to_string(f.order_cap()) + " to " +
                     std::to_string(order_cap));
  }
  return EgfSeries<C>(order_cap, std::vector<C>(f.coeffs().begin(), f.coeffs().begin() + order_cap + 1));
}

// f(c t).
template <typename C>
EgfSeries<C> scale_argument(const EgfSeries<C>& f, const Rational& c) {
  std::vector<C> out = f.coeffs();
  Rational power(1);
  for (auto& v : out) {
    v *= power;
    power *= c;
  }
  return EgfSeries<C>(f.order_cap(), std::move(out));
}

// Compositional inverse by Lagrange inversion: with H = t/f(t) in ordinary
// coefficients, [t^n] fbar = (1/n) [t^(n-1)] H^n.
inline Series series_comp_inverse(const Series& f) {
  const std::size_t cap = f.order_cap();
  if (cap == 0) return Series(0);
  if (!f[0].is_zero() || f[1].is_zero()) {
    throw NotInvertibleError("series_comp_inverse: series must have order exactly 1");
  }
  const auto fact = detail::factorials(cap + 1);
  // Ordinary coefficients of f(t)/t, length cap.
  std::vector<Rational> q(cap);
  for (std::size_t n = 0; n < cap; ++n) q[n] = f[n + 1] / fact[n + 1];
  // H = 1/q.
  std::vector<Rational> h(cap);
  const Rational inv0 = q[0].inverse();
  h[0] = inv0;
  for (std::size_t n = 1; n < cap; ++n) {
    Rational acc;
    for (std::size_t j = 1; j <= n; ++j) acc += q[j] * h[n - j];
    h[n] = -acc * inv0;
  }
  std::vector<Rational> out(cap + 1);
  std::vector<Rational> power = h;
  for (std::size_t n = 1; n <= cap; ++n) {
    out[n] = power[n - 1] / Rational(static_cast<long>(n)) * fact[n];
    if (n < cap) power = detail::ordinary_mul(power, h, cap);
  }
  return Series(cap, std::move(out));
}

// (1 + c t)^alpha: a[n] = alpha (alpha-1) ... (alpha-n+1) c^n.
inline Series binomial_series(const Rational& alpha, const Rational& c, std::size_t order_cap) {
  std::vector<Rational> out(order_cap + 1);
  Rational falling(1);
  Rational power(1);
  for (std::size_t n = 0; n <= order_cap; ++n) {
    out[n] = falling * power;
    falling *= alpha - Rational(static_cast<long>(n));
    power *= c;
  }
  return Series(order_cap, std::move(out));
}

// Lifts a numeric series to one with (constant) polynomial coefficients.
inline PolySeries to_poly_series(const Series& f) {
  std::vector<PolyX> out;
  out.reserve(f.order_cap() + 1);
  for (const auto& c : f.coeffs()) out.emplace_back(c);
  return PolySeries(f.order_cap(), std::move(out));
}

}  // namespace lumbral

#endif  // LUMBRAL_SERIES_HPP
