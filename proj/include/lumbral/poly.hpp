#ifndef LUMBRAL_POLY_HPP
#define LUMBRAL_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "lumbral/rational.hpp"

namespace lumbral {

// Dense univariate polynomial in x over the rationals.
// coeffs()[i] is the coefficient of x^i; no trailing zeros, so the zero
// polynomial has an empty coefficient list.
class PolyX {
 public:
  PolyX() = default;
  PolyX(Rational c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
  }
  explicit PolyX(long c) : PolyX(Rational(c)) {}
  explicit PolyX(int c) : PolyX(Rational(c)) {}
  explicit PolyX(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  PolyX(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

  static PolyX x() { return PolyX({Rational(0), Rational(1)}); }

  static PolyX monomial(Rational c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = std::move(c);
    return PolyX(std::move(v));
  }

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }

  Rational leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

  Rational operator()(const Rational& at) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  // p(q(x)) by Horner's rule.
  PolyX compose(const PolyX& q) const {
    PolyX acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + PolyX(*it);
    return acc;
  }

  // p(a*x + b).
  PolyX substitute_affine(const Rational& a, const Rational& b) const {
    return compose(PolyX({b, a}));
  }

  PolyX operator-() const {
    PolyX out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  PolyX& operator+=(const PolyX& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  PolyX& operator-=(const PolyX& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  PolyX& operator*=(const Rational& s) {
    if (s.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  PolyX& operator/=(const Rational& s) { return *this *= s.inverse(); }

  friend PolyX operator+(PolyX a, const PolyX& b) { return a += b; }
  friend PolyX operator-(PolyX a, const PolyX& b) { return a -= b; }
  friend PolyX operator*(PolyX a, const Rational& s) { return a *= s; }
  friend PolyX operator*(const Rational& s, PolyX a) { return a *= s; }
  friend PolyX operator/(PolyX a, const Rational& s) { return a /= s; }

  friend PolyX operator*(const PolyX& a, const PolyX& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return PolyX(std::move(out));
  }
  PolyX& operator*=(const PolyX& o) { return *this = *this * o; }

  friend bool operator==(const PolyX& a, const PolyX& b) { return a.coeffs_ == b.coeffs_; }

  // Plain-text rendering, highest degree first: "x^2 - 1/2*x + 3".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
      const Rational& c = coeffs_[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      const bool neg = c.sign() < 0;
      const Rational mag = neg ? -c : c;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (i == 0) {
        out += mag.to_string();
        continue;
      }
      if (!mag.is_one()) out += mag.to_string() + "*";
      out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const PolyX& p) { return os << p.to_string(); }

}  // namespace lumbral

#endif  // LUMBRAL_POLY_HPP
