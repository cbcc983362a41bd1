#ifndef LUMBRAL_CLOSED_FORMS_HPP
#define LUMBRAL_CLOSED_FORMS_HPP

// Closed-form expansion coefficients for the basis-change identities between
// the fully degenerate Bell, fully degenerate Dowling, degenerate Bernoulli
// and poly-Bell families.  Each evaluator works from number tables (Stirling,
// Whitney, Bernoulli numbers) only and never touches the umbral engine, so
// comparing the two is a genuine cross-check.

#include <cstddef>
#include <vector>

#include "lumbral/kernels.hpp"
#include "lumbral/poly.hpp"
#include "lumbral/rational.hpp"
#include "lumbral/series.hpp"
#include "lumbral/triangle.hpp"

namespace lumbral::closed_form {

namespace detail {

inline Rational sign(std::size_t e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }
inline Rational C(std::size_t n, std::size_t k) { return Rational::binomial(n, k); }

}  // namespace detail

// beta_{n,lambda}(x) = sum_k C_k phi_{k,lambda}(x),
//   C_k = sum_l C(n,l) beta_{n-l,lambda} S_{1,lambda}(l,k).
inline std::vector<Rational> bernoulli_in_bell(std::size_t n, const Series& beta, const Triangle& s1) {
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t l = k; l <= n; ++l) out[k] += detail::C(n, l) * beta[n - l] * s1(l, k);
  }
  return out;
}

// (x)_{n,lambda} = sum_k S_{1,lambda}(n,k) phi_{k,lambda}(x).
inline std::vector<Rational> falling_in_bell(std::size_t n, const Triangle& s1) { return s1.row(n); }

// B^{(k)}_{n,lambda}(x) = sum_j C_j phi_{j,lambda}(x),
//   C_j = sum_{l=j}^{n} C(n,l) S_{1,lambda}(l,j) B^{(k)}_{n-l,lambda}.
// poly_bernoulli holds the numbers B^{(k)}_{i,lambda}.
inline std::vector<Rational> poly_bell_in_bell(std::size_t n, const Series& poly_bernoulli, const Triangle& s1) {
  std::vector<Rational> out(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t l = j; l <= n; ++l) out[j] += detail::C(n, l) * s1(l, j) * poly_bernoulli[n - l];
  }
  return out;
}

// phi_{n,lambda}(x) = sum_k C_k b_{k,lambda}(x) with
//   C_0 = sum_l beta_{l,lambda} S_{2,lambda}(n,l),
//   C_k = (1/k!) sum_{j<n} sum_{l<k} C(n,j) C(k-1,l) (1)_{n-j,lambda} (-1)^{k-1-l} phi_{j,lambda}(l).
inline std::vector<Rational> bell_in_bernoulli2(std::size_t n, const Series& beta, const Triangle& s2,
                                                const std::vector<PolyX>& phi, const Rational& lambda) {
  std::vector<Rational> out(n + 1);
  for (std::size_t l = 0; l <= n; ++l) out[0] += beta[l] * s2(n, l);
  Rational k_fact(1);
  for (std::size_t k = 1; k <= n; ++k) {
    k_fact *= Rational(static_cast<long>(k));
    Rational acc;
    for (std::size_t j = 0; j < n; ++j) {
      const Rational outer = detail::C(n, j) * lambda_falling_value(Rational(1), n - j, lambda);
      for (std::size_t l = 0; l < k; ++l) {
        acc += outer * detail::C(k - 1, l) * detail::sign(k - 1 - l) * phi.at(j)(Rational(static_cast<long>(l)));
      }
    }
    out[k] = acc / k_fact;
  }
  return out;
}

// beta_{n,lambda}(x) = sum_k C_k d_{m,lambda}(k,x),
//   C_k = sum_{l=0}^{n} sum_{j=k}^{l} sum_{i=0}^{l-j} C(n,l) C(l,j) beta_{n-l,lambda}
//         S_{1,lambda/m}(j,k) m^{l-k-i} (-1)^i S_1(l-j,i).
inline std::vector<Rational> bernoulli_in_dowling(std::size_t n, long m, const Series& beta,
                                                  const Triangle& s1_scaled, const Triangle& s1_classical) {
  const Rational mr(m);
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational acc;
    for (std::size_t l = k; l <= n; ++l) {
      for (std::size_t j = k; j <= l; ++j) {
        const Rational head = detail::C(n, l) * detail::C(l, j) * beta[n - l] * s1_scaled(j, k);
        if (head.is_zero()) continue;
        for (std::size_t i = 0; i <= l - j; ++i) {
          acc += head * mr.pow(static_cast<long>(l) - static_cast<long>(k) - static_cast<long>(i)) * detail::sign(i) *
                 s1_classical(l - j, i);
        }
      }
    }
    out[k] = std::move(acc);
  }
  return out;
}

// (x)_{n,lambda} = sum_k C_k d_{m,lambda}(k,x),
//   C_k = sum_{l=k}^{n} sum_{i=0}^{n-l} C(n,l) S_{1,lambda/m}(l,k) S_1(n-l,i) m^{n-k-i} (-1)^i.
inline std::vector<Rational> falling_in_dowling(std::size_t n, long m, const Triangle& s1_scaled,
                                                const Triangle& s1_classical) {
  const Rational mr(m);
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational acc;
    for (std::size_t l = k; l <= n; ++l) {
      const Rational head = detail::C(n, l) * s1_scaled(l, k);
      if (head.is_zero()) continue;
      for (std::size_t i = 0; i <= n - l; ++i) {
        acc += head * s1_classical(n - l, i) *
               mr.pow(static_cast<long>(n) - static_cast<long>(k) - static_cast<long>(i)) * detail::sign(i);
      }
    }
    out[k] = std::move(acc);
  }
  return out;
}

// d_{m,lambda}(n,x) = sum_k C_k phi_{k,lambda}(x),
//   C_k = sum_{j=k}^{n} S_{1,lambda}(j,k) W_{m,lambda}(n,j).
inline std::vector<Rational> dowling_in_bell(std::size_t n, const Triangle& s1, const Triangle& w) {
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t j = k; j <= n; ++j) out[k] += s1(j, k) * w(n, j);
  }
  return out;
}

// m^n phi_{n,lambda/m}(x/m) = sum_k C(n,k) (-1)_{n-k,lambda} d_{m,lambda}(k,x).
inline std::vector<Rational> scaled_bell_in_dowling(std::size_t n, const Rational& lambda) {
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = detail::C(n, k) * lambda_falling_value(Rational(-1), n - k, lambda);
  return out;
}

}  // namespace lumbral::closed_form

#endif  // LUMBRAL_CLOSED_FORMS_HPP
