#ifndef LUMBRAL_TESTS_ORACLES_HPP
#define LUMBRAL_TESTS_ORACLES_HPP

// Independent reference computations.  Nothing here calls the library's
// series, triangle or engine code; only Rational and PolyX are shared, as
// plain arithmetic carriers.

#include <cstddef>
#include <functional>
#include <random>
#include <vector>

#include "lumbral/poly.hpp"
#include "lumbral/rational.hpp"

namespace oracle {

using lumbral::PolyX;
using lumbral::Rational;
using Table = std::vector<std::vector<Rational>>;

inline Rational binom(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  Rational r(1);
  for (long i = 1; i <= k; ++i) r = r * Rational(n - k + i) / Rational(i);
  return r;
}

inline Rational fact(long n) {
  Rational r(1);
  for (long i = 2; i <= n; ++i) r *= Rational(i);
  return r;
}

// Counts set partitions of {0..n-1} by number of blocks, by growing a list of
// blocks element by element (not restricted-growth strings).
inline std::vector<long> partitions_by_blocks(std::size_t n) {
  std::vector<long> counts(n + 1, 0);
  std::vector<std::vector<std::size_t>> blocks;
  std::function<void(std::size_t)> place = [&](std::size_t e) {
    if (e == n) {
      ++counts[blocks.size()];
      return;
    }
    for (auto& b : blocks) {
      b.push_back(e);
      place(e + 1);
      b.pop_back();
    }
    blocks.push_back({e});
    place(e + 1);
    blocks.pop_back();
  };
  place(0);
  return counts;
}

inline long bell_number(std::size_t n) {
  long s = 0;
  for (long c : partitions_by_blocks(n)) s += c;
  return s;
}

// (a)_{n,lambda} = a (a - lambda) ... (a - (n-1) lambda).
inline Rational lfall(const Rational& a, std::size_t n, const Rational& lambda) {
  Rational r(1);
  for (std::size_t j = 0; j < n; ++j) r *= a - Rational(static_cast<long>(j)) * lambda;
  return r;
}

inline PolyX lfall_poly(std::size_t n, const Rational& lambda) {
  PolyX p(Rational(1));
  for (std::size_t j = 0; j < n; ++j) p = p * PolyX({-(Rational(static_cast<long>(j)) * lambda), Rational(1)});
  return p;
}

// Signed S1 via s(n+1,k) = s(n,k-1) - n s(n,k).
inline Table stirling1(std::size_t n_max) {
  Table t(n_max + 1, std::vector<Rational>(n_max + 1));
  t[0][0] = Rational(1);
  for (std::size_t n = 0; n < n_max; ++n) {
    for (std::size_t k = 0; k <= n + 1; ++k) {
      Rational v = k > 0 ? t[n][k - 1] : Rational(0);
      if (k <= n) v -= Rational(static_cast<long>(n)) * t[n][k];
      t[n + 1][k] = v;
    }
  }
  return t;
}

// S2 from brute-force partition counts.
inline Table stirling2(std::size_t n_max) {
  Table t(n_max + 1, std::vector<Rational>(n_max + 1));
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto c = partitions_by_blocks(n);
    for (std::size_t k = 0; k <= n; ++k) t[n][k] = Rational(c[k]);
  }
  return t;
}

// S_{2,lambda}(n+1,k) = S_{2,lambda}(n,k-1) + (k - n lambda) S_{2,lambda}(n,k).
inline Table deg_stirling2(std::size_t n_max, const Rational& lambda) {
  Table t(n_max + 1, std::vector<Rational>(n_max + 1));
  t[0][0] = Rational(1);
  for (std::size_t n = 0; n < n_max; ++n) {
    for (std::size_t k = 0; k <= n + 1; ++k) {
      Rational v = k > 0 ? t[n][k - 1] : Rational(0);
      if (k <= n) v += (Rational(static_cast<long>(k)) - Rational(static_cast<long>(n)) * lambda) * t[n][k];
      t[n + 1][k] = v;
    }
  }
  return t;
}

// S_{1,lambda}(n+1,k) = S_{1,lambda}(n,k-1) + (k lambda - n) S_{1,lambda}(n,k).
inline Table deg_stirling1(std::size_t n_max, const Rational& lambda) {
  Table t(n_max + 1, std::vector<Rational>(n_max + 1));
  t[0][0] = Rational(1);
  for (std::size_t n = 0; n < n_max; ++n) {
    for (std::size_t k = 0; k <= n + 1; ++k) {
      Rational v = k > 0 ? t[n][k - 1] : Rational(0);
      if (k <= n) v += (Rational(static_cast<long>(k)) * lambda - Rational(static_cast<long>(n))) * t[n][k];
      t[n + 1][k] = v;
    }
  }
  return t;
}

// W^{(r)}_m(n,k) = (1/(m^k k!)) sum_j (-1)^{k-j} C(k,j) (m j + r)^n.
inline Rational r_whitney2(long n, long k, long m, long r) {
  Rational s;
  for (long j = 0; j <= k; ++j) {
    const Rational term = binom(k, j) * Rational(m * j + r).pow(n);
    s += (k - j) % 2 ? -term : term;
  }
  return s / (Rational(m).pow(k) * fact(k));
}

// Ordinary power series helpers (coefficients of t^n, not t^n/n!).
using Ogf = std::vector<Rational>;

inline Ogf ogf_mul(const Ogf& a, const Ogf& b, std::size_t N) {
  Ogf c(N + 1);
  for (std::size_t i = 0; i <= N && i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= N && j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// e_lambda^a(t) as an OGF: (a)_{n,lambda}/n!.
inline Ogf ogf_exp(const Rational& a, const Rational& lambda, std::size_t N) {
  Ogf c(N + 1);
  for (std::size_t n = 0; n <= N; ++n) c[n] = lfall(a, n, lambda) / fact(static_cast<long>(n));
  return c;
}

// sum_k c_k u(t)^k for an OGF u with u(0) = 0.
inline Ogf ogf_apply(const std::vector<Rational>& c, const Ogf& u, std::size_t N) {
  Ogf out(N + 1), power(N + 1);
  power[0] = Rational(1);
  for (std::size_t k = 0; k <= N && k < c.size(); ++k) {
    for (std::size_t n = 0; n <= N; ++n) out[n] += c[k] * power[n];
    power = ogf_mul(power, u, N);
  }
  return out;
}

// phi_{n,lambda}(x0) for n <= N from e_lambda^{x0}(e_lambda(t) - 1).
inline std::vector<Rational> bell_values(const Rational& x0, const Rational& lambda, std::size_t N) {
  Ogf u = ogf_exp(Rational(1), lambda, N);
  u[0] = Rational(0);
  std::vector<Rational> c(N + 1);
  for (std::size_t k = 0; k <= N; ++k) c[k] = lfall(x0, k, lambda) / fact(static_cast<long>(k));
  Ogf g = ogf_apply(c, u, N);
  for (std::size_t n = 0; n <= N; ++n) g[n] *= fact(static_cast<long>(n));
  return g;
}

// d_{m,lambda}(n,x0) for n <= N from e_lambda(t) e_lambda^{x0}((e_lambda^m(t) - 1)/m).
inline std::vector<Rational> dowling_values(const Rational& x0, long m, const Rational& lambda, std::size_t N) {
  Ogf u = ogf_exp(Rational(m), lambda, N);
  u[0] = Rational(0);
  for (auto& v : u) v /= Rational(m);
  std::vector<Rational> c(N + 1);
  for (std::size_t k = 0; k <= N; ++k) c[k] = lfall(x0, k, lambda) / fact(static_cast<long>(k));
  Ogf g = ogf_mul(ogf_exp(Rational(1), lambda, N), ogf_apply(c, u, N), N);
  for (std::size_t n = 0; n <= N; ++n) g[n] *= fact(static_cast<long>(n));
  return g;
}

// beta_{n,lambda} from (e_lambda(t) - 1) * B(t) = t, coefficientwise.
inline std::vector<Rational> deg_bernoulli_numbers(std::size_t N, const Rational& lambda) {
  std::vector<Rational> b(N + 1);
  for (std::size_t n = 1; n <= N + 1; ++n) {
    Rational acc = n == 1 ? Rational(1) : Rational(0);
    for (std::size_t j = 0; j + 1 < n; ++j) {
      acc -= binom(static_cast<long>(n), static_cast<long>(j)) * b[j] * lfall(Rational(1), n - j, lambda);
    }
    b[n - 1] = acc / (Rational(static_cast<long>(n)) * lfall(Rational(1), 1, lambda));
  }
  return b;
}

inline PolyX deg_bernoulli_poly(std::size_t n, const Rational& lambda) {
  const auto b = deg_bernoulli_numbers(n, lambda);
  PolyX out;
  for (std::size_t j = 0; j <= n; ++j) {
    out += lfall_poly(n - j, lambda) * (binom(static_cast<long>(n), static_cast<long>(j)) * b[j]);
  }
  return out;
}

// b_{n,lambda} from B2(t) * log_lambda(1+t)/t = 1 with
// [t^i/i!] log_lambda(1+t)/t = prod_{j=1}^{i} (lambda - j) / (i + 1).
inline std::vector<Rational> deg_bernoulli2_numbers(std::size_t N, const Rational& lambda) {
  std::vector<Rational> a(N + 1);
  for (std::size_t i = 0; i <= N; ++i) {
    Rational p(1);
    for (std::size_t j = 1; j <= i; ++j) p *= lambda - Rational(static_cast<long>(j));
    a[i] = p / Rational(static_cast<long>(i + 1));
  }
  std::vector<Rational> b(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    Rational acc = n == 0 ? Rational(1) : Rational(0);
    for (std::size_t j = 0; j < n; ++j) acc -= binom(static_cast<long>(n), static_cast<long>(j)) * b[j] * a[n - j];
    b[n] = acc / a[0];
  }
  return b;
}

// Random rational in [-9, 9] with denominator <= 5.
inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  return Rational(num(rng), den(rng));
}

}  // namespace oracle

#endif  // LUMBRAL_TESTS_ORACLES_HPP
