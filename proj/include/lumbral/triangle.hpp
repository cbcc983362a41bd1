#ifndef LUMBRAL_TRIANGLE_HPP
#define LUMBRAL_TRIANGLE_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lumbral/errors.hpp"
#include "lumbral/rational.hpp"

namespace lumbral {

// Lower-triangular array T(n, k), 0 <= k <= n <= n_max.  Entries above the
// diagonal are zero and not stored.
template <typename T>
class BasicTriangle {
 public:
  explicit BasicTriangle(std::size_t n_max) {
    rows_.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) rows_.emplace_back(n + 1);
  }

  explicit BasicTriangle(std::vector<std::vector<T>> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw DimensionError("Triangle: no rows");
    for (std::size_t n = 0; n < rows_.size(); ++n) {
      if (rows_[n].size() != n + 1) {
        throw DimensionError("Triangle: row " + std::to_string(n) + " has " + std::to_string(rows_[n].size()) +
                             " entries, expected " + std::to_string(n + 1));
      }
    }
  }

  static BasicTriangle identity(std::size_t n_max) {
    BasicTriangle out(n_max);
    for (std::size_t n = 0; n <= n_max; ++n) out.rows_[n][n] = T(Rational(1));
    return out;
  }

  std::size_t n_max() const { return rows_.size() - 1; }

  T operator()(std::size_t n, std::size_t k) const {
    if (k > n) return T{};
    return rows_.at(n).at(k);
  }

  const std::vector<T>& row(std::size_t n) const { return rows_.at(n); }
  const std::vector<std::vector<T>>& rows() const { return rows_; }

  // Copy with one entry replaced.
  BasicTriangle with_entry(std::size_t n, std::size_t k, T value) const {
    if (k > n) throw DimensionError("Triangle: entry above the diagonal");
    BasicTriangle out = *this;
    out.rows_.at(n).at(k) = std::move(value);
    return out;
  }

  friend bool operator==(const BasicTriangle& a, const BasicTriangle& b) { return a.rows_ == b.rows_; }

 private:
  // Write access during construction by the builders below.
  template <typename U>
  friend class TriangleBuilder;

  std::vector<std::vector<T>> rows_;
};

using Triangle = BasicTriangle<Rational>;

// Mutable staging area for triangle construction; build() freezes it.
template <typename T>
class TriangleBuilder {
 public:
  explicit TriangleBuilder(std::size_t n_max) : t_(n_max) {}
  void set(std::size_t n, std::size_t k, T v) { t_.rows_.at(n).at(k) = std::move(v); }
  BasicTriangle<T> build() && { return std::move(t_); }

 private:
  BasicTriangle<T> t_;
};

// (A B)(n, k) = sum_{j=k}^{n} A(n, j) B(j, k); products of lower-triangular
// matrices stay lower-triangular.
inline Triangle triangle_product(const Triangle& a, const Triangle& b) {
  if (a.n_max() != b.n_max()) throw DimensionError("triangle_product: sizes differ");
  TriangleBuilder<Rational> out(a.n_max());
  for (std::size_t n = 0; n <= a.n_max(); ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      Rational acc;
      for (std::size_t j = k; j <= n; ++j) acc += a(n, j) * b(j, k);
      out.set(n, k, std::move(acc));
    }
  }
  return std::move(out).build();
}

}  // namespace lumbral

#endif  // LUMBRAL_TRIANGLE_HPP
