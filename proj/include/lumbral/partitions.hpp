#ifndef LUMBRAL_PARTITIONS_HPP
#define LUMBRAL_PARTITIONS_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "lumbral/errors.hpp"

namespace lumbral {

inline constexpr std::size_t kDefaultEnumerationCap = 10;

// Calls visit(block_of) for every set partition of {0, ..., size-1}, where
// block_of[i] is the block index of element i in restricted-growth form.
inline void for_each_set_partition(std::size_t size, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> block_of(size);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t blocks) {
    if (i == size) {
      visit(block_of);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      block_of[i] = b;
      rec(i + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  rec(0, 0);
}

// Weighted counts of coloured partitions of {1, ..., n+r}, indexed by k where
// the partition has k + r blocks.  Rules: the distinguished elements 1..r lie
// in distinct blocks; block minima are uncoloured; elements of blocks holding
// a distinguished element are uncoloured; every other element takes one of m
// colours.  Entry k equals W^{(r)}_m(n, k).
inline std::vector<mpz_class> colored_partition_row(std::size_t n, long m, std::size_t r,
                                                    std::size_t cap = kDefaultEnumerationCap) {
  if (m < 1) throw DomainError("m must be a positive integer");
  const std::size_t size = n + r;
  if (size > cap) {
    throw ResourceError("colored partition enumeration: n + r = " + std::to_string(size) + " exceeds cap " +
                        std::to_string(cap));
  }
  std::vector<mpz_class> row(n + 1);
  if (size == 0) {
    row[0] = 1;  // W^{(0)}_m(0, 0) = 1 by convention
    return row;
  }
  std::vector<mpz_class> colour_power(size + 1);
  colour_power[0] = 1;
  for (std::size_t i = 1; i <= size; ++i) colour_power[i] = colour_power[i - 1] * m;

  for_each_set_partition(size, [&](const std::vector<std::size_t>& block_of) {
    std::size_t blocks = 0;
    for (auto b : block_of) blocks = std::max(blocks, b + 1);
    if (blocks < r || blocks - r > n) return;
    std::vector<long> minimum(blocks, -1);
    std::vector<bool> distinguished(blocks, false);
    for (std::size_t i = 0; i < size; ++i) {
      const auto b = block_of[i];
      if (minimum[b] < 0) minimum[b] = static_cast<long>(i);
      if (i < r) {
        if (distinguished[b]) return;  // two distinguished elements share a block
        distinguished[b] = true;
      }
    }
    std::size_t coloured = 0;
    for (std::size_t i = 0; i < size; ++i) {
      const auto b = block_of[i];
      if (static_cast<long>(i) == minimum[b] || distinguished[b]) continue;
      ++coloured;
    }
    row[blocks - r] += colour_power[coloured];
  });
  return row;
}

inline mpz_class enumerate_colored_partitions(std::size_t n, std::size_t k, long m, std::size_t r,
                                              std::size_t cap = kDefaultEnumerationCap) {
  if (k > n) throw DomainError("enumerate_colored_partitions: k > n");
  return colored_partition_row(n, m, r, cap)[k];
}

}  // namespace lumbral

#endif  // LUMBRAL_PARTITIONS_HPP
