#pragma once

// Hot-loop helpers on raw 0-based image arrays.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "hurwitz/perm.hpp"

namespace hurwitz::detail {

struct FlatHash {
  std::size_t operator()(const std::vector<Letter>& key) const noexcept {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(key.data()), key.size()));
  }
};

/// True iff the permutation has exactly the given parts (weakly decreasing).
inline bool has_cycle_type(const Letter* perm, std::size_t d, const std::vector<int>& parts) {
  int lengths[kMaxDegree];
  std::size_t count = 0;
  std::uint64_t seen = 0;
  for (std::size_t x = 0; x < d; ++x) {
    if (seen >> x & 1u) continue;
    int length = 0;
    for (std::size_t y = x; !(seen >> y & 1u); y = perm[y]) {
      seen |= std::uint64_t{1} << y;
      ++length;
    }
    if (count == parts.size()) return false;
    lengths[count++] = length;
  }
  if (count != parts.size()) return false;
  std::sort(lengths, lengths + count, std::greater<>());
  return std::equal(lengths, lengths + count, parts.begin());
}

/// Transitivity of the group generated by the four entries of a flat tuple.
inline bool is_transitive(const Letter* flat, std::size_t d) {
  const std::uint64_t all = d == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1;
  std::uint64_t reached = 1;
  Letter stack[kMaxDegree];
  std::size_t top = 0;
  stack[top++] = 0;
  while (top > 0) {
    const Letter x = stack[--top];
    for (std::size_t g = 0; g < 4; ++g) {
      const Letter y = flat[g * d + x];
      if (!(reached >> y & 1u)) {
        reached |= std::uint64_t{1} << y;
        stack[top++] = y;
      }
    }
  }
  return reached == all;
}

}  // namespace hurwitz::detail
