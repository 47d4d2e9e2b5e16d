#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Largest permutation degree accepted anywhere in the library.
inline constexpr std::size_t kMaxDegree = 64;

/// Internal letter storage. Letters are stored 0-based; everything that
/// prints or parses cycle notation (and every `std::vector<int>` of points
/// returned by the API) uses 1-based points.
using Letter = std::uint8_t;

/// Thrown when an argument violates a documented precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A bijection of {1..d}. Default-constructed values have degree 0 and only
/// serve as placeholders.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);
  /// 0-based images; throws DomainError unless a bijection of degree 1..kMaxDegree.
  static Permutation from_images(std::vector<Letter> images);
  /// Disjoint 1-based cycles; unlisted points are fixed.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<int>>& cycles);
  /// Skips validation. Callers guarantee a bijection.
  static Permutation unchecked(std::vector<Letter> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  std::size_t degree() const { return images_.size(); }
  /// 0-based image of the 0-based letter `x`.
  Letter operator[](std::size_t x) const { return images_[x]; }
  /// 1-based image of the 1-based point `x`.
  int apply(int x) const { return images_[static_cast<std::size_t>(x - 1)] + 1; }
  std::span<const Letter> images() const { return images_; }

  bool is_identity() const;
  /// Cycles as 1-based points, each starting at its smallest point, ordered
  /// by that point. Fixed points are included only when requested.
  std::vector<std::vector<int>> cycles(bool include_fixed = false) const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Letter> images_;
};

/// Multiset of cycle lengths, stored weakly decreasing. Fixed points are
/// explicit parts of size 1.
class CycleType {
 public:
  CycleType() = default;
  explicit CycleType(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t degree() const { return degree_; }
  std::size_t num_cycles() const { return parts_.size(); }
  /// Order of the centralizer of any element with this cycle type.
  BigInt centralizer_order() const;
  /// Number of permutations with this cycle type.
  BigInt class_size() const;
  /// Sum of 1/a over all parts a.
  Rational reciprocal_sum() const;

  friend auto operator<=>(const CycleType&, const CycleType&) = default;
  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::vector<int> parts_;
  std::size_t degree_ = 0;
};

/// result(x) = p(q(x)): the right factor acts first.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// t p t^-1.
Permutation conjugate(const Permutation& p, const Permutation& t);
CycleType cycle_type(const Permutation& p);

/// Orbits of <generators> on {1..degree}, 1-based, each sorted, ordered by
/// smallest point.
std::vector<std::vector<int>> orbits_under(std::span<const Permutation> generators,
                                           std::size_t degree);

/// Consecutive blocks, longest cycles first: (3,1) -> (1 2 3)(4).
Permutation canonical_class_rep(const CycleType& ct);

/// Every permutation of the given cycle type, in a deterministic order.
std::vector<Permutation> class_elements(const CycleType& ct);

/// Every element of the centralizer of canonical_class_rep(ct).
std::vector<Permutation> centralizer_elements(const CycleType& ct);

}  // namespace hurwitz

template <>
struct std::hash<hurwitz::Permutation> {
  std::size_t operator()(const hurwitz::Permutation& p) const noexcept;
};
