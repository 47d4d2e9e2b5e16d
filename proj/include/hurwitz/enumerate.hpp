#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "hurwitz/perm.hpp"

namespace hurwitz {

/// Cycle types (c1, c2, c3, c4) over the four branch points.
class RamificationProfile {
 public:
  RamificationProfile() = default;
  explicit RamificationProfile(std::array<CycleType, 4> classes);

  std::size_t degree() const { return classes_[0].degree(); }
  const std::array<CycleType, 4>& classes() const { return classes_; }
  const CycleType& operator[](std::size_t i) const { return classes_[i]; }
  /// Sum over i of (d - k_i) is even; otherwise no cover exists.
  bool parity_ok() const;

  friend auto operator<=>(const RamificationProfile&, const RamificationProfile&) = default;
  friend bool operator==(const RamificationProfile&, const RamificationProfile&) = default;

 private:
  std::array<CycleType, 4> classes_;
};

/// g = d + 1 - (k1 + k2 + k3 + k4) / 2. May be negative for infeasible
/// profiles. Throws DomainError when the parity condition fails.
int genus_of_profile(const RamificationProfile& profile);

/// (g1, g2, g3, g4) with g1 g2 g3 g4 = id generating a transitive group.
class MonodromyTuple {
 public:
  MonodromyTuple() = default;
  /// Validates common degree, product identity and transitivity.
  explicit MonodromyTuple(std::array<Permutation, 4> entries);
  static MonodromyTuple unchecked(std::array<Permutation, 4> entries) {
    MonodromyTuple r;
    r.entries_ = std::move(entries);
    return r;
  }
  /// Rebuilds a tuple from its concatenated 0-based image arrays.
  static MonodromyTuple from_flat(std::span<const Letter> flat, std::size_t degree);

  std::size_t degree() const { return entries_[0].degree(); }
  /// 0-based position: operator[](0) is g1.
  const Permutation& operator[](std::size_t i) const { return entries_[i]; }
  const std::array<Permutation, 4>& entries() const { return entries_; }
  RamificationProfile profile() const;
  /// Concatenated 0-based image arrays of g1..g4.
  std::vector<Letter> flat() const;

  /// Lexicographic on the concatenated image arrays.
  friend auto operator<=>(const MonodromyTuple&, const MonodromyTuple&) = default;
  friend bool operator==(const MonodromyTuple&, const MonodromyTuple&) = default;

 private:
  std::array<Permutation, 4> entries_;
};

/// Throws DomainError describing the first violated tuple invariant.
void validate_tuple(const std::array<Permutation, 4>& entries);

/// Position whose entry is pinned to its canonical class representative by
/// canonicalize. Always 0 unless c1 has a centralizer more than
/// kAnchorSwitchRatio times larger than the smallest one in the profile; then
/// the first position attaining the smallest centralizer.
inline constexpr unsigned kAnchorSwitchRatio = 8;
std::size_t anchor_position(const RamificationProfile& profile);

/// Reusable canonical-form engine for tuples sharing one profile.
///
/// The canonical form conjugates the anchor entry onto canonical_class_rep of
/// its cycle type and, among all such conjugators (a coset of the anchor's
/// centralizer), keeps the one giving the lexicographically smallest tuple.
class Canonicalizer {
 public:
  explicit Canonicalizer(const RamificationProfile& profile);

  std::size_t anchor() const { return anchor_; }
  /// `flat` and `out` hold 4*d letters; they may not alias.
  void canonicalize(std::span<const Letter> flat, std::span<Letter> out);

 private:
  void search(std::size_t block);
  void evaluate();

  std::size_t degree_;
  std::size_t anchor_;
  std::vector<std::size_t> block_start_;
  std::vector<int> block_length_;
  std::vector<Letter> target_;

  // Per-call state.
  const Letter* input_ = nullptr;
  Letter* best_ = nullptr;
  std::vector<std::vector<Letter>> cycles_;
  std::vector<bool> cycle_used_;
  std::vector<Letter> tau_;
  std::vector<Letter> tau_inv_;
};

MonodromyTuple canonicalize(const MonodromyTuple& r);
bool equivalent(const MonodromyTuple& r, const MonodromyTuple& s);

/// Inequivalent covers with a fixed profile, sorted by canonical form.
struct CoverSet {
  RamificationProfile profile;
  std::vector<MonodromyTuple> representatives;

  std::size_t count() const { return representatives.size(); }
};

struct EnumerateOptions {
  /// Worker threads; 0 or 1 runs on the calling thread.
  std::size_t threads = 1;
};

/// All classes of Cov_d(c), one canonical representative each. Infeasible
/// profiles give an empty set.
CoverSet enumerate_covers(const RamificationProfile& profile,
                          const EnumerateOptions& options = {});

/// Number of (g_a, g_b) candidate pairs enumerate_covers will test.
BigInt search_cost(const RamificationProfile& profile);

/// Every cycle type of the given degree, in decreasing lexicographic order.
std::vector<CycleType> cycle_types_of_degree(std::size_t degree);

/// Cov_d(c) for every profile of degree d at once, keyed by profile. Only
/// practical for d <= 7.
std::map<RamificationProfile, CoverSet> enumerate_all_covers(std::size_t degree);

}  // namespace hurwitz
