#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hurwitz/enumerate.hpp"

namespace hurwitz {

/// Malformed text input. `position` is the 0-based offset of the offending
/// character in the parsed string.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar: `id`, or one or more groups `( INT+ )` with points separated by
/// spaces or commas. Points are 1-based and supports must be disjoint. Points
/// outside every cycle are fixed. Without a degree, the largest listed point
/// is used.
Permutation parse_permutation(std::string_view text, std::optional<std::size_t> degree = {});

/// `id`, or the nontrivial cycles as "(1 2 3)(4 5)". Inverse of
/// parse_permutation for the same degree.
std::string format_permutation(const Permutation& p);

/// Parts separated by `,`; `a^k` repeats a part. Missing 1s are filled up to
/// the degree. An empty string is the identity class.
CycleType parse_cycle_type(std::string_view text, std::size_t degree);
/// "3,1" style, all parts listed.
std::string format_cycle_type(const CycleType& ct);

/// Four classes separated by `|`, e.g. "4|4|3,1|3,1".
RamificationProfile parse_profile(std::string_view text, std::size_t degree);
std::string format_profile(const RamificationProfile& profile);

/// Four permutations separated by `;`. Validates the tuple invariants.
MonodromyTuple parse_tuple(std::string_view text, std::optional<std::size_t> degree = {});
std::string format_tuple(const MonodromyTuple& r);

}  // namespace hurwitz
