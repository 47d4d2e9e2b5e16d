#pragma once

#include <vector>

#include "hurwitz/enumerate.hpp"

namespace hurwitz {

/// One orbit of <g1, g2> on Cov_d(c): an irreducible component of the
/// Hurwitz space. Members are canonical forms, sorted.
struct Orbit {
  RamificationProfile profile;
  std::vector<MonodromyTuple> members;

  std::size_t size() const { return members.size(); }
};

/// p4 circling p3: (g1, g2, g4^-1 g3 g4, (g3 g4)^-1 g4 (g3 g4)).
MonodromyTuple act_g1(const MonodromyTuple& r);
/// p4 circling p2 and p3:
/// (g1, g4^-1 g2 g4, g4^-1 g3 g4, (g2 g3 g4)^-1 g4 (g2 g3 g4)).
MonodromyTuple act_g2(const MonodromyTuple& r);

/// Partition of the cover set into orbits, ordered by smallest member.
std::vector<Orbit> orbit_decompose(const CoverSet& covers);

/// The orbit through a single tuple, found without enumerating Cov_d(c).
Orbit orbit_of(const MonodromyTuple& seed);

}  // namespace hurwitz
