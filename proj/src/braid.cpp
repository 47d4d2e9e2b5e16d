#include "hurwitz/braid.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hurwitz {

namespace {

/// Left-to-right product: product({a, b, c}) = a b c.
Permutation product(std::initializer_list<Permutation> factors) {
  auto it = factors.begin();
  Permutation acc = *it;
  for (++it; it != factors.end(); ++it) acc = compose(acc, *it);
  return acc;
}

}  // namespace

MonodromyTuple act_g1(const MonodromyTuple& r) {
  const auto& [g1, g2, g3, g4] = r.entries();
  const Permutation g34 = compose(g3, g4);
  return MonodromyTuple::unchecked({
      g1,
      g2,
      product({inverse(g4), g3, g4}),
      product({inverse(g34), g4, g34}),
  });
}

MonodromyTuple act_g2(const MonodromyTuple& r) {
  const auto& [g1, g2, g3, g4] = r.entries();
  const Permutation g234 = product({g2, g3, g4});
  const Permutation g4_inv = inverse(g4);
  return MonodromyTuple::unchecked({
      g1,
      product({g4_inv, g2, g4}),
      product({g4_inv, g3, g4}),
      product({inverse(g234), g4, g234}),
  });
}

namespace {

/// Breadth-first closure of `seed` under canonicalize o act_g1 and
/// canonicalize o act_g2. `seed` must already be canonical.
std::vector<MonodromyTuple> closure(const MonodromyTuple& seed, Canonicalizer& canon) {
  const std::size_t d = seed.degree();
  std::vector<Letter> key(4 * d);
  auto canonical = [&](const MonodromyTuple& t) {
    canon.canonicalize(t.flat(), key);
    return MonodromyTuple::from_flat(key, d);
  };

  std::vector<MonodromyTuple> members{seed};
  std::set<MonodromyTuple> visited{seed};
  std::deque<MonodromyTuple> frontier{seed};
  while (!frontier.empty()) {
    const MonodromyTuple current = std::move(frontier.front());
    frontier.pop_front();
    for (const MonodromyTuple& next : {canonical(act_g1(current)), canonical(act_g2(current))}) {
      if (visited.insert(next).second) {
        members.push_back(next);
        frontier.push_back(next);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

std::vector<Orbit> orbit_decompose(const CoverSet& covers) {
  std::vector<Orbit> orbits;
  if (covers.representatives.empty()) return orbits;
  Canonicalizer canon(covers.profile);
  std::set<MonodromyTuple> assigned;
  // Representatives are sorted, so each new orbit starts at its smallest member.
  for (const auto& rep : covers.representatives) {
    if (assigned.contains(rep)) continue;
    Orbit orbit{covers.profile, closure(rep, canon)};
    for (const auto& m : orbit.members) assigned.insert(m);
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

Orbit orbit_of(const MonodromyTuple& seed) {
  validate_tuple(seed.entries());
  const RamificationProfile profile = seed.profile();
  Canonicalizer canon(profile);
  return Orbit{profile, closure(canonicalize(seed), canon)};
}

}  // namespace hurwitz
