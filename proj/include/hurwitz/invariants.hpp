#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hurwitz/braid.hpp"
#include "hurwitz/degen.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// d - sum over all parts a_ij of the profile of 1/a_ij.
Rational ramification_defect(const RamificationProfile& profile);

/// Exact boundary data of one orbit (or of a whole Hurwitz space).
struct SlopeReport {
  RamificationProfile profile;
  std::size_t orbit_size = 0;   // |O|, or N_d(c) for a whole space
  std::size_t orbit_count = 1;  // orbits aggregated into this report
  Rational delta;               // delta_O
  Rational delta_prime;         // delta'_O
  Rational ramification_defect;
  Rational deg_delta;
  Rational deg_lambda;
  Rational slope;
  std::size_t dropped_nodes = 0;  // nodes lost to rational tails, all directions
  std::vector<std::string> warnings;
};

struct DeltaSums {
  Rational delta;
  Rational delta_prime;
};

/// Sum of delta_j(r) and delta'_j(r) over members r and directions j = 1, 2, 3.
DeltaSums delta_sums(const Orbit& orbit);

/// deg delta = delta_O, deg lambda = (delta'_O + defect |O|) / 12,
/// slope = 12 delta_O / (delta'_O + defect |O|).
SlopeReport slope(const Orbit& orbit);

/// Aggregate over several orbits of one profile: |O| becomes the total count.
SlopeReport slope_of_orbits(const std::vector<Orbit>& orbits);

/// Enumerates Cov_d(c) and aggregates every orbit. Throws DomainError when the
/// cover set is empty.
SlopeReport slope_of_space(const RamificationProfile& profile,
                           const EnumerateOptions& options = {});

}  // namespace hurwitz
