#include "hurwitz/invariants.hpp"

#include <stdexcept>

namespace hurwitz {

Rational ramification_defect(const RamificationProfile& profile) {
  Rational defect = static_cast<long long>(profile.degree());
  for (const auto& c : profile.classes()) defect -= c.reciprocal_sum();
  return defect;
}

namespace {

struct Accumulator {
  Rational delta;
  Rational delta_prime;
  std::size_t dropped = 0;
  bool low_genus = false;
  bool bridge_chain = false;

  void add(const MonodromyTuple& r) {
    for (int j = 1; j <= 3; ++j) {
      const DegenerationReport report = degenerate(r, direction_from_int(j));
      delta += report.delta;
      delta_prime += report.delta_prime;
      dropped += report.dropped_node_count();
      low_genus = low_genus || report.low_genus;
      bridge_chain = bridge_chain || report.bridge_chain;
    }
  }
};

void check_members(const Orbit& orbit) {
  for (const auto& r : orbit.members) {
    if (r.profile() != orbit.profile) {
      throw std::logic_error("orbit member does not match the orbit's ramification profile");
    }
  }
}

}  // namespace

DeltaSums delta_sums(const Orbit& orbit) {
  if (orbit.members.empty()) throw DomainError("delta sums of an empty orbit");
  Accumulator acc;
  for (const auto& r : orbit.members) acc.add(r);
  return {acc.delta, acc.delta_prime};
}

SlopeReport slope_of_orbits(const std::vector<Orbit>& orbits) {
  if (orbits.empty()) throw DomainError("slope of an empty family");
  SlopeReport report;
  report.profile = orbits.front().profile;
  report.orbit_count = orbits.size();
  Accumulator acc;
  for (const auto& orbit : orbits) {
    if (orbit.members.empty()) throw DomainError("slope of an empty orbit");
    if (orbit.profile != report.profile) throw DomainError("orbits of different profiles");
    check_members(orbit);
    report.orbit_size += orbit.size();
    for (const auto& r : orbit.members) acc.add(r);
  }
  report.delta = acc.delta;
  report.delta_prime = acc.delta_prime;
  report.dropped_nodes = acc.dropped;
  report.ramification_defect = ramification_defect(report.profile);

  const Rational denominator =
      report.delta_prime + report.ramification_defect * static_cast<long long>(report.orbit_size);
  if (denominator == 0) {
    throw DomainError("slope denominator vanishes: the family has deg lambda = 0");
  }
  report.deg_delta = report.delta;
  report.deg_lambda = denominator / 12;
  report.slope = 12 * report.delta / denominator;

  if (acc.low_genus) report.warnings.emplace_back("genus below 2");
  if (acc.bridge_chain) report.warnings.emplace_back("chain of contracted rational bridges");
  return report;
}

SlopeReport slope(const Orbit& orbit) { return slope_of_orbits({orbit}); }

SlopeReport slope_of_space(const RamificationProfile& profile, const EnumerateOptions& options) {
  const CoverSet covers = enumerate_covers(profile, options);
  if (covers.count() == 0) throw DomainError("Cov_d(c) is empty for this profile");
  return slope_of_orbits(orbit_decompose(covers));
}

}  // namespace hurwitz
