#include "hurwitz/qdiff.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hurwitz/braid.hpp"
#include "hurwitz/degen.hpp"
#include "hurwitz/invariants.hpp"

namespace hurwitz {

OddPartition::OddPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("odd partition must have at least one part");
  int sum = 0;
  for (int p : parts_) {
    if (p <= 0 || p % 2 == 0) throw DomainError("odd partition parts must be odd and positive");
    sum += p;
  }
  if (sum % 4 != 0) throw DomainError("odd partition must sum to 4g - 4");
  genus_ = (sum + 4) / 4;
  if (genus_ < 2) throw DomainError("odd partition must have genus at least 2");
  std::sort(parts_.begin(), parts_.end());
}

std::vector<int> OddPartition::half_orders() const {
  std::vector<int> out;
  for (int p : parts_) out.push_back((p + 1) / 2);
  return out;
}

int minimal_degree(const OddPartition& nu) {
  int total = 0;
  for (int p : nu.parts()) total += p + 2;
  return total;
}

RamificationProfile stratum_profile(const OddPartition& nu, int degree) {
  const int minimum = minimal_degree(nu);
  if (degree % 2 != 0) throw DomainError("stratum degree must be even");
  if (degree < minimum) {
    throw DomainError("degree " + std::to_string(degree) + " is below the minimal degree " +
                      std::to_string(minimum));
  }
  if (static_cast<std::size_t>(degree) > kMaxDegree) {
    throw DomainError("degree exceeds " + std::to_string(kMaxDegree));
  }
  std::vector<int> first;
  for (int p : nu.parts()) first.push_back(p + 2);
  first.insert(first.end(), static_cast<std::size_t>((degree - minimum) / 2), 2);
  const CycleType pairs(std::vector<int>(static_cast<std::size_t>(degree / 2), 2));
  return RamificationProfile({CycleType(std::move(first)), pairs, pairs, pairs});
}

namespace {

Rational zero_order_sum(const OddPartition& nu) {
  Rational total = 0;
  for (int p : nu.parts()) total += Rational(p * (p + 4), p + 2);
  return total;
}

}  // namespace

Rational kappa(const OddPartition& nu) { return zero_order_sum(nu) / 24; }

Rational asymptotic_bound(const OddPartition& nu) { return Rational(12) / (1 + kappa(nu)); }

Rational tail_free_slope(const OddPartition& nu, const BigInt& count, const Rational& delta) {
  if (delta == 0) throw DomainError("tail-free slope needs a nonzero delta");
  return Rational(12) / (1 + zero_order_sum(nu) / 4 * Rational(count) / delta);
}

namespace {

struct TailCount {
  std::size_t tails = 0;
  std::size_t dropped = 0;
};

TailCount count_tails(const Orbit& orbit) {
  TailCount count;
  for (const auto& r : orbit.members) {
    for (int j = 1; j <= 3; ++j) {
      const DegenerationReport report = degenerate(r, direction_from_int(j));
      count.tails += report.rational_tail_count();
      count.dropped += report.dropped_node_count();
    }
  }
  return count;
}

StratumScanRow scan_row(const OddPartition& nu, int d, const ScanOptions& options) {
  StratumScanRow row;
  row.d = d;
  RamificationProfile profile;
  try {
    profile = stratum_profile(nu, d);
  } catch (const DomainError& e) {
    row.skipped_reason = e.what();
    return row;
  }
  const BigInt cost = search_cost(profile);
  if (cost > options.budget) {
    row.skipped_reason = "search cost " + cost.str() + " exceeds budget " + options.budget.str();
    return row;
  }

  const CoverSet covers = enumerate_covers(profile, {options.threads});
  if (covers.count() == 0) {
    row.skipped_reason = "empty Hurwitz space (N = 0)";
    return row;
  }
  const std::vector<Orbit> orbits = orbit_decompose(covers);
  row.N = covers.count();
  row.orbit_count = orbits.size();
  row.identity_holds = true;
  for (const auto& orbit : orbits) {
    const SlopeReport report = slope(orbit);
    const TailCount tails = count_tails(orbit);
    row.rational_tails += tails.tails;
    row.dropped_nodes += tails.dropped;
    StratumOrbitRow orbit_row{orbit.size(), report.delta, report.delta_prime, report.slope, false};
    orbit_row.identity_holds =
        report.slope == tail_free_slope(nu, BigInt(orbit.size()), report.delta);
    row.identity_holds = row.identity_holds && orbit_row.identity_holds;
    row.orbits.push_back(std::move(orbit_row));
  }

  const SlopeReport total = slope_of_orbits(orbits);
  row.delta = total.delta;
  row.delta_prime = total.delta_prime;
  row.slope = total.slope;
  // 6 = 3 degeneration directions times 2 for the pillowcase double cover.
  row.sv_estimate = row.delta / (6 * Rational(row.N));
  row.no_tails = row.rational_tails == 0 && row.dropped_nodes == 0;
  row.identity_holds = row.identity_holds && row.slope == tail_free_slope(nu, row.N, row.delta);
  return row;
}

}  // namespace

std::vector<StratumScanRow> stratum_scan(const OddPartition& nu, const std::vector<int>& d_values,
                                         const ScanOptions& options) {
  std::vector<StratumScanRow> rows;
  std::optional<Rational> previous;
  for (int d : d_values) {
    rows.push_back(scan_row(nu, d, options));
    StratumScanRow& row = rows.back();
    if (!row.computed()) continue;
    if (previous) row.sv_difference = row.sv_estimate - *previous;
    previous = row.sv_estimate;
  }
  return rows;
}

SvLyapunovReport sv_lyapunov_relation(const OddPartition& nu, const StratumScanRow& row) {
  if (!row.computed()) throw DomainError("row was skipped: " + *row.skipped_reason);
  SvLyapunovReport report;
  report.c = row.sv_estimate;
  report.kappa = kappa(nu);
  report.L = report.kappa + report.c;
  report.slope = 12 * report.c / report.L;
  report.identity_holds = report.slope == row.slope;
  return report;
}

BigInt de_jonquieres_count(int genus, const std::vector<int>& zeros) {
  if (genus < 1) throw DomainError("genus must be positive");
  std::map<int, int> multiplicity;
  int sum = 0;
  for (int a : zeros) {
    if (a <= 0) throw DomainError("zero orders must be positive");
    ++multiplicity[a];
    sum += a;
  }
  if (sum != 4 * genus - 4) throw DomainError("zero orders must sum to 4g - 4");
  const int total = static_cast<int>(zeros.size());
  if (total > genus) throw DomainError("more zeros than the genus allows");

  auto factorial = [](int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  BigInt count = factorial(genus) / factorial(genus - total);
  for (const auto& [a, h] : multiplicity) {
    count /= factorial(h);
    for (int i = 0; i < h; ++i) count *= BigInt(a) * a;
  }
  return count;
}

}  // namespace hurwitz
