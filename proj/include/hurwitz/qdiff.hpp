#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/enumerate.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Odd zero orders nu = (d_1, ..., d_l) of a quadratic differential, a
/// partition of 4g - 4. Parts are kept in ascending order.
class OddPartition {
 public:
  /// Requires odd positive parts, sum = 4g - 4 with g >= 2.
  explicit OddPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int genus() const { return genus_; }
  /// n_j = (d_j + 1) / 2.
  std::vector<int> half_orders() const;

  friend bool operator==(const OddPartition&, const OddPartition&) = default;

 private:
  std::vector<int> parts_;
  int genus_ = 0;
};

/// Smallest feasible degree: sum of (d_j + 2) = 4g - 4 + 2l.
int minimal_degree(const OddPartition& nu);

/// c1 = (d_1 + 2, ..., d_l + 2, 2, ..., 2), c2 = c3 = c4 = (2, ..., 2).
RamificationProfile stratum_profile(const OddPartition& nu, int degree);

/// (1/24) sum d_i (d_i + 4) / (d_i + 2).
Rational kappa(const OddPartition& nu);

/// 12 / (1 + kappa).
Rational asymptotic_bound(const OddPartition& nu);

/// slope = 12 / (1 + (1/4) sum d_i(d_i+4)/(d_i+2) * N / delta), the exact
/// value the boundary data of a tail-free family must produce.
Rational tail_free_slope(const OddPartition& nu, const BigInt& count, const Rational& delta);

struct StratumOrbitRow {
  std::size_t size = 0;
  Rational delta;
  Rational delta_prime;
  Rational slope;
  bool identity_holds = false;
};

struct StratumScanRow {
  int d = 0;
  BigInt N;
  Rational delta;        // delta_{d,nu}, summed over every orbit
  Rational delta_prime;
  Rational slope;
  Rational sv_estimate;  // delta / (6 N)
  std::optional<Rational> sv_difference;  // against the previous computed row
  std::size_t orbit_count = 0;
  std::size_t rational_tails = 0;
  std::size_t dropped_nodes = 0;
  bool no_tails = false;          // every node of every degeneration survives
  bool identity_holds = false;    // aggregated and per orbit
  std::vector<StratumOrbitRow> orbits;
  std::optional<std::string> skipped_reason;

  bool computed() const { return !skipped_reason.has_value(); }
};

struct ScanOptions {
  /// Rows whose search_cost exceeds the budget are skipped.
  BigInt budget = BigInt(50'000'000);
  std::size_t threads = 1;
};

/// One row per requested degree. Infeasible or over-budget degrees become
/// skipped rows and the scan continues.
std::vector<StratumScanRow> stratum_scan(const OddPartition& nu, const std::vector<int>& d_values,
                                         const ScanOptions& options = {});

struct SvLyapunovReport {
  Rational c;        // sv_estimate of the row
  Rational kappa;
  Rational L;        // kappa + c
  Rational slope;    // 12 c / L
  bool identity_holds = false;  // equals the row's slope
};

/// Finite-d form of s = 12 c / L with L = kappa + c. Requires a computed row.
SvLyapunovReport sv_lyapunov_relation(const OddPartition& nu, const StratumScanRow& row);

/// Coefficient of prod t_i^{h_i} in (1 + sum a_i^2 t_i)^g, where a_i are the
/// distinct zero orders with multiplicities h_i. Requires sum = 4g - 4 and
/// sum h_i <= g.
BigInt de_jonquieres_count(int genus, const std::vector<int>& zeros);

}  // namespace hurwitz
