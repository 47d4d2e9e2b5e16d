#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/enumerate.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// The cyclic cover y^d = (x - z1)^a1 (x - z2)^a2 (x - z3)^a3 (x - z4)^a4.
class CyclicCoverSpec {
 public:
  /// Requires 1 <= a_i <= d - 1, sum a_i = 0 mod d, gcd(a1, a2, a3, a4, d) = 1.
  CyclicCoverSpec(int degree, std::array<int, 4> exponents);

  int degree() const { return degree_; }
  const std::array<int, 4>& exponents() const { return exponents_; }

  /// gcd(a_i, d), 1-based i.
  int d(int i) const;
  /// gcd(a_i + a_j, d), 1-based i < j.
  int s(int i, int j) const;
  /// gcd(a_i, a_j, d), 1-based i < j.
  int t(int i, int j) const;

 private:
  int degree_;
  std::array<int, 4> exponents_;
};

/// Every valid spec of the given degree, exponents in lexicographic order.
std::vector<CyclicCoverSpec> cyclic_specs(int degree);

/// (g^a1, g^a2, g^a3, g^a4) with g = (1 2 ... d).
MonodromyTuple cyclic_tuple(const CyclicCoverSpec& spec);

/// 12 S / (S + d^2 - sum d_i^2) with S = s12^2 + s23^2 + s13^2.
Rational cyclic_slope(const CyclicCoverSpec& spec);

/// d/6 - (1/6d) sum d_i^2 + (1/6d)(s12^2 + s13^2 + s23^2).
Rational cyclic_lyapunov_sum(const CyclicCoverSpec& spec);

/// d + 1 - (1/2) sum gcd(a_i, d).
int cyclic_genus(const CyclicCoverSpec& spec);

/// d <= 12 (g - 1); empty when g < 2 (the bound does not apply).
std::optional<bool> degree_bound_check(int genus, int degree);

struct CyclicCrossCheck {
  bool passed = true;
  std::vector<std::string> failures;
  std::size_t orbit_size = 0;
  std::array<Rational, 3> delta;        // pipeline delta_1, delta_2, delta_3
  std::array<Rational, 3> delta_prime;  // pipeline delta'_1, delta'_2, delta'_3
  std::array<Rational, 3> expected;     // s23^2/d, s13^2/d, s12^2/d
  std::size_t rational_tails = 0;
  Rational pipeline_slope;
  Rational closed_form_slope;
  Rational pipeline_deg_lambda;
  Rational lyapunov_sum;
};

/// Runs the generic orbit/degeneration/slope pipeline on cyclic_tuple(spec)
/// and compares every quantity with the closed forms.
CyclicCrossCheck cyclic_cross_check(const CyclicCoverSpec& spec);

}  // namespace hurwitz
