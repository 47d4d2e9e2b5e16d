#include "hurwitz/cyclic.hpp"

#include <numeric>

#include "hurwitz/braid.hpp"
#include "hurwitz/degen.hpp"
#include "hurwitz/invariants.hpp"

namespace hurwitz {

CyclicCoverSpec::CyclicCoverSpec(int degree, std::array<int, 4> exponents)
    : degree_(degree), exponents_(exponents) {
  if (degree < 2 || static_cast<std::size_t>(degree) > kMaxDegree) {
    throw DomainError("cyclic cover degree must lie in 2.." + std::to_string(kMaxDegree));
  }
  int sum = 0;
  int g = degree;
  for (int a : exponents_) {
    if (a < 1 || a > degree - 1) throw DomainError("cyclic exponents must lie in 1..d-1");
    sum += a;
    g = std::gcd(g, a);
  }
  if (sum % degree != 0) throw DomainError("cyclic exponents must sum to 0 mod d");
  if (g != 1) throw DomainError("gcd(a1, a2, a3, a4, d) must be 1");
}

int CyclicCoverSpec::d(int i) const { return std::gcd(exponents_[i - 1], degree_); }

int CyclicCoverSpec::s(int i, int j) const {
  return std::gcd(exponents_[i - 1] + exponents_[j - 1], degree_);
}

int CyclicCoverSpec::t(int i, int j) const {
  return std::gcd(std::gcd(exponents_[i - 1], exponents_[j - 1]), degree_);
}

std::vector<CyclicCoverSpec> cyclic_specs(int degree) {
  std::vector<CyclicCoverSpec> out;
  for (int a1 = 1; a1 < degree; ++a1)
    for (int a2 = 1; a2 < degree; ++a2)
      for (int a3 = 1; a3 < degree; ++a3) {
        const int a4 = (3 * degree - a1 - a2 - a3) % degree;
        if (a4 == 0) continue;
        if (std::gcd(std::gcd(std::gcd(a1, a2), std::gcd(a3, a4)), degree) != 1) continue;
        out.emplace_back(degree, std::array<int, 4>{a1, a2, a3, a4});
      }
  return out;
}

MonodromyTuple cyclic_tuple(const CyclicCoverSpec& spec) {
  const auto d = static_cast<std::size_t>(spec.degree());
  std::array<Permutation, 4> entries;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Letter> images(d);
    for (std::size_t x = 0; x < d; ++x) {
      images[x] = static_cast<Letter>((x + static_cast<std::size_t>(spec.exponents()[i])) % d);
    }
    entries[i] = Permutation::unchecked(std::move(images));
  }
  return MonodromyTuple(std::move(entries));
}

namespace {

int sum_of_squared_s(const CyclicCoverSpec& spec) {
  return spec.s(1, 2) * spec.s(1, 2) + spec.s(2, 3) * spec.s(2, 3) + spec.s(1, 3) * spec.s(1, 3);
}

int sum_of_squared_d(const CyclicCoverSpec& spec) {
  int total = 0;
  for (int i = 1; i <= 4; ++i) total += spec.d(i) * spec.d(i);
  return total;
}

}  // namespace

Rational cyclic_slope(const CyclicCoverSpec& spec) {
  const int s = sum_of_squared_s(spec);
  const int denominator = s + spec.degree() * spec.degree() - sum_of_squared_d(spec);
  if (denominator == 0) throw DomainError("cyclic slope denominator vanishes");
  return Rational(12 * s, denominator);
}

Rational cyclic_lyapunov_sum(const CyclicCoverSpec& spec) {
  const long long d = spec.degree();
  return Rational(d, 6) - Rational(sum_of_squared_d(spec), 6 * d) +
         Rational(sum_of_squared_s(spec), 6 * d);
}

int cyclic_genus(const CyclicCoverSpec& spec) {
  int total = 0;
  for (int i = 1; i <= 4; ++i) total += spec.d(i);
  return spec.degree() + 1 - total / 2;
}

std::optional<bool> degree_bound_check(int genus, int degree) {
  if (genus < 2) return std::nullopt;
  return degree <= 12 * (genus - 1);
}

CyclicCrossCheck cyclic_cross_check(const CyclicCoverSpec& spec) {
  CyclicCrossCheck check;
  auto fail = [&](std::string message) {
    check.passed = false;
    check.failures.push_back(std::move(message));
  };

  const MonodromyTuple tuple = cyclic_tuple(spec);
  const Orbit orbit = orbit_of(tuple);
  check.orbit_size = orbit.size();
  if (orbit.size() != 1) fail("orbit has " + std::to_string(orbit.size()) + " classes, expected 1");

  const long long d = spec.degree();
  check.expected = {Rational(spec.s(2, 3) * spec.s(2, 3), d),
                    Rational(spec.s(1, 3) * spec.s(1, 3), d),
                    Rational(spec.s(1, 2) * spec.s(1, 2), d)};
  for (int j = 1; j <= 3; ++j) {
    const DegenerationReport report = degenerate(tuple, direction_from_int(j));
    const auto k = static_cast<std::size_t>(j - 1);
    check.delta[k] = report.delta;
    check.delta_prime[k] = report.delta_prime;
    check.rational_tails += report.rational_tail_count();
    if (report.delta != check.expected[k] || report.delta_prime != check.expected[k]) {
      fail("direction " + std::to_string(j) + ": delta " + to_string(report.delta) +
           ", delta' " + to_string(report.delta_prime) + ", expected " +
           to_string(check.expected[k]));
    }
    if (report.rational_tail_count() != 0 || report.dropped_node_count() != 0) {
      fail("direction " + std::to_string(j) + " has a rational tail");
    }
  }

  const SlopeReport report = slope(orbit);
  check.pipeline_slope = report.slope;
  check.pipeline_deg_lambda = report.deg_lambda;
  check.closed_form_slope = cyclic_slope(spec);
  check.lyapunov_sum = cyclic_lyapunov_sum(spec);
  if (check.pipeline_slope != check.closed_form_slope) {
    fail("pipeline slope " + to_string(check.pipeline_slope) + " differs from closed form " +
         to_string(check.closed_form_slope));
  }
  if (check.lyapunov_sum != 2 * check.pipeline_deg_lambda) {
    fail("Lyapunov sum " + to_string(check.lyapunov_sum) + " differs from 2 deg lambda " +
         to_string(2 * check.pipeline_deg_lambda));
  }
  if (cyclic_genus(spec) != genus_of_profile(tuple.profile())) {
    fail("closed-form genus differs from the profile genus");
  }
  return check;
}

}  // namespace hurwitz
