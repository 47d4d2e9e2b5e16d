#include <doctest.h>

#include "hurwitz/qdiff.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace hurwitz;

namespace {

OddPartition ones_then(int g) {
  std::vector<int> parts(static_cast<std::size_t>(g - 1), 1);
  parts.push_back(3 * g - 3);
  return OddPartition(parts);
}

}  // namespace

TEST_SUITE("qdiff") {
  TEST_CASE("odd partitions") {
    const OddPartition nu({3, 1});
    CHECK(nu.parts() == std::vector<int>{1, 3});
    CHECK(nu.genus() == 2);
    CHECK(nu.length() == 2);
    CHECK(nu.half_orders() == std::vector<int>{1, 2});
    CHECK(OddPartition({3, 3, 3, 3}).genus() == 4);
    CHECK_THROWS_AS(OddPartition({2, 2}), DomainError);
    CHECK_THROWS_AS(OddPartition({1, 1}), DomainError);
    CHECK_THROWS_AS(OddPartition({1, 1, 1}), DomainError);
    CHECK_THROWS_AS(OddPartition({}), DomainError);
    CHECK_THROWS_AS(OddPartition({-1, 5}), DomainError);
  }

  TEST_CASE("stratum profiles") {
    const OddPartition nu({1, 3});
    CHECK(minimal_degree(nu) == 8);
    const RamificationProfile p = stratum_profile(nu, 8);
    CHECK(p == parse_profile("5,3|2^4|2^4|2^4", 8));
    CHECK(genus_of_profile(p) == 2);
    const OddPartition four({1, 1, 1, 1});
    CHECK(stratum_profile(four, 12) == parse_profile("3^4|2^6|2^6|2^6", 12));
    CHECK(genus_of_profile(stratum_profile(four, 14)) == 2);
    CHECK_THROWS_AS(stratum_profile(nu, 6), DomainError);
    CHECK_THROWS_AS(stratum_profile(nu, 9), DomainError);
    CHECK_THROWS_AS(stratum_profile(nu, 66), DomainError);
    for (int g = 2; g <= 5; ++g) {
      for (const auto& part : oracle::partitions(4 * g - 4)) {
        bool odd = true;
        for (int x : part) odd = odd && x % 2 == 1;
        if (!odd) continue;
        const OddPartition mu(part);
        const int d = minimal_degree(mu);
        CHECK(d == 4 * g - 4 + 2 * static_cast<int>(mu.length()));
        if (d <= 64) CHECK(genus_of_profile(stratum_profile(mu, d)) == g);
      }
    }
  }

  TEST_CASE("kappa and the bounds") {
    CHECK(kappa(OddPartition({1, 1, 1, 1})) == Rational(5, 18));
    CHECK(kappa(OddPartition({1, 3})) == Rational(11, 45));
    CHECK(kappa(OddPartition({3, 3, 3, 3})) == Rational(7, 10));
    CHECK(asymptotic_bound(OddPartition({1, 1, 1, 1})) == Rational(216, 23));
    CHECK(asymptotic_bound(OddPartition({1, 3})) == Rational(135, 14));
    CHECK(asymptotic_bound(OddPartition({3, 3, 3, 3})) == Rational(120, 17));
    const int g = 10'000;
    const Rational ratio = asymptotic_bound(ones_then(g)) / Rational(432, 7 * g);
    CHECK(ratio > Rational(99, 100));
    CHECK(ratio < Rational(101, 100));
  }

  TEST_CASE("the (1,3) stratum is empty at small degree") {
    const OddPartition nu({1, 3});
    for (int d : {8, 10}) {
      const oracle::RawCount raw = oracle::raw_enumerate(stratum_profile(nu, d));
      CHECK(raw.classes.empty());
    }
    const auto rows = stratum_scan(nu, {6, 8, 10});
    REQUIRE(rows.size() == 3);
    CHECK_FALSE(rows[0].computed());
    for (std::size_t i = 1; i < 3; ++i) {
      CHECK(rows[i].N == 0);
      CHECK(rows[i].delta == 0);
      REQUIRE(rows[i].skipped_reason.has_value());
      CHECK(rows[i].skipped_reason->find("N = 0") != std::string::npos);
    }
  }

  TEST_CASE("the (1,1,1,1) stratum at degree 12 against the raw oracle") {
    const OddPartition nu({1, 1, 1, 1});
    const RamificationProfile p = stratum_profile(nu, 12);
    const oracle::RawCount raw = oracle::raw_enumerate(p);
    CHECK(raw.classes.size() == 39);
    Rational delta = 0;
    std::size_t tails = 0;
    for (const auto& t : raw.classes) {
      for (int j = 1; j <= 3; ++j) {
        const oracle::Weights w = oracle::degeneration_weights(t, j);
        delta += w.delta;
        tails += w.tails;
      }
    }
    CHECK(delta == 247);
    CHECK(tails == 0);

    const auto rows = stratum_scan(nu, {12});
    REQUIRE(rows.size() == 1);
    const StratumScanRow& row = rows[0];
    REQUIRE(row.computed());
    CHECK(row.N == 39);
    CHECK(row.delta == 247);
    CHECK(row.delta_prime == 247);
    CHECK(row.no_tails);
    CHECK(row.rational_tails == 0);
    CHECK(row.identity_holds);
    CHECK(row.sv_estimate == Rational(247, 234));
    CHECK(row.slope == tail_free_slope(nu, row.N, row.delta));
    for (const auto& o : row.orbits) {
      CHECK(o.identity_holds);
      CHECK(o.delta == o.delta_prime);
      CHECK(o.slope == tail_free_slope(nu, BigInt(o.size), o.delta));
    }
    const SvLyapunovReport sv = sv_lyapunov_relation(nu, row);
    CHECK(sv.identity_holds);
    CHECK(sv.L == sv.kappa + sv.c);
    CHECK(sv.slope == row.slope);
  }

  TEST_CASE("scan bookkeeping") {
    const OddPartition nu({1, 1, 1, 1});
    ScanOptions tight;
    tight.budget = 1;
    const auto skipped = stratum_scan(nu, {12}, tight);
    REQUIRE(skipped.size() == 1);
    REQUIRE(skipped[0].skipped_reason.has_value());
    CHECK(skipped[0].skipped_reason->find("exceeds budget") != std::string::npos);
    CHECK_THROWS_AS(sv_lyapunov_relation(nu, skipped[0]), DomainError);

    const auto rows = stratum_scan(nu, {12, 13, 14});
    REQUIRE(rows.size() == 3);
    CHECK_FALSE(rows[0].sv_difference.has_value());
    CHECK_FALSE(rows[1].computed());
    REQUIRE(rows[2].computed());
    CHECK(rows[2].N == 66);
    CHECK(rows[2].delta == 418);
    REQUIRE(rows[2].sv_difference.has_value());
    CHECK(*rows[2].sv_difference == rows[2].sv_estimate - rows[0].sv_estimate);
    CHECK(sv_lyapunov_relation(nu, rows[2]).identity_holds);
  }

  TEST_CASE("substituting c = kappa gives slope 6") {
    for (const auto& nu : {OddPartition({1, 3}), OddPartition({1, 1, 1, 1}), OddPartition({3, 5})}) {
      const BigInt n = 7;
      const Rational delta = 6 * Rational(n) * kappa(nu);
      CHECK(tail_free_slope(nu, n, delta) == 6);
    }
  }

  TEST_CASE("de Jonquieres counts") {
    CHECK(de_jonquieres_count(2, {1, 3}) == 18);
    CHECK(de_jonquieres_count(2, {4}) == 32);
    CHECK_THROWS_AS(de_jonquieres_count(2, {1, 2}), DomainError);
    CHECK_THROWS_AS(de_jonquieres_count(2, {1, 1, 1, 1}), DomainError);
    CHECK_THROWS_AS(de_jonquieres_count(0, {}), DomainError);
    CHECK_THROWS_AS(de_jonquieres_count(2, {0, 4}), DomainError);
    for (int g = 1; g <= 4; ++g) {
      for (const auto& zeros : oracle::partitions(4 * g - 4)) {
        if (static_cast<int>(zeros.size()) > g) continue;
        const BigInt count = de_jonquieres_count(g, zeros);
        CHECK(count > 0);
        CHECK(count == oracle::expand_coefficient(g, zeros));
      }
    }
  }
}
