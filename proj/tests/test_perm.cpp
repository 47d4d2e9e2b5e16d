#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "support.hpp"

using namespace hurwitz;
using support::perm;

TEST_SUITE("perm") {
  TEST_CASE("compose applies the right factor first") {
    CHECK(compose(perm("(1 2 3)", 3), Permutation::identity(3)) == perm("(1 2 3)", 3));
    CHECK(compose(perm("(1 2 3)", 3), perm("(1 3 2)", 3)).is_identity());
    CHECK(compose(perm("(1 2)", 3), perm("(2 3)", 3)).apply(2) == 3);
    CHECK(compose(perm("(1 2)", 3), perm("(2 3)", 3)) == perm("(1 2 3)", 3));
    CHECK_THROWS_AS(compose(perm("(1 2)", 2), perm("(1 2)", 3)), DomainError);
  }

  TEST_CASE("only right-first composition closes the printed degree-4 tuples") {
    for (const char* text : support::kExampleOrbit) {
      const auto pieces = std::string(text);
      std::array<Permutation, 4> g;
      std::size_t start = 0;
      for (std::size_t i = 0; i < 4; ++i) {
        const std::size_t end = pieces.find(';', start);
        g[i] = perm(pieces.substr(start, end - start), 4);
        start = end + 1;
      }
      CHECK(compose(g[0], compose(g[1], compose(g[2], g[3]))).is_identity());
      if (std::string(text) == support::kExampleOrbit[5]) {
        // Left-first reading: apply g1, then g2, g3, g4.
        CHECK_FALSE(compose(g[3], compose(g[2], compose(g[1], g[0]))).is_identity());
      }
    }
  }

  TEST_CASE("inverse") {
    CHECK(inverse(Permutation::identity(4)).is_identity());
    CHECK(inverse(perm("(1 2 3 4)", 4)) == perm("(1 4 3 2)", 4));
    CHECK(inverse(perm("(1 2)(3 4)", 4)) == perm("(1 2)(3 4)", 4));
  }

  TEST_CASE("conjugate relabels") {
    const Permutation p = perm("(1 2 4)", 4);
    CHECK(conjugate(p, Permutation::identity(4)) == p);
    CHECK(conjugate(perm("(1 2)", 3), perm("(2 3)", 3)) == perm("(1 3)", 3));
  }

  TEST_CASE("cycle_type") {
    CHECK(cycle_type(Permutation::identity(4)).parts() == std::vector<int>{1, 1, 1, 1});
    CHECK(cycle_type(perm("(1 2 4)", 4)).parts() == std::vector<int>{3, 1});
    CHECK(cycle_type(compose(perm("(1 2 3)", 4), perm("(1 2 4)", 4))).parts() ==
          std::vector<int>{2, 2});
  }

  TEST_CASE("orbits_under") {
    const std::vector<Permutation> four{perm("(1 2 3 4)", 4)};
    CHECK(orbits_under(four, 4) == std::vector<std::vector<int>>{{1, 2, 3, 4}});
    const std::vector<Permutation> three{perm("(1 2 3)", 4)};
    CHECK(orbits_under(three, 4) == std::vector<std::vector<int>>{{1, 2, 3}, {4}});
    CHECK(orbits_under({}, 3) == std::vector<std::vector<int>>{{1}, {2}, {3}});
  }

  TEST_CASE("canonical_class_rep uses consecutive blocks, longest first") {
    CHECK(canonical_class_rep(CycleType({4})) == perm("(1 2 3 4)", 4));
    CHECK(canonical_class_rep(CycleType({3, 1})) == perm("(1 2 3)", 4));
    CHECK(canonical_class_rep(CycleType({2, 2})) == perm("(1 2)(3 4)", 4));
    CHECK(canonical_class_rep(CycleType({1, 2, 3})) == perm("(1 2 3)(4 5)", 6));
  }

  TEST_CASE("CycleType validation and counting") {
    CHECK_THROWS_AS(CycleType(std::vector<int>{}), DomainError);
    CHECK_THROWS_AS(CycleType({2, 0}), DomainError);
    const CycleType ct({2, 2, 1});
    CHECK(ct.degree() == 5);
    CHECK(ct.num_cycles() == 3);
    CHECK(ct.centralizer_order() == 8);
    CHECK(ct.class_size() == 15);
    CHECK(ct.reciprocal_sum() == Rational(2));
  }

  TEST_CASE("from_images and from_cycles reject bad input") {
    CHECK_THROWS_AS(Permutation::from_images({0, 0}), DomainError);
    CHECK_THROWS_AS(Permutation::from_images({}), DomainError);
    CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 4}}), DomainError);
    CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 2}, {2, 3}}), DomainError);
    CHECK(Permutation::from_cycles(4, {{2, 4}}).apply(4) == 2);
  }

  TEST_CASE("class_elements and centralizer_elements against brute force") {
    for (std::size_t d = 1; d <= 6; ++d) {
      for (const CycleType& ct : cycle_types_of_degree(d)) {
        const auto elements = class_elements(ct);
        CHECK(BigInt(elements.size()) == ct.class_size());
        std::set<std::vector<int>> mine;
        for (const auto& p : elements) {
          CHECK(cycle_type(p) == ct);
          mine.insert(std::vector<int>(p.images().begin(), p.images().end()));
        }
        const auto brute = oracle::class_members(d, ct.parts());
        CHECK(std::set<std::vector<int>>(brute.begin(), brute.end()) == mine);

        const Permutation rep = canonical_class_rep(ct);
        const auto z = centralizer_elements(ct);
        CHECK(BigInt(z.size()) == ct.centralizer_order());
        std::set<Permutation> distinct(z.begin(), z.end());
        CHECK(distinct.size() == z.size());
        for (const auto& t : z) CHECK(compose(t, rep) == compose(rep, t));
      }
    }
  }

  TEST_CASE("random algebraic properties") {
    std::mt19937 rng(20240511);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t d = 1 + static_cast<std::size_t>(trial % 10);
      const Permutation p = support::random_perm(d, rng);
      const Permutation q = support::random_perm(d, rng);
      const Permutation r = support::random_perm(d, rng);
      const Permutation id = Permutation::identity(d);
      CHECK(compose(p, compose(q, r)) == compose(compose(p, q), r));
      CHECK(compose(p, id) == p);
      CHECK(compose(id, p) == p);
      CHECK(compose(p, inverse(p)).is_identity());
      CHECK(cycle_type(conjugate(p, q)) == cycle_type(p));

      // Orbits against a reachability closure on {0..d-1}.
      const std::vector<Permutation> gens{p, q};
      std::vector<std::vector<int>> closure;
      std::vector<bool> seen(d, false);
      for (std::size_t s = 0; s < d; ++s) {
        if (seen[s]) continue;
        std::vector<int> orbit{static_cast<int>(s)};
        seen[s] = true;
        bool grew = true;
        while (grew) {
          grew = false;
          for (std::size_t i = 0; i < orbit.size(); ++i) {
            for (const auto& g : gens) {
              const std::size_t y = g[static_cast<std::size_t>(orbit[i])];
              if (!seen[y]) {
                seen[y] = true;
                orbit.push_back(static_cast<int>(y));
                grew = true;
              }
            }
          }
        }
        std::sort(orbit.begin(), orbit.end());
        for (int& x : orbit) ++x;
        closure.push_back(orbit);
      }
      CHECK(orbits_under(gens, d) == closure);
    }
  }
}
