#include <doctest.h>

#include "support.hpp"

using namespace hurwitz;

TEST_SUITE("notation") {
  TEST_CASE("parse_permutation examples") {
    const Permutation four = parse_permutation("(1 2 3 4)", 4);
    CHECK(four.degree() == 4);
    CHECK(cycle_type(four).parts() == std::vector<int>{4});
    CHECK(parse_permutation("id", 5) == Permutation::identity(5));
    const Permutation two = parse_permutation("(1 2)(3 4)", 6);
    CHECK(two.degree() == 6);
    CHECK(two.apply(5) == 5);
    CHECK(two.apply(6) == 6);
    CHECK(two.apply(3) == 4);
    CHECK(parse_permutation("(1,2,3)", 3) == parse_permutation("(1 2 3)", 3));
    CHECK(parse_permutation(" (1 3) (2 4) ", 4) == parse_permutation("(1 3)(2 4)", 4));
    CHECK(parse_permutation("(1 2 3)").degree() == 3);
  }

  TEST_CASE("parse errors carry positions") {
    auto position_of = [](std::string_view text, std::optional<std::size_t> d) {
      try {
        parse_permutation(text, d);
      } catch (const ParseError& e) {
        return static_cast<long>(e.position());
      }
      return -1L;
    };
    CHECK(position_of("(1 2)(2 3)", 3) == 6);  // overlap
    CHECK(position_of("(1 5)", 4) == 3);       // out of range
    CHECK(position_of("(1 2", 4) == 4);        // unterminated
    CHECK(position_of("1 2)", 4) == 0);        // missing '('
    CHECK(position_of("()", 4) == 1);          // empty cycle
    CHECK(position_of("(1 x)", 4) == 3);       // not an integer
    CHECK(position_of("(0 1)", 4) == 1);       // points are 1-based
    CHECK(position_of("", 4) == 0);
    CHECK(position_of("id", std::nullopt) == 0);
    CHECK(position_of("id (1 2)", 4) == 3);
  }

  TEST_CASE("format round-trips") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t d = 1 + static_cast<std::size_t>(trial % 12);
      const Permutation p = support::random_perm(d, rng);
      CHECK(parse_permutation(format_permutation(p), d) == p);
    }
    CHECK(format_permutation(Permutation::identity(3)) == "id");
    CHECK(format_permutation(parse_permutation("(3 1 2)(5 4)", 5)) == "(1 2 3)(4 5)");
  }

  TEST_CASE("profiles") {
    const RamificationProfile p = parse_profile("4|4|3,1|3", 4);
    CHECK(p[2] == CycleType({3, 1}));
    CHECK(p[3] == CycleType({3, 1}));
    CHECK(format_profile(p) == "4|4|3,1|3,1");
    const RamificationProfile q = parse_profile("5,3|2^4|2^4|2,2,2,2", 8);
    CHECK(q[1] == CycleType({2, 2, 2, 2}));
    CHECK(q[3] == q[1]);
    CHECK(parse_profile("|||", 3)[0] == CycleType({1, 1, 1}));
    CHECK_THROWS_AS(parse_profile("4|4|3,1", 4), ParseError);
    CHECK_THROWS_AS(parse_profile("4|4|3,2|3,1", 4), ParseError);
    CHECK_THROWS_AS(parse_profile("4|4|3;1|3,1", 4), ParseError);
    CHECK_THROWS_AS(parse_profile("4|4|3,|3,1", 4), ParseError);
    CHECK_THROWS_AS(parse_profile("2|2|2|2", 0), ParseError);
  }

  TEST_CASE("tuples") {
    const MonodromyTuple r = parse_tuple("(1 2 3 4);(1 4 3 2);(1 2 3);(1 3 2)");
    CHECK(r.degree() == 4);
    CHECK(format_tuple(r) == "(1 2 3 4); (1 4 3 2); (1 2 3); (1 3 2)");
    CHECK(parse_tuple(format_tuple(r), 4) == r);
    CHECK(parse_tuple("(1 2);(1 2);id;id").degree() == 2);
    CHECK_THROWS_AS(parse_tuple("(1 2);(1 2);(1 2)"), ParseError);
    CHECK_THROWS_AS(parse_tuple("(1 2);(1 2);(1 2);id"), DomainError);  // product
    CHECK_THROWS_AS(parse_tuple("(1 2);(1 2);id;id", 3), DomainError);  // not transitive
    try {
      parse_tuple("(1 2);(1 2);(1 3)(1 2);id");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 18);
    }
  }
}
