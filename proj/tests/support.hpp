#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "hurwitz/notation.hpp"

namespace support {

inline hurwitz::Permutation perm(const std::string& text, std::size_t degree) {
  return hurwitz::parse_permutation(text, degree);
}

inline hurwitz::MonodromyTuple tuple(const std::string& text, std::size_t degree) {
  return hurwitz::parse_tuple(text, degree);
}

inline hurwitz::Permutation random_perm(std::size_t d, std::mt19937& rng) {
  std::vector<hurwitz::Letter> images(d);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return hurwitz::Permutation::from_images(std::move(images));
}

inline hurwitz::MonodromyTuple conjugate_tuple(const hurwitz::MonodromyTuple& r,
                                               const hurwitz::Permutation& t) {
  std::array<hurwitz::Permutation, 4> entries;
  for (std::size_t i = 0; i < 4; ++i) entries[i] = hurwitz::conjugate(r[i], t);
  return hurwitz::MonodromyTuple(std::move(entries));
}

/// A random transitive tuple: g1, g2, g3 random, g4 closes the product.
/// Retries until the generated group is transitive.
inline hurwitz::MonodromyTuple random_tuple(std::size_t d, std::mt19937& rng) {
  while (true) {
    std::array<hurwitz::Permutation, 4> e{random_perm(d, rng), random_perm(d, rng),
                                          random_perm(d, rng), {}};
    e[3] = hurwitz::inverse(hurwitz::compose(e[0], hurwitz::compose(e[1], e[2])));
    try {
      return hurwitz::MonodromyTuple(std::move(e));
    } catch (const hurwitz::DomainError&) {
    }
  }
}

// The six classes of the non-cyclic degree-4 orbit, as printed.
inline const std::array<const char*, 6> kExampleOrbit{
    "(1 2 3 4);(1 4 3 2);(1 2 3);(1 3 2)", "(1 2 3 4);(1 4 3 2);(1 3 2);(1 2 3)",
    "(1 2 3 4);(1 3 2 4);(1 2 3);(2 4 3)", "(1 2 3 4);(1 3 2 4);(1 3 4);(1 2 3)",
    "(1 2 3 4);(1 3 2 4);(2 4 3);(1 3 4)", "(1 2 3 4);(1 2 3 4);(1 2 3);(1 2 4)",
};

inline hurwitz::MonodromyTuple example_member(std::size_t i) {
  return tuple(kExampleOrbit[i], 4);
}

/// (gamma^a1, ..., gamma^a4) for gamma = (1 2 ... d), built by hand.
inline hurwitz::MonodromyTuple power_tuple(int d, std::array<int, 4> a) {
  std::array<hurwitz::Permutation, 4> e;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<hurwitz::Letter> images(static_cast<std::size_t>(d));
    const int shift = ((a[i] % d) + d) % d;
    for (int x = 0; x < d; ++x) images[static_cast<std::size_t>(x)] = static_cast<hurwitz::Letter>((x + shift) % d);
    e[i] = hurwitz::Permutation::from_images(std::move(images));
  }
  return hurwitz::MonodromyTuple(std::move(e));
}

}  // namespace support
