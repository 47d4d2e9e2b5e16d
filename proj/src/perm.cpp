#include "hurwitz/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace hurwitz {

namespace {

void require_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DomainError("permutation degree mismatch: " + std::to_string(p.degree()) +
                      " vs " + std::to_string(q.degree()));
  }
}

void require_degree(std::size_t degree) {
  if (degree < 1 || degree > kMaxDegree) {
    throw DomainError("permutation degree " + std::to_string(degree) +
                      " outside 1.." + std::to_string(kMaxDegree));
  }
}

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

Permutation Permutation::identity(std::size_t degree) {
  require_degree(degree);
  std::vector<Letter> images(degree);
  std::iota(images.begin(), images.end(), Letter{0});
  return unchecked(std::move(images));
}

Permutation Permutation::from_images(std::vector<Letter> images) {
  require_degree(images.size());
  std::vector<bool> seen(images.size(), false);
  for (Letter x : images) {
    if (x >= images.size() || seen[x]) {
      throw DomainError("image array is not a bijection");
    }
    seen[x] = true;
  }
  return unchecked(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<int>>& cycles) {
  require_degree(degree);
  std::vector<Letter> images(degree);
  std::iota(images.begin(), images.end(), Letter{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (int point : cycle) {
      if (point < 1 || static_cast<std::size_t>(point) > degree) {
        throw DomainError("point " + std::to_string(point) + " outside 1.." +
                          std::to_string(degree));
      }
      if (used[point - 1]) {
        throw DomainError("point " + std::to_string(point) + " appears twice");
      }
      used[point - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const int from = cycle[i];
      const int to = cycle[(i + 1) % cycle.size()];
      images[from - 1] = static_cast<Letter>(to - 1);
    }
  }
  return unchecked(std::move(images));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::vector<std::vector<int>> Permutation::cycles(bool include_fixed) const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(static_cast<int>(x) + 1);
    }
    if (cycle.size() > 1 || include_fixed) out.push_back(std::move(cycle));
  }
  return out;
}

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw DomainError("cycle type needs at least one part");
  std::size_t total = 0;
  for (int part : parts_) {
    if (part < 1) throw DomainError("cycle type parts must be positive");
    total += static_cast<std::size_t>(part);
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  degree_ = total;
}

BigInt CycleType::centralizer_order() const {
  std::map<int, std::size_t> multiplicity;
  for (int part : parts_) ++multiplicity[part];
  BigInt order = 1;
  for (const auto& [length, count] : multiplicity) {
    order *= boost::multiprecision::pow(BigInt(length), static_cast<unsigned>(count));
    order *= factorial(count);
  }
  return order;
}

BigInt CycleType::class_size() const { return factorial(degree_) / centralizer_order(); }

Rational CycleType::reciprocal_sum() const {
  Rational sum = 0;
  for (int part : parts_) sum += Rational(1, part);
  return sum;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q);
  std::vector<Letter> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[x] = p[q[x]];
  return Permutation::unchecked(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<Letter> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[p[x]] = static_cast<Letter>(x);
  return Permutation::unchecked(std::move(images));
}

Permutation conjugate(const Permutation& p, const Permutation& t) {
  require_same_degree(p, t);
  // (t p t^-1)(t(x)) = t(p(x))
  std::vector<Letter> images(p.degree());
  for (std::size_t x = 0; x < images.size(); ++x) images[t[x]] = t[p[x]];
  return Permutation::unchecked(std::move(images));
}

CycleType cycle_type(const Permutation& p) {
  if (p.degree() == 0) throw DomainError("cycle type of an empty permutation");
  std::vector<int> parts;
  for (const auto& cycle : p.cycles(true)) parts.push_back(static_cast<int>(cycle.size()));
  return CycleType(std::move(parts));
}

std::vector<std::vector<int>> orbits_under(std::span<const Permutation> generators,
                                           std::size_t degree) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw DomainError("generator degree mismatch");
  }
  std::vector<int> label(degree, -1);
  std::vector<std::vector<int>> orbits;
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < degree; ++start) {
    if (label[start] >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    orbits.emplace_back();
    label[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      orbits.back().push_back(static_cast<int>(x) + 1);
      for (const auto& g : generators) {
        const std::size_t y = g[x];
        if (label[y] < 0) {
          label[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(orbits.back().begin(), orbits.back().end());
  }
  return orbits;
}

Permutation canonical_class_rep(const CycleType& ct) {
  require_degree(ct.degree());
  std::vector<Letter> images(ct.degree());
  std::size_t start = 0;
  for (int length : ct.parts()) {
    for (int i = 0; i < length; ++i) {
      images[start + i] = static_cast<Letter>(start + (i + 1) % length);
    }
    start += static_cast<std::size_t>(length);
  }
  return Permutation::unchecked(std::move(images));
}

namespace {

struct ClassGenerator {
  std::size_t degree;
  std::map<int, int, std::greater<>> remaining;  // length -> count
  std::vector<Letter> images;
  std::vector<bool> used;
  std::vector<Permutation>* out;

  void run() {
    std::size_t first = 0;
    while (first < degree && used[first]) ++first;
    if (first == degree) {
      out->push_back(Permutation::unchecked(images));
      return;
    }
    for (auto& [length, count] : remaining) {
      if (count == 0) continue;
      --count;
      used[first] = true;
      std::vector<Letter> cycle{static_cast<Letter>(first)};
      extend(cycle, length);
      used[first] = false;
      ++count;
    }
  }

  void extend(std::vector<Letter>& cycle, int length) {
    if (static_cast<int>(cycle.size()) == length) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
      run();
      return;
    }
    for (std::size_t y = cycle.front() + 1; y < degree; ++y) {
      if (used[y]) continue;
      used[y] = true;
      cycle.push_back(static_cast<Letter>(y));
      extend(cycle, length);
      cycle.pop_back();
      used[y] = false;
    }
  }
};

}  // namespace

std::vector<Permutation> class_elements(const CycleType& ct) {
  require_degree(ct.degree());
  ClassGenerator gen;
  gen.degree = ct.degree();
  for (int part : ct.parts()) ++gen.remaining[part];
  gen.images.assign(ct.degree(), 0);
  gen.used.assign(ct.degree(), false);
  std::vector<Permutation> out;
  gen.out = &out;
  gen.run();
  return out;
}

std::vector<Permutation> centralizer_elements(const CycleType& ct) {
  require_degree(ct.degree());
  // Blocks of the canonical representative, grouped by length.
  std::vector<std::size_t> starts;
  std::size_t start = 0;
  for (int length : ct.parts()) {
    starts.push_back(start);
    start += static_cast<std::size_t>(length);
  }
  const auto& parts = ct.parts();
  std::vector<Letter> images(ct.degree());
  std::vector<bool> block_used(parts.size(), false);
  std::vector<Permutation> out;

  std::function<void(std::size_t)> assign = [&](std::size_t block) {
    if (block == parts.size()) {
      out.push_back(Permutation::unchecked(images));
      return;
    }
    const int length = parts[block];
    for (std::size_t target = 0; target < parts.size(); ++target) {
      if (block_used[target] || parts[target] != length) continue;
      block_used[target] = true;
      for (int rot = 0; rot < length; ++rot) {
        for (int i = 0; i < length; ++i) {
          images[starts[block] + i] = static_cast<Letter>(starts[target] + (i + rot) % length);
        }
        assign(block + 1);
      }
      block_used[target] = false;
    }
  };
  assign(0);
  return out;
}

}  // namespace hurwitz

std::size_t std::hash<hurwitz::Permutation>::operator()(
    const hurwitz::Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}
