#include "hurwitz/enumerate.hpp"

#include <algorithm>
#include <string_view>
#include <thread>
#include <unordered_set>

#include "flat_tuple.hpp"

namespace hurwitz {

RamificationProfile::RamificationProfile(std::array<CycleType, 4> classes)
    : classes_(std::move(classes)) {
  const std::size_t d = classes_[0].degree();
  for (const auto& c : classes_) {
    if (c.degree() != d) throw DomainError("profile classes have different degrees");
  }
  if (d < 1 || d > kMaxDegree) throw DomainError("profile degree out of range");
}

bool RamificationProfile::parity_ok() const {
  std::size_t total = 0;
  for (const auto& c : classes_) total += degree() - c.num_cycles();
  return total % 2 == 0;
}

int genus_of_profile(const RamificationProfile& profile) {
  if (!profile.parity_ok()) {
    throw DomainError("profile violates the parity condition: sum of (d - k_i) is odd");
  }
  int cycles = 0;
  for (const auto& c : profile.classes()) cycles += static_cast<int>(c.num_cycles());
  return static_cast<int>(profile.degree()) + 1 - cycles / 2;
}

void validate_tuple(const std::array<Permutation, 4>& entries) {
  const std::size_t d = entries[0].degree();
  if (d == 0) throw DomainError("monodromy tuple entries are empty");
  for (const auto& p : entries) {
    if (p.degree() != d) throw DomainError("monodromy tuple entries have different degrees");
  }
  const Permutation product =
      compose(entries[0], compose(entries[1], compose(entries[2], entries[3])));
  if (!product.is_identity()) {
    throw DomainError("monodromy tuple product g1 g2 g3 g4 is not the identity");
  }
  if (orbits_under(entries, d).size() != 1) {
    throw DomainError("monodromy tuple does not generate a transitive group");
  }
}

MonodromyTuple::MonodromyTuple(std::array<Permutation, 4> entries)
    : entries_(std::move(entries)) {
  validate_tuple(entries_);
}

MonodromyTuple MonodromyTuple::from_flat(std::span<const Letter> flat, std::size_t degree) {
  std::array<Permutation, 4> entries;
  for (std::size_t i = 0; i < 4; ++i) {
    entries[i] = Permutation::unchecked(
        std::vector<Letter>(flat.begin() + i * degree, flat.begin() + (i + 1) * degree));
  }
  return unchecked(std::move(entries));
}

RamificationProfile MonodromyTuple::profile() const {
  return RamificationProfile({cycle_type(entries_[0]), cycle_type(entries_[1]),
                              cycle_type(entries_[2]), cycle_type(entries_[3])});
}

std::vector<Letter> MonodromyTuple::flat() const {
  std::vector<Letter> out;
  out.reserve(4 * degree());
  for (const auto& p : entries_) out.insert(out.end(), p.images().begin(), p.images().end());
  return out;
}

std::size_t anchor_position(const RamificationProfile& profile) {
  std::array<BigInt, 4> sizes;
  for (std::size_t i = 0; i < 4; ++i) sizes[i] = profile[i].centralizer_order();
  const std::size_t smallest =
      static_cast<std::size_t>(std::min_element(sizes.begin(), sizes.end()) - sizes.begin());
  if (sizes[0] > sizes[smallest] * kAnchorSwitchRatio) return smallest;
  return 0;
}

Canonicalizer::Canonicalizer(const RamificationProfile& profile)
    : degree_(profile.degree()), anchor_(anchor_position(profile)) {
  const CycleType& ct = profile[anchor_];
  std::size_t start = 0;
  for (int length : ct.parts()) {
    block_start_.push_back(start);
    block_length_.push_back(length);
    start += static_cast<std::size_t>(length);
  }
  const Permutation rep = canonical_class_rep(ct);
  target_.assign(rep.images().begin(), rep.images().end());
  tau_.resize(degree_);
  tau_inv_.resize(degree_);
}

void Canonicalizer::canonicalize(std::span<const Letter> flat, std::span<Letter> out) {
  input_ = flat.data();
  best_ = out.data();
  std::fill(out.begin(), out.end(), Letter{0xFF});

  // Cycles of the anchor entry, each listed from an arbitrary start.
  cycles_.clear();
  const Letter* anchor = input_ + anchor_ * degree_;
  std::uint64_t seen = 0;
  for (std::size_t x = 0; x < degree_; ++x) {
    if (seen >> x & 1u) continue;
    std::vector<Letter> cycle;
    for (std::size_t y = x; !(seen >> y & 1u); y = anchor[y]) {
      seen |= std::uint64_t{1} << y;
      cycle.push_back(static_cast<Letter>(y));
    }
    cycles_.push_back(std::move(cycle));
  }
  cycle_used_.assign(cycles_.size(), false);
  search(0);
  std::copy(target_.begin(), target_.end(), best_ + anchor_ * degree_);
}

void Canonicalizer::search(std::size_t block) {
  if (block == block_start_.size()) {
    evaluate();
    return;
  }
  const auto length = static_cast<std::size_t>(block_length_[block]);
  const std::size_t start = block_start_[block];
  for (std::size_t c = 0; c < cycles_.size(); ++c) {
    if (cycle_used_[c] || cycles_[c].size() != length) continue;
    cycle_used_[c] = true;
    const auto& cycle = cycles_[c];
    for (std::size_t rot = 0; rot < length; ++rot) {
      for (std::size_t j = 0; j < length; ++j) {
        const auto image = static_cast<Letter>(start + (j + rot) % length);
        tau_[cycle[j]] = image;
        tau_inv_[image] = cycle[j];
      }
      search(block + 1);
    }
    cycle_used_[c] = false;
  }
}

void Canonicalizer::evaluate() {
  bool better = false;
  for (std::size_t b = 0; b < 4; ++b) {
    if (b == anchor_) continue;
    const Letter* p = input_ + b * degree_;
    Letter* dst = best_ + b * degree_;
    for (std::size_t y = 0; y < degree_; ++y) {
      const Letter v = tau_[p[tau_inv_[y]]];
      if (better) {
        dst[y] = v;
      } else if (v < dst[y]) {
        better = true;
        dst[y] = v;
      } else if (v > dst[y]) {
        return;
      }
    }
  }
}

MonodromyTuple canonicalize(const MonodromyTuple& r) {
  Canonicalizer canon(r.profile());
  const std::vector<Letter> flat = r.flat();
  std::vector<Letter> out(flat.size());
  canon.canonicalize(flat, out);
  return MonodromyTuple::from_flat(out, r.degree());
}

bool equivalent(const MonodromyTuple& r, const MonodromyTuple& s) {
  if (r.degree() != s.degree()) throw DomainError("tuples of different degrees");
  if (r.profile() != s.profile()) return false;
  return canonicalize(r) == canonicalize(s);
}

std::vector<CycleType> cycle_types_of_degree(std::size_t degree) {
  std::vector<CycleType> out;
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(parts);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      parts.push_back(part);
      self(self, remaining - part, part);
      parts.pop_back();
    }
  };
  rec(rec, static_cast<int>(degree), static_cast<int>(degree));
  return out;
}

namespace {

struct SearchPlan {
  std::size_t anchor;
  std::size_t first;   // enumerated, reduced by the anchor's centralizer
  std::size_t second;  // enumerated in full
  std::size_t solved;  // forced by the product relation
};

SearchPlan plan_search(const RamificationProfile& profile) {
  SearchPlan plan{};
  plan.anchor = anchor_position(profile);
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i != plan.anchor) others.push_back(i);
  }
  // Solve for the largest class; ties go to the later position.
  std::size_t solved_index = 0;
  for (std::size_t k = 1; k < others.size(); ++k) {
    if (profile[others[k]].class_size() >= profile[others[solved_index]].class_size()) {
      solved_index = k;
    }
  }
  plan.solved = others[solved_index];
  others.erase(others.begin() + static_cast<std::ptrdiff_t>(solved_index));
  plan.first = others[0];
  plan.second = others[1];
  return plan;
}

/// Elements of the class that are lexicographically minimal under
/// conjugation by the centralizer.
std::vector<Permutation> reduce_by_centralizer(const std::vector<Permutation>& elements,
                                               const std::vector<Permutation>& centralizer) {
  std::vector<Permutation> out;
  for (const auto& e : elements) {
    bool minimal = true;
    for (const auto& z : centralizer) {
      if (conjugate(e, z) < e) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(e);
  }
  return out;
}

using KeySet = std::unordered_set<std::vector<Letter>, detail::FlatHash>;

void search_range(const RamificationProfile& profile, const SearchPlan& plan,
                  const Permutation& anchor_rep, const std::vector<Permutation>& firsts,
                  const std::vector<Permutation>& seconds, std::size_t offset,
                  std::size_t stride, KeySet& found) {
  const std::size_t d = profile.degree();
  Canonicalizer canon(profile);
  std::vector<Letter> flat(4 * d);
  std::vector<Letter> key(4 * d);
  std::vector<Letter> product(d);
  std::vector<int> target = profile[plan.solved].parts();
  std::copy(anchor_rep.images().begin(), anchor_rep.images().end(),
            flat.begin() + static_cast<std::ptrdiff_t>(plan.anchor * d));

  const std::size_t p1 = (plan.solved + 1) % 4;
  const std::size_t p2 = (plan.solved + 2) % 4;
  const std::size_t p3 = (plan.solved + 3) % 4;
  for (std::size_t i = offset; i < firsts.size(); i += stride) {
    std::copy(firsts[i].images().begin(), firsts[i].images().end(),
              flat.begin() + static_cast<std::ptrdiff_t>(plan.first * d));
    for (const auto& second : seconds) {
      std::copy(second.images().begin(), second.images().end(),
                flat.begin() + static_cast<std::ptrdiff_t>(plan.second * d));
      const Letter* a = flat.data() + p1 * d;
      const Letter* b = flat.data() + p2 * d;
      const Letter* c = flat.data() + p3 * d;
      for (std::size_t x = 0; x < d; ++x) product[x] = a[b[c[x]]];
      if (!detail::has_cycle_type(product.data(), d, target)) continue;
      Letter* solved = flat.data() + plan.solved * d;
      for (std::size_t x = 0; x < d; ++x) solved[product[x]] = static_cast<Letter>(x);
      if (!detail::is_transitive(flat.data(), d)) continue;
      canon.canonicalize(flat, key);
      found.insert(key);
    }
  }
}

}  // namespace

BigInt search_cost(const RamificationProfile& profile) {
  const SearchPlan plan = plan_search(profile);
  const BigInt reduced = profile[plan.first].class_size() /
                         profile[plan.anchor].centralizer_order();
  return (reduced + 1) * profile[plan.second].class_size();
}

CoverSet enumerate_covers(const RamificationProfile& profile, const EnumerateOptions& options) {
  CoverSet result{profile, {}};
  if (!profile.parity_ok() || genus_of_profile(profile) < 0) return result;

  const std::size_t d = profile.degree();
  const SearchPlan plan = plan_search(profile);
  const Permutation anchor_rep = canonical_class_rep(profile[plan.anchor]);
  const std::vector<Permutation> firsts = reduce_by_centralizer(
      class_elements(profile[plan.first]), centralizer_elements(profile[plan.anchor]));
  const std::vector<Permutation> seconds = class_elements(profile[plan.second]);

  const std::size_t workers = std::max<std::size_t>(1, options.threads);
  std::vector<KeySet> found(workers);
  if (workers == 1) {
    search_range(profile, plan, anchor_rep, firsts, seconds, 0, 1, found[0]);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        search_range(profile, plan, anchor_rep, firsts, seconds, w, workers, found[w]);
      });
    }
  }

  std::vector<std::vector<Letter>> keys;
  for (auto& set : found) keys.insert(keys.end(), set.begin(), set.end());
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  result.representatives.reserve(keys.size());
  for (const auto& key : keys) result.representatives.push_back(MonodromyTuple::from_flat(key, d));
  return result;
}

std::map<RamificationProfile, CoverSet> enumerate_all_covers(std::size_t degree) {
  if (degree < 1 || degree > 8) throw DomainError("enumerate_all_covers supports 1 <= d <= 8");
  const std::size_t d = degree;
  std::vector<Permutation> group;
  for (const auto& ct : cycle_types_of_degree(d)) {
    auto elements = class_elements(ct);
    group.insert(group.end(), elements.begin(), elements.end());
  }

  std::map<RamificationProfile, std::pair<Canonicalizer, KeySet>> buckets;
  std::vector<Letter> flat(4 * d);
  std::vector<Letter> key(4 * d);
  for (const auto& c1 : cycle_types_of_degree(d)) {
    const Permutation rep = canonical_class_rep(c1);
    const auto seconds = reduce_by_centralizer(group, centralizer_elements(c1));
    std::copy(rep.images().begin(), rep.images().end(), flat.begin());
    for (const auto& g2 : seconds) {
      std::copy(g2.images().begin(), g2.images().end(), flat.begin() + static_cast<std::ptrdiff_t>(d));
      for (const auto& g3 : group) {
        std::copy(g3.images().begin(), g3.images().end(),
                  flat.begin() + static_cast<std::ptrdiff_t>(2 * d));
        Letter* g4 = flat.data() + 3 * d;
        for (std::size_t x = 0; x < d; ++x) g4[rep[g2[g3[x]]]] = static_cast<Letter>(x);
        if (!detail::is_transitive(flat.data(), d)) continue;
        const MonodromyTuple tuple = MonodromyTuple::from_flat(flat, d);
        RamificationProfile profile = tuple.profile();
        auto it = buckets.find(profile);
        if (it == buckets.end()) {
          it = buckets
                   .emplace(std::piecewise_construct, std::forward_as_tuple(profile),
                            std::forward_as_tuple(Canonicalizer(profile), KeySet{}))
                   .first;
        }
        it->second.first.canonicalize(flat, key);
        it->second.second.insert(key);
      }
    }
  }

  std::map<RamificationProfile, CoverSet> out;
  for (auto& [profile, bucket] : buckets) {
    std::vector<std::vector<Letter>> keys(bucket.second.begin(), bucket.second.end());
    std::sort(keys.begin(), keys.end());
    CoverSet set{profile, {}};
    for (const auto& k : keys) set.representatives.push_back(MonodromyTuple::from_flat(k, d));
    out.emplace(profile, std::move(set));
  }
  return out;
}

}  // namespace hurwitz
