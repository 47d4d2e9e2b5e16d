#include "hurwitz/degen.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hurwitz {

Direction direction_from_int(int j) {
  if (j < 1 || j > 3) {
    throw DomainError("degeneration direction must be 1, 2 or 3, got " + std::to_string(j));
  }
  return static_cast<Direction>(j);
}

std::size_t DegenerationReport::rational_tail_count() const {
  return static_cast<std::size_t>(std::count_if(
      components.begin(), components.end(),
      [](const ComponentRecord& c) { return c.genus == 0 && c.node_count == 1; }));
}

std::size_t DegenerationReport::dropped_node_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const NodeRecord& n) { return !n.survives; }));
}

Permutation node_permutation(const MonodromyTuple& r, Direction direction) {
  switch (direction) {
    case Direction::toward_p1: return compose(r[1], r[2]);
    case Direction::toward_p2: return compose(r[1], r[3]);
    case Direction::toward_p3: return compose(r[2], r[3]);
  }
  throw DomainError("invalid degeneration direction");
}

SideTriples side_tuples(const MonodromyTuple& r, Direction direction) {
  const auto& [g1, g2, g3, g4] = r.entries();
  switch (direction) {
    case Direction::toward_p3:
      return {{g1, g2, inverse(compose(g1, g2))}, {g3, g4, inverse(compose(g3, g4))}};
    case Direction::toward_p1:
      return {{g2, g3, inverse(compose(g2, g3))}, {g4, g1, inverse(compose(g4, g1))}};
    case Direction::toward_p2: {
      const Permutation moved = compose(inverse(g4), compose(g3, g4));
      return {{g2, g4, inverse(compose(g2, g4))}, {moved, g1, inverse(compose(moved, g1))}};
    }
  }
  throw DomainError("invalid degeneration direction");
}

namespace {

/// Riemann-Hurwitz on one connected piece of a side: 2g - 2 = -2n + sum (n - k_i).
int component_genus(const std::array<Permutation, 3>& triple, const std::vector<int>& letters) {
  const int n = static_cast<int>(letters.size());
  int ramification = 0;
  for (const auto& sigma : triple) {
    int cycles = 0;
    for (const auto& cycle : sigma.cycles(true)) {
      if (std::binary_search(letters.begin(), letters.end(), cycle.front())) ++cycles;
    }
    ramification += n - cycles;
  }
  const int twice_genus = ramification - 2 * n + 2;
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw std::logic_error("Riemann-Hurwitz gives a non-integral or negative component genus");
  }
  return twice_genus / 2;
}

/// Dual multigraph used for stabilization; edges may carry several original
/// nodes after genus-0 bridges are contracted.
struct DualGraph {
  struct Edge {
    std::size_t u, v;
    std::vector<std::size_t> nodes;
    bool alive = true;
  };
  std::vector<int> genus;
  std::vector<bool> vertex_alive;
  std::vector<Edge> edges;

  std::size_t degree(std::size_t v) const {
    std::size_t deg = 0;
    for (const auto& e : edges) {
      if (!e.alive) continue;
      deg += (e.u == v) + (e.v == v);
    }
    return deg;
  }

  std::size_t alive_vertices() const {
    return static_cast<std::size_t>(std::count(vertex_alive.begin(), vertex_alive.end(), true));
  }

  std::vector<std::size_t> incident(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].alive && (edges[i].u == v || edges[i].v == v)) out.push_back(i);
    }
    return out;
  }

  /// Removes one rational tail; returns false when there is none.
  bool prune_tail(std::vector<NodeRecord>& records) {
    if (alive_vertices() <= 1) return false;
    for (std::size_t v = 0; v < genus.size(); ++v) {
      if (!vertex_alive[v] || genus[v] != 0 || degree(v) != 1) continue;
      const std::size_t e = incident(v).front();
      for (std::size_t node : edges[e].nodes) records[node].survives = false;
      edges[e].alive = false;
      vertex_alive[v] = false;
      return true;
    }
    return false;
  }

  /// Contracts one genus-0 component with exactly two branches on two
  /// distinct edges; returns false when there is none.
  bool contract_bridge() {
    for (std::size_t v = 0; v < genus.size(); ++v) {
      if (!vertex_alive[v] || genus[v] != 0 || degree(v) != 2) continue;
      const auto inc = incident(v);
      if (inc.size() != 2) continue;  // a single loop
      Edge merged;
      merged.u = edges[inc[0]].u == v ? edges[inc[0]].v : edges[inc[0]].u;
      merged.v = edges[inc[1]].u == v ? edges[inc[1]].v : edges[inc[1]].u;
      for (std::size_t e : inc) {
        merged.nodes.insert(merged.nodes.end(), edges[e].nodes.begin(), edges[e].nodes.end());
        edges[e].alive = false;
      }
      vertex_alive[v] = false;
      edges.push_back(std::move(merged));
      return true;
    }
    return false;
  }
};

}  // namespace

DegenerationReport degenerate(const MonodromyTuple& r, Direction direction) {
  const std::size_t d = r.degree();
  DegenerationReport report;
  report.tuple = r;
  report.direction = direction;
  report.node_permutation = node_permutation(r, direction);

  const SideTriples sides = side_tuples(r, direction);
  std::vector<std::size_t> component_of_a(d), component_of_b(d);
  auto add_side = [&](Side side, const std::array<Permutation, 3>& triple,
                      std::vector<std::size_t>& component_of) {
    const std::array<Permutation, 2> generators{triple[0], triple[1]};
    for (auto& letters : orbits_under(generators, d)) {
      const std::size_t index = report.components.size();
      for (int x : letters) component_of[static_cast<std::size_t>(x - 1)] = index;
      const int genus = component_genus(triple, letters);
      report.components.push_back({side, std::move(letters), genus, 0});
    }
  };
  add_side(Side::A, sides.a, component_of_a);
  add_side(Side::B, sides.b, component_of_b);

  for (auto& cycle : report.node_permutation.cycles(true)) {
    NodeRecord node;
    node.multiplicity = static_cast<int>(cycle.size());
    node.weight = Rational(1, node.multiplicity);
    node.component_a = component_of_a[static_cast<std::size_t>(cycle.front() - 1)];
    node.component_b = component_of_b[static_cast<std::size_t>(cycle.front() - 1)];
    std::sort(cycle.begin(), cycle.end());
    node.cycle_support = std::move(cycle);
    ++report.components[node.component_a].node_count;
    ++report.components[node.component_b].node_count;
    report.nodes.push_back(std::move(node));
  }

  DualGraph graph;
  for (const auto& c : report.components) graph.genus.push_back(c.genus);
  graph.vertex_alive.assign(report.components.size(), true);
  for (std::size_t i = 0; i < report.nodes.size(); ++i) {
    graph.edges.push_back({report.nodes[i].component_a, report.nodes[i].component_b, {i}, true});
  }
  // Tails first: contracting a bridge never creates a new tail.
  while (graph.prune_tail(report.nodes)) {
  }
  while (graph.contract_bridge()) {
  }
  report.stable_components = graph.alive_vertices();
  for (const auto& e : graph.edges) {
    if (!e.alive) continue;
    ++report.stable_nodes;
    if (e.nodes.size() >= 3) report.bridge_chain = true;
  }

  int genus_sum = 0;
  for (const auto& c : report.components) genus_sum += c.genus;
  report.arithmetic_genus = genus_sum + static_cast<int>(report.nodes.size()) -
                            static_cast<int>(report.components.size()) + 1;
  report.low_genus = genus_of_profile(r.profile()) < 2;

  for (const auto& node : report.nodes) {
    report.delta_prime += node.weight;
    if (node.survives) report.delta += node.weight;
  }
  return report;
}

bool dual_graph_connected(const DegenerationReport& report) {
  const std::size_t n = report.components.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& node : report.nodes) parent[find(node.component_a)] = find(node.component_b);
  for (std::size_t i = 1; i < n; ++i) {
    if (find(i) != find(0)) return false;
  }
  return true;
}

}  // namespace hurwitz
