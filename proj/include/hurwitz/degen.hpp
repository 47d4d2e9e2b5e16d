#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hurwitz/enumerate.hpp"
#include "hurwitz/rational.hpp"

namespace hurwitz {

/// Boundary direction j: the moving point p4 collides with p_j.
enum class Direction { toward_p1 = 1, toward_p2 = 2, toward_p3 = 3 };

/// Throws DomainError unless j is 1, 2 or 3.
Direction direction_from_int(int j);

enum class Side { A, B };

/// One node of the degenerate covering curve: a cycle of the node
/// permutation. Locally the cover looks like (x, y) -> (x^a, y^a).
struct NodeRecord {
  std::vector<int> cycle_support;  // 1-based letters
  int multiplicity = 1;
  bool survives = true;            // maps to a node of the stable model
  Rational weight;                 // 1 / multiplicity
  std::size_t component_a = 0;     // index into DegenerationReport::components
  std::size_t component_b = 0;
};

struct ComponentRecord {
  Side side = Side::A;
  std::vector<int> letters;  // 1-based; the component's degree is letters.size()
  int genus = 0;
  std::size_t node_count = 0;
};

struct DegenerationReport {
  MonodromyTuple tuple;
  Direction direction = Direction::toward_p3;
  Permutation node_permutation;
  std::vector<NodeRecord> nodes;
  std::vector<ComponentRecord> components;  // side A first, then side B
  Rational delta;        // sum of survives / a
  Rational delta_prime;  // sum of 1 / a
  int arithmetic_genus = 0;

  std::size_t stable_components = 0;
  std::size_t stable_nodes = 0;
  /// Set when the smooth genus is below 2; the weights are still computed.
  bool low_genus = false;
  /// Set when two or more genus-0 bridges in a row were contracted into one
  /// stable node.
  bool bridge_chain = false;

  /// Genus-0 components meeting the rest of the curve in one node.
  std::size_t rational_tail_count() const;
  /// Nodes that map to smooth points of the stable model.
  std::size_t dropped_node_count() const;
};

/// Direction 3: g3 g4; direction 1: g2 g3; direction 2: g2 g4.
Permutation node_permutation(const MonodromyTuple& r, Direction direction);

/// Monodromy triples over the two components of the degenerate target. Each
/// triple multiplies to the identity and the two third entries are inverse.
struct SideTriples {
  std::array<Permutation, 3> a;
  std::array<Permutation, 3> b;
};
SideTriples side_tuples(const MonodromyTuple& r, Direction direction);

DegenerationReport degenerate(const MonodromyTuple& r, Direction direction);

/// Connectivity of the bipartite dual graph (components and nodes).
bool dual_graph_connected(const DegenerationReport& report);

}  // namespace hurwitz
