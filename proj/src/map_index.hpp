#pragma once

// Integer view of a validated diagram used by the traversal-heavy code.
// Half-edges become darts 0..H-1; nodes are the vertices followed by the
// crossings, in the diagram's record order.

#include <string>
#include <unordered_map>
#include <vector>

#include "vweb/diagram.hpp"

namespace vweb::detail {

struct MapIndex {
  int num_vertices = 0;
  int num_crossings = 0;

  std::vector<std::string> dart_names;
  std::unordered_map<std::string, int> dart_of_name;

  std::vector<int> mate;     // other half-edge of the same edge
  std::vector<int> edge_of;  // diagram edge index
  std::vector<int> node_of;  // node index
  std::vector<int> pos_of;   // slot position inside the node
  std::vector<char> is_head;

  std::vector<std::vector<int>> slots;  // per node, clockwise darts

  explicit MapIndex(const Diagram& diagram);

  int num_nodes() const { return num_vertices + num_crossings; }
  bool is_crossing(int node) const { return node >= num_vertices; }
  int degree(int node) const { return static_cast<int>(slots[node].size()); }

  int slot(int node, int k) const {
    const int d = degree(node);
    return slots[node][((k % d) + d) % d];
  }

  // Dart reached by rotating `offset` slots clockwise around its node.
  int turn(int dart, int offset) const {
    return slot(node_of[dart], pos_of[dart] + offset);
  }

  // Next dart of the face lying to the left of `dart` (walking its edge
  // away from the node of `dart`).
  int face_next(int dart) const { return turn(mate[dart], 1); }

  // Straight continuation through a crossing.
  int opposite(int dart) const { return turn(dart, 2); }
};

// Faces as cyclic dart sequences, each face on the left of its darts.
std::vector<std::vector<int>> faces(const MapIndex& index);

}  // namespace vweb::detail
