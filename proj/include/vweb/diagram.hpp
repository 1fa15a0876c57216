#pragma once

// Plane drawings of trivalent graphs with crossings ("virtual webs"),
// stored as half-edge combinatorial maps.
//
// Every node lists its half-edges in clockwise order. A crossing
// (s1, s2, s3, s4) carries the strands (s1, s3) and (s2, s4). Each half-edge
// belongs to exactly one node and exactly one edge; an edge runs from its
// tail half-edge to its head half-edge. Closed components without any node
// are recorded as free circles.

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace vweb {

struct Vertex {
  std::string id;
  std::array<std::string, 3> half_edges;  // clockwise

  bool operator==(const Vertex&) const = default;
};

struct Crossing {
  std::string id;
  std::array<std::string, 4> half_edges;  // clockwise; strands (0,2) and (1,3)

  bool operator==(const Crossing&) const = default;
};

struct Edge {
  std::string id;
  std::string tail;
  std::string head;

  bool operator==(const Edge&) const = default;
};

struct Diagram {
  std::vector<Vertex> vertices;
  std::vector<Crossing> crossings;
  std::vector<Edge> edges;
  std::vector<std::string> circles;

  bool operator==(const Diagram&) const = default;
};

/// Parses the line-oriented interchange format and validates the result.
/// Throws vweb::Error (Syntax errors carry the line number).
Diagram parse(std::string_view text);

/// Canonical text: header, then vertex, crossing, edge and circle records,
/// each group sorted by identifier. parse(serialize(d)) == d for validated d.
std::string serialize(const Diagram& diagram);

/// Checks every structural invariant and returns the diagram in canonical
/// form (records sorted, node rotations started at their smallest half-edge).
Diagram validate(Diagram diagram);

bool is_web(const Diagram& diagram);

/// Number of vertexless closed components. Only defined for webs.
std::size_t circle_count(const Diagram& diagram);

/// Genus of the combinatorial map (crossings counted as 4-valent nodes),
/// summed over connected components. Zero for any drawing in the plane.
int genus(const Diagram& diagram);

/// Reverses every diagram edge on the maximal strand through `edge_id`
/// (the chain continued straight through crossings). This is the smallest
/// reorientation containing the edge that keeps strands coherent.
Diagram reverse_strand(const Diagram& diagram, std::string_view edge_id);

/// Abstract trivalent graph. Vertices keep their clockwise rotation as a
/// triple of incident edge indices; a loop appears twice in its rotation.
struct TrivalentGraph {
  std::vector<std::array<int, 3>> rotation;
  std::vector<std::array<int, 2>> ends;
  std::size_t free_circles = 0;

  // Labels, populated for graphs extracted from a named diagram.
  std::vector<std::string> vertex_ids;
  std::vector<std::string> edge_ids;
  std::vector<std::string> circle_ids;

  std::size_t num_vertices() const { return rotation.size(); }
  std::size_t num_edges() const { return ends.size(); }
};

/// Fuses every chain of diagram edges running straight through crossings
/// into one graph edge. Closed chains that meet no vertex become free
/// circles. Graph edges and circles are named after the smallest diagram
/// edge identifier on their chain.
TrivalentGraph underlying_graph(const Diagram& diagram);

}  // namespace vweb
