#pragma once

// Mutable, name-keyed working copy of a diagram for local surgery.
// Surgeries may leave the map temporarily inconsistent; finish() validates.

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>

#include "vweb/diagram.hpp"

namespace vweb::detail {

class Editor {
 public:
  struct Slot {
    std::string node;
    bool crossing = false;
    int pos = 0;
  };

  explicit Editor(const Diagram& diagram);

  bool has_crossing(const std::string& id) const { return crossings_.contains(id); }
  bool has_vertex(const std::string& id) const { return vertices_.contains(id); }
  bool has_edge(const std::string& id) const { return edges_.contains(id); }
  bool has_circle(const std::string& id) const { return circles_.contains(id); }

  const std::array<std::string, 4>& crossing(const std::string& id) const;
  const std::array<std::string, 3>& vertex(const std::string& id) const;
  const Edge& edge(const std::string& id) const;

  const Edge& edge_at(const std::string& half_edge) const;
  std::string other_end(const std::string& half_edge) const;
  bool is_head(const std::string& half_edge) const;
  std::optional<Slot> slot_of(const std::string& half_edge) const;

  void add_vertex(const std::string& id, const std::array<std::string, 3>& half_edges);
  void add_crossing(const std::string& id, const std::array<std::string, 4>& half_edges);
  void remove_vertex(const std::string& id);
  void remove_crossing(const std::string& id);
  void add_edge(const std::string& id, const std::string& tail, const std::string& head);
  void remove_edge(const std::string& id);
  void add_circle(const std::string& id);
  void remove_circle(const std::string& id);

  // Fuses the edges ending at half-edges p and q into one edge (named after
  // the smaller identifier), dropping p and q. When p and q are the two ends
  // of the same edge it becomes a free circle.
  void join(const std::string& p, const std::string& q);

  // Cuts the edge containing `half_edge` next to that end: the piece
  // [half_edge, near] keeps the edge identifier, [far, other end] gets a
  // fresh one, which is returned. Orientation is kept.
  std::string split_at(const std::string& half_edge, const std::string& near,
                       const std::string& far);

  std::string fresh_id(const std::string& base);
  std::string fresh_half_edge(const std::string& base);

  Diagram finish() const;

 private:
  std::map<std::string, std::array<std::string, 3>> vertices_;
  std::map<std::string, std::array<std::string, 4>> crossings_;
  std::map<std::string, Edge> edges_;
  std::set<std::string> circles_;
  std::unordered_map<std::string, std::string> edge_of_;
  std::unordered_map<std::string, Slot> slot_of_;
  std::set<std::string> used_ids_;
  std::set<std::string> used_half_edges_;
};

}  // namespace vweb::detail
