#include "editor.hpp"

#include "vweb/error.hpp"

namespace vweb::detail {

Editor::Editor(const Diagram& d) {
  for (const auto& v : d.vertices) add_vertex(v.id, v.half_edges);
  for (const auto& c : d.crossings) add_crossing(c.id, c.half_edges);
  for (const auto& e : d.edges) add_edge(e.id, e.tail, e.head);
  for (const auto& c : d.circles) add_circle(c);
}

const std::array<std::string, 4>& Editor::crossing(const std::string& id) const {
  auto it = crossings_.find(id);
  if (it == crossings_.end()) throw Error(ErrorKind::UnknownId, "unknown crossing '" + id + "'");
  return it->second;
}

const std::array<std::string, 3>& Editor::vertex(const std::string& id) const {
  auto it = vertices_.find(id);
  if (it == vertices_.end()) throw Error(ErrorKind::UnknownId, "unknown vertex '" + id + "'");
  return it->second;
}

const Edge& Editor::edge(const std::string& id) const {
  auto it = edges_.find(id);
  if (it == edges_.end()) throw Error(ErrorKind::UnknownId, "unknown edge '" + id + "'");
  return it->second;
}

const Edge& Editor::edge_at(const std::string& half_edge) const {
  auto it = edge_of_.find(half_edge);
  if (it == edge_of_.end())
    throw Error(ErrorKind::UnknownId, "half-edge '" + half_edge + "' is on no edge");
  return edges_.at(it->second);
}

std::string Editor::other_end(const std::string& half_edge) const {
  const Edge& e = edge_at(half_edge);
  return e.tail == half_edge ? e.head : e.tail;
}

bool Editor::is_head(const std::string& half_edge) const {
  return edge_at(half_edge).head == half_edge;
}

std::optional<Editor::Slot> Editor::slot_of(const std::string& half_edge) const {
  auto it = slot_of_.find(half_edge);
  if (it == slot_of_.end()) return std::nullopt;
  return it->second;
}

void Editor::add_vertex(const std::string& id, const std::array<std::string, 3>& half_edges) {
  vertices_[id] = half_edges;
  used_ids_.insert(id);
  for (int k = 0; k < 3; ++k) {
    slot_of_[half_edges[k]] = {id, false, k};
    used_half_edges_.insert(half_edges[k]);
  }
}

void Editor::add_crossing(const std::string& id, const std::array<std::string, 4>& half_edges) {
  crossings_[id] = half_edges;
  used_ids_.insert(id);
  for (int k = 0; k < 4; ++k) {
    slot_of_[half_edges[k]] = {id, true, k};
    used_half_edges_.insert(half_edges[k]);
  }
}

void Editor::remove_vertex(const std::string& id) {
  for (const auto& he : vertex(id)) slot_of_.erase(he);
  vertices_.erase(id);
}

void Editor::remove_crossing(const std::string& id) {
  for (const auto& he : crossing(id)) slot_of_.erase(he);
  crossings_.erase(id);
}

void Editor::add_edge(const std::string& id, const std::string& tail, const std::string& head) {
  edges_[id] = Edge{id, tail, head};
  edge_of_[tail] = id;
  edge_of_[head] = id;
  used_ids_.insert(id);
  used_half_edges_.insert(tail);
  used_half_edges_.insert(head);
}

void Editor::remove_edge(const std::string& id) {
  const Edge e = edge(id);
  edge_of_.erase(e.tail);
  edge_of_.erase(e.head);
  edges_.erase(id);
}

void Editor::add_circle(const std::string& id) {
  circles_.insert(id);
  used_ids_.insert(id);
}

void Editor::remove_circle(const std::string& id) { circles_.erase(id); }

void Editor::join(const std::string& p, const std::string& q) {
  const Edge ep = edge_at(p);
  const Edge eq = edge_at(q);
  if (ep.id == eq.id) {
    remove_edge(ep.id);
    add_circle(ep.id);
    return;
  }
  const std::string a = ep.tail == p ? ep.head : ep.tail;
  const std::string b = eq.tail == q ? eq.head : eq.tail;
  const std::string id = std::min(ep.id, eq.id);
  const bool p_inbound = ep.head == p;
  remove_edge(ep.id);
  remove_edge(eq.id);
  if (p_inbound) add_edge(id, a, b);
  else add_edge(id, b, a);
}

std::string Editor::split_at(const std::string& half_edge, const std::string& near,
                             const std::string& far) {
  const Edge e = edge_at(half_edge);
  const std::string other = e.tail == half_edge ? e.head : e.tail;
  const std::string rest = fresh_id(e.id + "_");
  remove_edge(e.id);
  if (e.tail == half_edge) {
    add_edge(e.id, half_edge, near);
    add_edge(rest, far, other);
  } else {
    add_edge(e.id, near, half_edge);
    add_edge(rest, other, far);
  }
  return rest;
}

std::string Editor::fresh_id(const std::string& base) {
  std::string id = base;
  for (int k = 1; used_ids_.contains(id); ++k) id = base + std::to_string(k);
  used_ids_.insert(id);
  return id;
}

std::string Editor::fresh_half_edge(const std::string& base) {
  std::string id = base;
  for (int k = 1; used_half_edges_.contains(id); ++k) id = base + std::to_string(k);
  used_half_edges_.insert(id);
  return id;
}

Diagram Editor::finish() const {
  Diagram d;
  for (const auto& [id, he] : vertices_) d.vertices.push_back({id, he});
  for (const auto& [id, he] : crossings_) d.crossings.push_back({id, he});
  for (const auto& [id, e] : edges_) d.edges.push_back(e);
  d.circles.assign(circles_.begin(), circles_.end());
  return validate(std::move(d));
}

}  // namespace vweb::detail
