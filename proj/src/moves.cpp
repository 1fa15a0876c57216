#include "vweb/moves.hpp"

#include <algorithm>
#include <set>

#include "editor.hpp"
#include "map_index.hpp"
#include "vweb/error.hpp"

namespace vweb {

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::VR1Add: return "VR1_add";
    case MoveKind::VR1Remove: return "VR1_remove";
    case MoveKind::VR2Add: return "VR2_add";
    case MoveKind::VR2Remove: return "VR2_remove";
    case MoveKind::VR3: return "VR3";
    case MoveKind::VertexSlide: return "vertex_slide";
  }
  return "unknown";
}

MoveKind parse_move_kind(std::string_view name) {
  for (MoveKind k : kAllMoveKinds)
    if (name == to_string(k)) return k;
  throw Error(ErrorKind::InvalidParameter, "unknown move kind '" + std::string(name) + "'");
}

namespace {

using detail::Editor;
using detail::MapIndex;

[[noreturn]] void stale(const MoveSite& site, const std::string& why) {
  throw Error(ErrorKind::StaleSite, std::string(to_string(site.kind)) + " site is stale: " + why);
}

void require_anchors(const MoveSite& site, std::size_t n) {
  if (site.anchors.size() != n) stale(site, "expected " + std::to_string(n) + " anchors");
}

int dart_named(const MapIndex& index, const MoveSite& site, const std::string& name) {
  auto it = index.dart_of_name.find(name);
  if (it == index.dart_of_name.end()) stale(site, "no half-edge '" + name + "'");
  return it->second;
}

const std::string& node_name(const Diagram& d, const MapIndex& index, int node) {
  return index.is_crossing(node) ? d.crossings[node - index.num_vertices].id : d.vertices[node].id;
}

std::vector<int> face_ids(const MapIndex& index, const std::vector<std::vector<int>>& faces) {
  std::vector<int> face_of(index.mate.size(), -1);
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (int dart : faces[f]) face_of[dart] = static_cast<int>(f);
  return face_of;
}

// ---- VR1 ------------------------------------------------------------------

// Loop edge of `crossing` joining adjacent slots, smallest edge id first.
std::vector<std::string> adjacent_loops(const Diagram& d, const MapIndex& index, int node) {
  std::vector<std::string> loops;
  for (int k = 0; k < 4; ++k) {
    const int dart = index.slots[node][k];
    const int m = index.mate[dart];
    if (index.node_of[m] == node && index.pos_of[m] == (k + 1) % 4)
      loops.push_back(d.edges[index.edge_of[dart]].id);
  }
  std::sort(loops.begin(), loops.end());
  return loops;
}

std::vector<MoveSite> find_vr1_add(const Diagram& d) {
  std::vector<MoveSite> sites;
  for (const auto& e : d.edges) {
    sites.push_back({MoveKind::VR1Add, {e.id, "L"}});
    sites.push_back({MoveKind::VR1Add, {e.id, "R"}});
  }
  for (const auto& c : d.circles) sites.push_back({MoveKind::VR1Add, {c}});
  return sites;
}

Diagram apply_vr1_add(const Diagram& d, const MoveSite& site) {
  Editor ed(d);
  if (site.anchors.size() == 1) {
    const std::string& circle = site.anchors[0];
    if (!ed.has_circle(circle)) stale(site, "no circle '" + circle + "'");
    ed.remove_circle(circle);
    const std::string x = ed.fresh_id(circle + "~x");
    std::array<std::string, 4> s;
    for (int k = 0; k < 4; ++k) s[k] = ed.fresh_half_edge(x + "." + std::to_string(k));
    ed.add_crossing(x, s);
    ed.add_edge(circle, s[2], s[1]);
    ed.add_edge(ed.fresh_id(circle + "_"), s[3], s[0]);
    return ed.finish();
  }
  require_anchors(site, 2);
  const std::string& id = site.anchors[0];
  const bool left = site.anchors[1] == "L";
  if (!left && site.anchors[1] != "R") stale(site, "side must be L or R");
  if (!ed.has_edge(id)) stale(site, "no edge '" + id + "'");
  const Edge e = ed.edge(id);
  const std::string x = ed.fresh_id(id + "~x");
  std::array<std::string, 4> s;
  for (int k = 0; k < 4; ++k) s[k] = ed.fresh_half_edge(x + "." + std::to_string(k));
  ed.remove_edge(id);
  ed.add_crossing(x, s);
  // enter at s0, leave at s2, come back around into the adjacent slot on
  // the chosen side, leave through the slot opposite to it
  ed.add_edge(id, e.tail, s[0]);
  ed.add_edge(ed.fresh_id(id + "_"), s[2], left ? s[1] : s[3]);
  ed.add_edge(ed.fresh_id(id + "_"), left ? s[3] : s[1], e.head);
  return ed.finish();
}

std::vector<MoveSite> find_vr1_remove(const Diagram& d) {
  const MapIndex index(d);
  std::vector<MoveSite> sites;
  for (int node = index.num_vertices; node < index.num_nodes(); ++node) {
    const auto loops = adjacent_loops(d, index, node);
    if (!loops.empty())
      sites.push_back({MoveKind::VR1Remove, {node_name(d, index, node), loops.front()}});
  }
  return sites;
}

Diagram apply_vr1_remove(const Diagram& d, const MoveSite& site) {
  require_anchors(site, 2);
  const MapIndex index(d);
  Editor ed(d);
  const std::string& x = site.anchors[0];
  if (!ed.has_crossing(x)) stale(site, "no crossing '" + x + "'");
  const int node = index.node_of[index.dart_of_name.at(ed.crossing(x)[0])];
  const auto loops = adjacent_loops(d, index, node);
  if (std::find(loops.begin(), loops.end(), site.anchors[1]) == loops.end())
    stale(site, "'" + site.anchors[1] + "' is not a kink loop at '" + x + "'");
  const auto s = ed.crossing(x);
  ed.remove_crossing(x);
  ed.join(s[0], s[2]);
  ed.join(s[1], s[3]);
  return ed.finish();
}

// ---- VR2 ------------------------------------------------------------------

std::vector<MoveSite> find_vr2_add(const Diagram& d) {
  const MapIndex index(d);
  std::vector<MoveSite> sites;
  for (const auto& face : detail::faces(index)) {
    for (std::size_t i = 0; i < face.size(); ++i)
      for (std::size_t j = i + 1; j < face.size(); ++j) {
        if (index.edge_of[face[i]] == index.edge_of[face[j]]) continue;
        sites.push_back(
            {MoveKind::VR2Add, {index.dart_names[face[i]], index.dart_names[face[j]]}});
      }
  }
  return sites;
}

Diagram apply_vr2_add(const Diagram& d, const MoveSite& site) {
  require_anchors(site, 2);
  const MapIndex index(d);
  const int de = dart_named(index, site, site.anchors[0]);
  const int df = dart_named(index, site, site.anchors[1]);
  const auto faces = detail::faces(index);
  const auto face_of = face_ids(index, faces);
  if (face_of[de] != face_of[df]) stale(site, "edge sides are on different faces");
  if (index.edge_of[de] == index.edge_of[df]) stale(site, "edge sides belong to one edge");

  // Walking the face, e runs west to east below the face and f east to west
  // above it. The middle of e is pushed up across f.
  Editor ed(d);
  const std::string ea = index.dart_names[de], eb = index.dart_names[index.mate[de]];
  const std::string fa = index.dart_names[df], fb = index.dart_names[index.mate[df]];
  const Edge e = ed.edge_at(ea);
  const Edge f = ed.edge_at(fa);
  const bool e_forward = e.tail == ea;
  const bool f_forward = f.tail == fa;

  const std::string c1 = ed.fresh_id(e.id + "~" + f.id + "~x");
  const std::string c2 = ed.fresh_id(e.id + "~" + f.id + "~x");
  std::array<std::string, 4> s1, s2;
  for (int k = 0; k < 4; ++k) {
    s1[k] = ed.fresh_half_edge(c1 + "." + std::to_string(k));
    s2[k] = ed.fresh_half_edge(c2 + "." + std::to_string(k));
  }
  ed.remove_edge(e.id);
  ed.remove_edge(f.id);
  ed.add_crossing(c1, s1);  // N: e middle, E: f middle, S: e start, W: f end
  ed.add_crossing(c2, s2);  // N: e middle, E: f start, S: e end, W: f middle

  auto add = [&](const std::string& id, const std::string& a, const std::string& b, bool forward) {
    if (forward) ed.add_edge(id, a, b);
    else ed.add_edge(id, b, a);
  };
  add(e.id, ea, s1[2], e_forward);
  add(ed.fresh_id(e.id + "_"), s1[0], s2[0], e_forward);
  add(ed.fresh_id(e.id + "_"), s2[2], eb, e_forward);
  add(f.id, fa, s2[1], f_forward);
  add(ed.fresh_id(f.id + "_"), s2[3], s1[1], f_forward);
  add(ed.fresh_id(f.id + "_"), s1[3], fb, f_forward);
  return ed.finish();
}

// Bigon faces bounded by two distinct crossings, as sorted crossing pairs.
std::set<std::pair<std::string, std::string>> bigons(const Diagram& d, const MapIndex& index) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& face : detail::faces(index)) {
    if (face.size() != 2) continue;
    const int a = index.node_of[face[0]];
    const int b = index.node_of[face[1]];
    if (a == b || !index.is_crossing(a) || !index.is_crossing(b)) continue;
    if (index.edge_of[face[0]] == index.edge_of[face[1]]) continue;
    out.emplace(std::min(node_name(d, index, a), node_name(d, index, b)),
                std::max(node_name(d, index, a), node_name(d, index, b)));
  }
  return out;
}

std::vector<MoveSite> find_vr2_remove(const Diagram& d) {
  const MapIndex index(d);
  std::vector<MoveSite> sites;
  for (const auto& [a, b] : bigons(d, index)) sites.push_back({MoveKind::VR2Remove, {a, b}});
  return sites;
}

Diagram apply_vr2_remove(const Diagram& d, const MoveSite& site) {
  require_anchors(site, 2);
  const MapIndex index(d);
  const auto pair = std::minmax(site.anchors[0], site.anchors[1]);
  if (!bigons(d, index).contains({pair.first, pair.second}))
    stale(site, "no bigon between '" + site.anchors[0] + "' and '" + site.anchors[1] + "'");
  Editor ed(d);
  for (const auto& x : site.anchors) {
    const auto s = ed.crossing(x);
    ed.remove_crossing(x);
    ed.join(s[0], s[2]);
    ed.join(s[1], s[3]);
  }
  return ed.finish();
}

// ---- triangles --------------------------------------------------------------

struct Triangle {
  std::array<int, 3> darts;  // consecutive face darts
};

// Triangular faces whose three corners are distinct nodes; the darts are
// rotated so that darts[0] has the smallest name.
std::vector<Triangle> triangles(const MapIndex& index) {
  std::vector<Triangle> out;
  for (const auto& face : detail::faces(index)) {
    if (face.size() != 3) continue;
    const int a = index.node_of[face[0]], b = index.node_of[face[1]], c = index.node_of[face[2]];
    if (a == b || b == c || a == c) continue;
    out.push_back({{face[0], face[1], face[2]}});
  }
  return out;
}

std::vector<MoveSite> find_vr3(const Diagram& d) {
  const MapIndex index(d);
  std::vector<MoveSite> sites;
  for (auto t : triangles(index)) {
    if (!std::all_of(t.darts.begin(), t.darts.end(),
                     [&](int x) { return index.is_crossing(index.node_of[x]); }))
      continue;
    auto smallest = std::min_element(t.darts.begin(), t.darts.end(), [&](int x, int y) {
      return index.dart_names[x] < index.dart_names[y];
    });
    std::rotate(t.darts.begin(), smallest, t.darts.end());
    sites.push_back({MoveKind::VR3,
                     {node_name(d, index, index.node_of[t.darts[0]]),
                      node_name(d, index, index.node_of[t.darts[1]]),
                      node_name(d, index, index.node_of[t.darts[2]]),
                      index.dart_names[t.darts[0]]}});
  }
  return sites;
}

// Checks that `dart` starts a triangular face with distinct corners and
// returns its darts.
Triangle triangle_at(const MapIndex& index, const MoveSite& site, int dart) {
  Triangle t{{dart, index.face_next(dart), index.face_next(index.face_next(dart))}};
  if (index.face_next(t.darts[2]) != dart) stale(site, "face is not a triangle");
  const int a = index.node_of[t.darts[0]], b = index.node_of[t.darts[1]],
            c = index.node_of[t.darts[2]];
  if (a == b || b == c || a == c) stale(site, "triangle corners are not distinct");
  return t;
}

Diagram apply_vr3(const Diagram& d, const MoveSite& site) {
  require_anchors(site, 4);
  const MapIndex index(d);
  const Triangle t = triangle_at(index, site, dart_named(index, site, site.anchors[3]));
  for (int k = 0; k < 3; ++k) {
    const int node = index.node_of[t.darts[k]];
    if (!index.is_crossing(node) || node_name(d, index, node) != site.anchors[k])
      stale(site, "triangle corners changed");
  }
  // Corners P, Q, O in face order; the strand through P and Q moves across O.
  const int P = index.node_of[t.darts[0]];
  const int Q = index.node_of[t.darts[1]];
  const int O = index.node_of[t.darts[2]];
  const int p = index.pos_of[t.darts[0]];
  const int q = index.pos_of[t.darts[1]] - 1;
  const int o = index.pos_of[t.darts[2]] - 1;
  auto at = [&](int node, int k) { return index.dart_names[index.slot(node, k)]; };

  Editor ed(d);
  ed.remove_crossing(node_name(d, index, P));
  ed.remove_crossing(node_name(d, index, Q));
  ed.remove_crossing(node_name(d, index, O));
  ed.add_crossing(node_name(d, index, P), {at(Q, q), at(O, o + 3), at(Q, q + 2), at(O, o + 1)});
  ed.add_crossing(node_name(d, index, Q), {at(P, p + 2), at(O, o + 2), at(P, p), at(O, o)});
  ed.add_crossing(node_name(d, index, O), {at(Q, q + 1), at(P, p - 1), at(Q, q + 3), at(P, p + 1)});
  return ed.finish();
}

// ---- vertex slide -------------------------------------------------------------

std::vector<MoveSite> find_vertex_slide(const Diagram& d) {
  const MapIndex index(d);
  std::vector<MoveSite> sites;
  for (const auto& t : triangles(index)) {
    int vertices = 0, at_vertex = -1;
    for (int k = 0; k < 3; ++k)
      if (!index.is_crossing(index.node_of[t.darts[k]])) {
        ++vertices;
        at_vertex = k;
      }
    if (vertices != 1) continue;
    const int dv = t.darts[at_vertex];
    const int dl = index.face_next(dv);
    const int dr = index.face_next(dl);
    sites.push_back({MoveKind::VertexSlide,
                     {node_name(d, index, index.node_of[dv]),
                      node_name(d, index, index.node_of[dl]),
                      node_name(d, index, index.node_of[dr]), index.dart_names[dl]}});
  }
  for (int v = 0; v < index.num_vertices; ++v)
    for (int dart : index.slots[v]) {
      const int far = index.node_of[index.mate[dart]];
      if (index.is_crossing(far))
        sites.push_back({MoveKind::VertexSlide,
                         {node_name(d, index, v), node_name(d, index, far), index.dart_names[dart]}});
    }
  return sites;
}

// Strand S crosses the vertex edges toward L and R; afterwards it crosses
// the third edge once.
Diagram collapse_slide(const Diagram& d, const MoveSite& site) {
  const MapIndex index(d);
  const int dl = dart_named(index, site, site.anchors[3]);
  const Triangle t = triangle_at(index, site, dl);
  const int L = index.node_of[t.darts[0]];
  const int R = index.node_of[t.darts[1]];
  const int V = index.node_of[t.darts[2]];
  if (!index.is_crossing(L) || !index.is_crossing(R) || index.is_crossing(V) ||
      node_name(d, index, V) != site.anchors[0] || node_name(d, index, L) != site.anchors[1] ||
      node_name(d, index, R) != site.anchors[2])
    stale(site, "triangle corners changed");
  const int a = index.pos_of[t.darts[0]];
  const int b = index.pos_of[index.mate[t.darts[0]]];
  const int k = index.pos_of[index.mate[t.darts[1]]];
  auto at = [&](int node, int offset) { return index.dart_names[index.slot(node, offset)]; };
  // L = [S west, vertex side, R side, outer], R = [L side, vertex side, S east, outer]
  const auto l = [&](int i) { return at(L, a + i - 2); };
  const auto r = [&](int i) { return at(R, b + i); };
  const std::string up = at(V, k - 1);  // the vertex's third edge

  Editor ed(d);
  const std::string m = node_name(d, index, L);
  ed.remove_crossing(node_name(d, index, L));
  ed.remove_crossing(node_name(d, index, R));
  ed.remove_edge(ed.edge_at(l(2)).id);
  ed.join(l(1), l(3));
  ed.join(r(1), r(3));
  const std::string m_up = ed.fresh_half_edge(m + ".u");
  const std::string m_down = ed.fresh_half_edge(m + ".v");
  ed.split_at(up, m_down, m_up);
  ed.add_crossing(m, {l(0), m_up, r(2), m_down});
  return ed.finish();
}

Diagram expand_slide(const Diagram& d, const MoveSite& site) {
  const MapIndex index(d);
  const int hu = dart_named(index, site, site.anchors[2]);
  const int v = index.node_of[hu];
  const int M = index.node_of[index.mate[hu]];
  if (index.is_crossing(v) || !index.is_crossing(M) || node_name(d, index, v) != site.anchors[0] ||
      node_name(d, index, M) != site.anchors[1])
    stale(site, "no direct edge from the vertex to the crossing");
  const int m = index.pos_of[index.mate[hu]];
  const int k = index.pos_of[hu];
  auto at = [&](int node, int offset) { return index.dart_names[index.slot(node, offset)]; };
  const std::string west = at(M, m + 1), east = at(M, m + 3);
  const std::string h_right = at(v, k + 1), h_left = at(v, k + 2);

  Editor ed(d);
  const std::string L = node_name(d, index, M);
  ed.remove_crossing(L);
  ed.join(at(M, m), at(M, m + 2));
  const bool west_to_east = ed.is_head(west);
  const std::string R = ed.fresh_id(L + "~r");
  std::array<std::string, 4> ls, rs;
  for (int i = 0; i < 4; ++i) {
    ls[i] = ed.fresh_half_edge(L + "." + std::to_string(i));
    rs[i] = ed.fresh_half_edge(R + "." + std::to_string(i));
  }
  ls[0] = west;
  rs[2] = east;
  ed.split_at(h_left, ls[1], ls[3]);
  ed.split_at(h_right, rs[1], rs[3]);
  const std::string inner = ed.fresh_id(L + "~s");
  if (west_to_east) ed.add_edge(inner, ls[2], rs[0]);
  else ed.add_edge(inner, rs[0], ls[2]);
  ed.add_crossing(L, ls);
  ed.add_crossing(R, rs);
  return ed.finish();
}

}  // namespace

std::vector<MoveSite> find_moves(const Diagram& diagram, MoveKind kind) {
  switch (kind) {
    case MoveKind::VR1Add: return find_vr1_add(diagram);
    case MoveKind::VR1Remove: return find_vr1_remove(diagram);
    case MoveKind::VR2Add: return find_vr2_add(diagram);
    case MoveKind::VR2Remove: return find_vr2_remove(diagram);
    case MoveKind::VR3: return find_vr3(diagram);
    case MoveKind::VertexSlide: return find_vertex_slide(diagram);
  }
  return {};
}

Diagram apply_move(const Diagram& diagram, const MoveSite& site) {
  switch (site.kind) {
    case MoveKind::VR1Add: return apply_vr1_add(diagram, site);
    case MoveKind::VR1Remove: return apply_vr1_remove(diagram, site);
    case MoveKind::VR2Add: return apply_vr2_add(diagram, site);
    case MoveKind::VR2Remove: return apply_vr2_remove(diagram, site);
    case MoveKind::VR3: return apply_vr3(diagram, site);
    case MoveKind::VertexSlide:
      if (site.anchors.size() == 4) return collapse_slide(diagram, site);
      require_anchors(site, 3);
      return expand_slide(diagram, site);
  }
  stale(site, "unknown kind");
}

int crossing_delta(const MoveSite& site) {
  switch (site.kind) {
    case MoveKind::VR1Add: return 1;
    case MoveKind::VR1Remove: return -1;
    case MoveKind::VR2Add: return 2;
    case MoveKind::VR2Remove: return -2;
    case MoveKind::VR3: return 0;
    case MoveKind::VertexSlide: return site.anchors.size() == 4 ? -1 : 1;
  }
  return 0;
}

Diagram random_move(const Diagram& diagram, std::mt19937_64& rng, const WalkOptions& options) {
  std::vector<std::vector<MoveSite>> by_kind;
  for (MoveKind kind : kAllMoveKinds) {
    auto sites = find_moves(diagram, kind);
    std::erase_if(sites, [&](const MoveSite& s) {
      return static_cast<long>(diagram.crossings.size()) + crossing_delta(s) >
             static_cast<long>(options.max_crossings);
    });
    if (!sites.empty()) by_kind.push_back(std::move(sites));
  }
  if (by_kind.empty()) return diagram;
  const auto& sites = by_kind[std::uniform_int_distribution<std::size_t>(0, by_kind.size() - 1)(rng)];
  const auto& site = sites[std::uniform_int_distribution<std::size_t>(0, sites.size() - 1)(rng)];
  return apply_move(diagram, site);
}

}  // namespace vweb
