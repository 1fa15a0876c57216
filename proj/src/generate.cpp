#include "vweb/generate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "editor.hpp"
#include "map_index.hpp"
#include "vweb/error.hpp"
#include "vweb/moves.hpp"

namespace vweb {

const char* to_string(Family family) {
  switch (family) {
    case Family::Unlink: return "unlink";
    case Family::Theta: return "theta";
    case Family::CrossedTheta: return "crossed_theta";
    case Family::KinkedUnknot: return "kinked_unknot";
    case Family::K4: return "k4";
    case Family::Prism: return "prism";
    case Family::Dumbbell: return "dumbbell";
    case Family::Petersen: return "petersen";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (Family f : kAllFamilies)
    if (name == to_string(f)) return f;
  throw Error(ErrorKind::InvalidParameter, "unknown family '" + std::string(name) + "'");
}

bool is_parameterized(Family family) { return family == Family::Unlink || family == Family::Prism; }

namespace {

std::string numbered(const char* prefix, std::size_t i) { return prefix + std::to_string(i); }

Diagram unlink(unsigned n) {
  Diagram d;
  for (unsigned i = 1; i <= n; ++i) d.circles.push_back(numbered("c", i));
  return validate(std::move(d));
}

Diagram theta() {
  Diagram d;
  d.vertices = {{"u", {"a.t", "b.t", "c.t"}}, {"v", {"c.h", "b.h", "a.h"}}};
  d.edges = {{"a", "a.t", "a.h"}, {"b", "b.t", "b.h"}, {"c", "c.t", "c.h"}};
  return validate(std::move(d));
}

// Theta whose edges a and c cross once.
Diagram crossed_theta() {
  Diagram d;
  d.vertices = {{"u", {"u.b", "u.a", "u.c"}}, {"v", {"v.a", "v.c", "v.b"}}};
  d.crossings = {{"x", {"x.1", "x.2", "x.3", "x.4"}}};
  d.edges = {{"a1", "u.a", "x.1"},
             {"a2", "x.3", "v.a"},
             {"b", "u.b", "v.b"},
             {"c1", "u.c", "x.4"},
             {"c2", "x.2", "v.c"}};
  return validate(std::move(d));
}

Diagram kinked_unknot() {
  Diagram d;
  d.crossings = {{"x", {"x.0", "x.1", "x.2", "x.3"}}};
  d.edges = {{"k1", "x.2", "x.1"}, {"k2", "x.3", "x.0"}};
  return validate(std::move(d));
}

Diagram dumbbell() {
  Diagram d;
  d.vertices = {{"u", {"u.l1", "u.l2", "u.m"}}, {"v", {"v.m", "v.l1", "v.l2"}}};
  d.edges = {{"l1", "u.l1", "u.l2"}, {"l2", "v.l1", "v.l2"}, {"m", "u.m", "v.m"}};
  return validate(std::move(d));
}

StraightLineDrawing::Point polar(double radius, double degrees) {
  const double t = degrees * std::numbers::pi / 180.0;
  return {radius * std::cos(t), radius * std::sin(t)};
}

StraightLineDrawing k4_drawing() {
  StraightLineDrawing g;
  for (int i = 0; i < 3; ++i) g.points.push_back(polar(2.0, 90.0 + 120.0 * i));
  g.points.push_back({0.0, 0.0});
  g.segments = {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {3, 2}};
  return g;
}

StraightLineDrawing prism_drawing(unsigned n) {
  StraightLineDrawing g;
  for (unsigned i = 0; i < n; ++i) g.points.push_back(polar(2.0, 90.0 + 360.0 * i / n));
  for (unsigned i = 0; i < n; ++i) g.points.push_back(polar(1.0, 90.0 + 360.0 * i / n));
  const int m = static_cast<int>(n);
  for (int i = 0; i < m; ++i) {
    g.segments.push_back({i, (i + 1) % m});
    g.segments.push_back({m + i, m + (i + 1) % m});
    g.segments.push_back({i, m + i});
  }
  return g;
}

// Pentagon outside, pentagram inside: the five pentagram chords cross
// pairwise at five points.
StraightLineDrawing petersen_drawing() {
  StraightLineDrawing g;
  for (int i = 0; i < 5; ++i) g.points.push_back(polar(2.0, 90.0 + 72.0 * i));
  for (int i = 0; i < 5; ++i) g.points.push_back(polar(1.0, 90.0 + 72.0 * i));
  for (int i = 0; i < 5; ++i) {
    g.segments.push_back({i, (i + 1) % 5});
    g.segments.push_back({i, 5 + i});
    g.segments.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return g;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::InvalidParameter, message);
}

}  // namespace

Diagram from_drawing(const StraightLineDrawing& g) {
  using P = StraightLineDrawing::Point;
  struct Stop {
    double t;   // position along the segment
    int node;   // index into `nodes`
  };
  struct Node {
    P at;
    bool crossing = false;
    std::vector<std::pair<double, std::string>> ends;  // (angle, half-edge)
  };
  std::vector<Node> nodes;
  for (const P& p : g.points) nodes.push_back({p, false, {}});
  std::vector<std::vector<Stop>> stops(g.segments.size());
  for (std::size_t s = 0; s < g.segments.size(); ++s) {
    stops[s].push_back({0.0, g.segments[s][0]});
    stops[s].push_back({1.0, g.segments[s][1]});
  }

  auto cross = [](P o, P a, P b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); };
  for (std::size_t s = 0; s < g.segments.size(); ++s)
    for (std::size_t r = s + 1; r < g.segments.size(); ++r) {
      const auto [a, b] = g.segments[s];
      const auto [c, e] = g.segments[r];
      if (a == c || a == e || b == c || b == e) continue;
      const P pa = g.points[a], pb = g.points[b], pc = g.points[c], pe = g.points[e];
      const double d1 = cross(pc, pe, pa), d2 = cross(pc, pe, pb);
      const double d3 = cross(pa, pb, pc), d4 = cross(pa, pb, pe);
      if (!((d1 > 0) != (d2 > 0) && (d3 > 0) != (d4 > 0))) continue;
      const double t = d1 / (d1 - d2);
      const double u = d3 / (d3 - d4);
      const int node = static_cast<int>(nodes.size());
      nodes.push_back({{pa.x + t * (pb.x - pa.x), pa.y + t * (pb.y - pa.y)}, true, {}});
      stops[s].push_back({t, node});
      stops[r].push_back({u, node});
    }

  Diagram d;
  for (std::size_t s = 0; s < g.segments.size(); ++s) {
    auto& st = stops[s];
    std::sort(st.begin(), st.end(), [](const Stop& x, const Stop& y) { return x.t < y.t; });
    for (std::size_t k = 0; k + 1 < st.size(); ++k) {
      std::string id = numbered("e", s);
      if (st.size() > 2) id += "_" + std::to_string(k);
      const std::string tail = id + ".t", head = id + ".h";
      Node& from = nodes[st[k].node];
      Node& to = nodes[st[k + 1].node];
      from.ends.emplace_back(std::atan2(to.at.y - from.at.y, to.at.x - from.at.x), tail);
      to.ends.emplace_back(std::atan2(from.at.y - to.at.y, from.at.x - to.at.x), head);
      d.edges.push_back({id, tail, head});
    }
  }
  int vertices = 0, crossings = 0;
  for (Node& n : nodes) {
    // clockwise = decreasing angle
    std::sort(n.ends.begin(), n.ends.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    if (n.crossing) {
      require(n.ends.size() == 4, "crossing of more than two segments");
      d.crossings.push_back({numbered("x", crossings++),
                             {n.ends[0].second, n.ends[1].second, n.ends[2].second, n.ends[3].second}});
    } else {
      require(n.ends.size() == 3, "drawing point of degree " + std::to_string(n.ends.size()));
      d.vertices.push_back(
          {numbered("v", vertices++), {n.ends[0].second, n.ends[1].second, n.ends[2].second}});
    }
  }
  return validate(std::move(d));
}

Diagram generate(const GeneratorSpec& spec) {
  const std::string name = to_string(spec.family);
  if (is_parameterized(spec.family))
    require(spec.parameter.has_value(), "family '" + name + "' needs a parameter");
  else
    require(!spec.parameter.has_value(), "family '" + name + "' takes no parameter");
  switch (spec.family) {
    case Family::Unlink:
      require(*spec.parameter >= 1, "unlink needs n >= 1");
      return unlink(*spec.parameter);
    case Family::Theta: return theta();
    case Family::CrossedTheta: return crossed_theta();
    case Family::KinkedUnknot: return kinked_unknot();
    case Family::K4: return from_drawing(k4_drawing());
    case Family::Prism:
      require(*spec.parameter >= 3, "prism needs n >= 3");
      require(*spec.parameter <= 1000, "prism size too large");
      return from_drawing(prism_drawing(*spec.parameter));
    case Family::Dumbbell: return dumbbell();
    case Family::Petersen: return from_drawing(petersen_drawing());
  }
  throw Error(ErrorKind::InvalidParameter, "unknown family");
}

namespace {

// Inserts a new edge drawn inside the plane: it leaves the side of dart
// `start`, passes through a sequence of faces crossing one edge between
// consecutive ones, and ends on a side of the last face. Returns false when
// the walk found no admissible end.
bool insert_chord(Diagram& d, std::mt19937_64& rng, std::size_t crossing_budget) {
  using detail::MapIndex;
  const MapIndex index(d);
  const int darts = static_cast<int>(index.mate.size());
  if (darts == 0) return false;
  const auto faces = detail::faces(index);
  std::vector<int> face_of(darts);
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (int x : faces[f]) face_of[x] = static_cast<int>(f);
  auto pick = [&](const std::vector<int>& from) {
    return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
  };

  const int start = std::uniform_int_distribution<int>(0, darts - 1)(rng);
  const std::size_t want = std::uniform_int_distribution<std::size_t>(0, crossing_budget)(rng);
  std::vector<int> used_edges{index.edge_of[start]};
  std::vector<int> used_faces{face_of[start]};
  std::vector<int> crossed;  // darts crossed from their left side to the right
  auto fresh_edge = [&](int x) {
    return std::find(used_edges.begin(), used_edges.end(), index.edge_of[x]) == used_edges.end();
  };
  int face = face_of[start];
  while (crossed.size() < want) {
    std::vector<int> exits;
    for (int x : faces[face]) {
      const int beyond = face_of[index.mate[x]];
      if (fresh_edge(x) && std::find(used_faces.begin(), used_faces.end(), beyond) == used_faces.end())
        exits.push_back(x);
    }
    if (exits.empty()) break;
    const int x = pick(exits);
    crossed.push_back(x);
    used_edges.push_back(index.edge_of[x]);
    face = face_of[index.mate[x]];
    used_faces.push_back(face);
  }
  std::vector<int> ends;
  for (int x : faces[face])
    if (fresh_edge(x)) ends.push_back(x);
  if (ends.empty()) return false;
  const int finish = pick(ends);

  detail::Editor ed(d);
  // Splits the edge of dart x at a new node; returns the node's half-edges
  // (toward the start of x, toward its far end).
  auto split = [&](int x, const std::string& node) -> std::pair<std::string, std::string> {
    const std::string near = index.dart_names[x], far = index.dart_names[index.mate[x]];
    const Edge e = ed.edge_at(near);
    const std::string to_near = ed.fresh_half_edge(node + ".n");
    const std::string to_far = ed.fresh_half_edge(node + ".f");
    const std::string rest = ed.fresh_id(e.id + "_");
    ed.remove_edge(e.id);
    if (e.tail == near) {
      ed.add_edge(e.id, near, to_near);
      ed.add_edge(rest, to_far, far);
    } else {
      ed.add_edge(e.id, far, to_far);
      ed.add_edge(rest, to_near, near);
    }
    return {to_near, to_far};
  };

  const std::string chord = ed.fresh_id("r");
  std::vector<std::pair<std::string, std::string>> pieces;  // chord pieces in walk order
  {
    const std::string p = ed.fresh_id("p");
    const auto [a, b] = split(start, p);
    const std::string out = ed.fresh_half_edge(p + ".c");
    ed.add_vertex(p, {a, out, b});
    pieces.push_back({out, ""});
  }
  for (int x : crossed) {
    const std::string c = ed.fresh_id("y");
    const auto [a, b] = split(x, c);
    const std::string in = ed.fresh_half_edge(c + ".i");
    const std::string out = ed.fresh_half_edge(c + ".o");
    ed.add_crossing(c, {in, b, out, a});
    pieces.back().second = in;
    pieces.push_back({out, ""});
  }
  {
    const std::string q = ed.fresh_id("q");
    const auto [a, b] = split(finish, q);
    const std::string in = ed.fresh_half_edge(q + ".c");
    ed.add_vertex(q, {a, in, b});
    pieces.back().second = in;
  }
  const bool forward = std::bernoulli_distribution(0.5)(rng);
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const std::string id = i == 0 ? chord : ed.fresh_id(chord + "_");
    if (forward) ed.add_edge(id, pieces[i].first, pieces[i].second);
    else ed.add_edge(id, pieces[i].second, pieces[i].first);
  }
  d = ed.finish();
  return true;
}

}  // namespace

Diagram random_diagram(std::uint64_t seed, const RandomOptions& options) {
  std::mt19937_64 rng(seed);
  Diagram d = generate({Family::Theta, std::nullopt});
  const std::size_t chords =
      std::uniform_int_distribution<std::size_t>(0, (options.max_vertices - 2) / 2)(rng);
  for (std::size_t i = 0; i < chords; ++i) {
    const std::size_t budget = options.max_crossings - d.crossings.size();
    for (int attempt = 0; attempt < 8 && !insert_chord(d, rng, std::min<std::size_t>(budget, 4));
         ++attempt) {
    }
  }
  const int moves = std::uniform_int_distribution<int>(0, 3)(rng);
  for (int i = 0; i < moves; ++i) d = random_move(d, rng, {options.max_crossings});
  // random orientations
  for (const auto& e : std::vector<Edge>(d.edges))
    if (std::bernoulli_distribution(0.3)(rng)) d = reverse_strand(d, e.id);
  return d;
}

}  // namespace vweb
