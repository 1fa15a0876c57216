#include "vweb/resolution.hpp"

#include <bit>
#include <unordered_map>
#include <utility>

#include "editor.hpp"
#include "map_index.hpp"
#include "vweb/error.hpp"
#include "vweb/tait.hpp"

namespace vweb {

namespace {

using SlotPair = std::pair<int, int>;
using PairList = std::array<SlotPair, 2>;

constexpr PairList kPairs12_34{{{0, 1}, {2, 3}}};
constexpr PairList kPairs41_23{{{3, 0}, {1, 2}}};

const PairList& pairs_of(Pairing p) { return p == Pairing::Slots12_34 ? kPairs12_34 : kPairs41_23; }
const PairList& other_pairs_of(Pairing p) {
  return p == Pairing::Slots12_34 ? kPairs41_23 : kPairs12_34;
}

Pairing oriented_pairing_in(const detail::Editor& ed, const std::string& x) {
  const auto& s = ed.crossing(x);
  const bool in0 = ed.is_head(s[0]);
  const bool in1 = ed.is_head(s[1]);
  if (in0 == ed.is_head(s[2]) || in1 == ed.is_head(s[3]))
    throw Error(ErrorKind::StrandOrientation, "crossing '" + x + "' has incoherent strands");
  return in0 != in1 ? Pairing::Slots12_34 : Pairing::Slots41_23;
}

void resolve_in(detail::Editor& ed, const std::string& x, Resolution kind, Pairing smoothing) {
  const std::array<std::string, 4> s = ed.crossing(x);
  ed.remove_crossing(x);
  if (kind == Resolution::Smoothing) {
    for (const auto& [a, b] : pairs_of(smoothing)) ed.join(s[a], s[b]);
    return;
  }
  const PairList& h = other_pairs_of(smoothing);
  const std::string bar_a = ed.fresh_half_edge(x + "/a.bar");
  const std::string bar_b = ed.fresh_half_edge(x + "/b.bar");
  ed.add_vertex(ed.fresh_id(x + "/a"), {s[h[0].first], s[h[0].second], bar_a});
  ed.add_vertex(ed.fresh_id(x + "/b"), {s[h[1].first], s[h[1].second], bar_b});
  ed.add_edge(ed.fresh_id(x + "/bar"), bar_a, bar_b);
}

bool has_vertex_loop(const Diagram& d) {
  std::unordered_map<std::string_view, std::size_t> vertex_of;
  for (std::size_t v = 0; v < d.vertices.size(); ++v)
    for (const auto& he : d.vertices[v].half_edges) vertex_of.emplace(he, v);
  for (const auto& e : d.edges) {
    auto a = vertex_of.find(e.tail);
    auto b = vertex_of.find(e.head);
    if (a != vertex_of.end() && b != vertex_of.end() && a->second == b->second) return true;
  }
  return false;
}

// Underlying graph of the complete resolution selected by `mask`, built
// straight from the map without materializing the resolved diagram.
class CompactResolver {
 public:
  explicit CompactResolver(const Diagram& d) : index_(d), base_circles_(d.circles.size()) {
    for (int i = 0; i < index_.num_crossings; ++i) {
      const auto& sl = index_.slots[index_.num_vertices + i];
      const bool in0 = index_.is_head[sl[0]];
      const bool in1 = index_.is_head[sl[1]];
      if (in0 == static_cast<bool>(index_.is_head[sl[2]]) ||
          in1 == static_cast<bool>(index_.is_head[sl[3]]))
        throw Error(ErrorKind::StrandOrientation,
                    "crossing '" + d.crossings[i].id + "' has incoherent strands");
      oriented_.push_back(in0 != in1 ? Pairing::Slots12_34 : Pairing::Slots41_23);
    }
  }

  TrivalentGraph graph(std::uint64_t mask) const {
    const int darts = static_cast<int>(index_.mate.size());
    const int v0 = index_.num_vertices;
    const int h_count = std::popcount(mask);
    TrivalentGraph g;
    g.rotation.assign(v0 + 2 * h_count, {-1, -1, -1});
    std::vector<int> vert(darts, -1), pos(darts, -1), through(darts, -1);
    for (int v = 0; v < v0; ++v)
      for (int k = 0; k < 3; ++k) {
        vert[index_.slots[v][k]] = v;
        pos[index_.slots[v][k]] = k;
      }
    int next_vertex = v0;
    for (int i = 0; i < index_.num_crossings; ++i) {
      const auto& sl = index_.slots[v0 + i];
      if (!((mask >> i) & 1u)) {
        for (const auto& [a, b] : pairs_of(oriented_[i])) {
          through[sl[a]] = sl[b];
          through[sl[b]] = sl[a];
        }
        continue;
      }
      const PairList& h = other_pairs_of(oriented_[i]);
      for (int side = 0; side < 2; ++side) {
        vert[sl[h[side].first]] = next_vertex + side;
        pos[sl[h[side].first]] = 0;
        vert[sl[h[side].second]] = next_vertex + side;
        pos[sl[h[side].second]] = 1;
      }
      const int bar = static_cast<int>(g.ends.size());
      g.ends.push_back({next_vertex, next_vertex + 1});
      g.rotation[next_vertex][2] = bar;
      g.rotation[next_vertex + 1][2] = bar;
      next_vertex += 2;
    }

    std::vector<char> seen(darts, 0);
    for (int d = 0; d < darts; ++d) {
      if (vert[d] < 0 || seen[d]) continue;
      int cur = d;
      int far = index_.mate[cur];
      seen[cur] = 1;
      while (vert[far] < 0) {
        seen[far] = 1;
        cur = through[far];
        seen[cur] = 1;
        far = index_.mate[cur];
      }
      seen[far] = 1;
      const int e = static_cast<int>(g.ends.size());
      g.ends.push_back({vert[d], vert[far]});
      g.rotation[vert[d]][pos[d]] = e;
      g.rotation[vert[far]][pos[far]] = e;
    }
    g.free_circles = base_circles_;
    for (int d = 0; d < darts; ++d) {
      if (seen[d]) continue;
      int cur = d;
      do {
        seen[cur] = 1;
        const int far = index_.mate[cur];
        seen[far] = 1;
        cur = through[far];
      } while (cur != d);
      ++g.free_circles;
    }
    return g;
  }

  int crossings() const { return index_.num_crossings; }

 private:
  detail::MapIndex index_;
  std::vector<Pairing> oriented_;
  std::size_t base_circles_;
};

std::int64_t skein_value(const Diagram& d, std::uint64_t& leaves) {
  if (has_vertex_loop(d)) return 0;
  if (d.crossings.empty()) {
    ++leaves;
    return static_cast<std::int64_t>(count_tait(underlying_graph(d)));
  }
  const std::string& x = d.crossings.front().id;
  const std::int64_t smooth = skein_value(resolve_crossing(d, x, Resolution::Smoothing), leaves);
  const std::int64_t h = skein_value(resolve_crossing(d, x, Resolution::H), leaves);
  return smooth - h;
}

}  // namespace

Pairing oriented_pairing(const Diagram& diagram, std::string_view crossing) {
  const detail::Editor ed(diagram);
  return oriented_pairing_in(ed, std::string(crossing));
}

Diagram resolve_crossing(const Diagram& diagram, std::string_view crossing, Resolution kind) {
  detail::Editor ed(diagram);
  const std::string x(crossing);
  resolve_in(ed, x, kind, oriented_pairing_in(ed, x));
  return ed.finish();
}

Diagram resolve_crossing(const Diagram& diagram, std::string_view crossing, Resolution kind,
                         Pairing smoothing) {
  detail::Editor ed(diagram);
  const std::string x(crossing);
  ed.crossing(x);
  resolve_in(ed, x, kind, smoothing);
  return ed.finish();
}

ResolutionAssignment ResolutionAssignment::from_mask(const Diagram& diagram, std::uint64_t mask) {
  if (diagram.crossings.size() < 64 && (mask >> diagram.crossings.size()) != 0)
    throw Error(ErrorKind::InvalidParameter, "mask has bits beyond the crossing count");
  ResolutionAssignment a;
  for (std::size_t i = 0; i < diagram.crossings.size(); ++i)
    a.bits[diagram.crossings[i].id] = ((mask >> i) & 1u) ? Resolution::H : Resolution::Smoothing;
  return a;
}

ResolutionAssignment ResolutionAssignment::from_bitstring(const Diagram& diagram,
                                                          std::string_view bits) {
  if (bits.size() != diagram.crossings.size())
    throw Error(ErrorKind::InvalidParameter,
                "assignment has " + std::to_string(bits.size()) + " bits, diagram has " +
                    std::to_string(diagram.crossings.size()) + " crossings");
  ResolutionAssignment a;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1')
      throw Error(ErrorKind::InvalidParameter, "assignment bits must be '0' or '1'");
    a.bits[diagram.crossings[i].id] = bits[i] == '1' ? Resolution::H : Resolution::Smoothing;
  }
  return a;
}

Diagram complete_resolution(const Diagram& diagram, const ResolutionAssignment& assignment) {
  if (assignment.bits.size() != diagram.crossings.size())
    throw Error(ErrorKind::InvalidParameter, "assignment does not cover every crossing");
  detail::Editor ed(diagram);
  for (const auto& [x, kind] : assignment.bits) {
    if (!ed.has_crossing(x)) throw Error(ErrorKind::UnknownId, "unknown crossing '" + x + "'");
    resolve_in(ed, x, kind, oriented_pairing_in(ed, x));
  }
  return ed.finish();
}

ResolutionCube build_cube(const Diagram& diagram, const CubeLimits& limits) {
  const std::size_t n = diagram.crossings.size();
  if (n > limits.max_crossings || n >= 63)
    throw Error(ErrorKind::TooLarge, "cube of " + std::to_string(n) +
                                         " crossings exceeds the limit of " +
                                         std::to_string(limits.max_crossings));
  const CompactResolver resolver(diagram);
  ResolutionCube cube;
  for (const auto& c : diagram.crossings) cube.crossings.push_back(c.id);
  const std::uint64_t size = std::uint64_t{1} << n;
  cube.tait_counts.resize(size);
  cube.graded_dims.assign(n + 1, 0);
  for (std::uint64_t mask = 0; mask < size; ++mask) {
    const std::uint64_t t = count_tait(resolver.graph(mask));
    cube.tait_counts[mask] = t;
    const int degree = std::popcount(mask);
    cube.graded_dims[degree] += t;
    cube.euler += (degree % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(t);
  }
  return cube;
}

PenroseResult euler_characteristic(const Diagram& diagram, const CubeLimits& limits) {
  const auto start = std::chrono::steady_clock::now();
  const ResolutionCube cube = build_cube(diagram, limits);
  PenroseResult result;
  result.method = Method::Cube;
  result.value = cube.euler;
  result.terms = cube.tait_counts.size();
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

PenroseResult penrose_skein(const Diagram& diagram) {
  const auto start = std::chrono::steady_clock::now();
  PenroseResult result;
  result.method = Method::Skein;
  result.value = skein_value(diagram, result.terms);
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace vweb
