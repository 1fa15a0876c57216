#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "iso.hpp"
#include "vweb/error.hpp"
#include "vweb/generate.hpp"
#include "vweb/moves.hpp"
#include "vweb/resolution.hpp"

using namespace vweb;

namespace {

Diagram gen(Family f, std::optional<unsigned> n = std::nullopt) { return generate({f, n}); }

struct Values {
  std::int64_t direct, cube, skein;
  std::uint64_t tait;
  bool operator==(const Values&) const = default;
};

Values values(const Diagram& d) {
  return {penrose_direct(d).value, euler_characteristic(d).value, penrose_skein(d).value,
          count_tait(underlying_graph(d))};
}

// Same abstract graph with the same rotations, up to the graph edge naming.
bool same_graph_shape(const Diagram& a, const Diagram& b) {
  const TrivalentGraph ga = underlying_graph(a), gb = underlying_graph(b);
  return ga.vertex_ids == gb.vertex_ids && ga.num_edges() == gb.num_edges() &&
         ga.free_circles == gb.free_circles && a.vertices.size() == b.vertices.size();
}

}  // namespace

TEST_CASE("kind names round-trip") {
  for (MoveKind k : kAllMoveKinds) CHECK(parse_move_kind(to_string(k)) == k);
  CHECK_THROWS_AS(parse_move_kind("VR4"), Error);
}

TEST_CASE("find_moves examples") {
  CHECK(find_moves(gen(Family::KinkedUnknot), MoveKind::VR1Remove).size() == 1);
  CHECK(find_moves(gen(Family::Theta), MoveKind::VR1Remove).empty());
  const Diagram theta = gen(Family::Theta);
  const auto add = find_moves(theta, MoveKind::VR2Add);
  REQUIRE_FALSE(add.empty());
  const Diagram doubled = apply_move(theta, add.front());
  CHECK(doubled.crossings.size() == 2);
  CHECK(find_moves(doubled, MoveKind::VR2Remove).size() == 1);
}

TEST_CASE("VR1 inverse pair") {
  const Diagram u1 = gen(Family::Unlink, 1);
  const auto sites = find_moves(u1, MoveKind::VR1Add);
  REQUIRE(sites.size() == 1);
  const Diagram kinked = apply_move(u1, sites.front());
  CHECK(kinked.crossings.size() == 1);
  CHECK(underlying_graph(kinked).free_circles == 1);
  const auto remove = find_moves(kinked, MoveKind::VR1Remove);
  REQUIRE(remove.size() == 1);
  CHECK(apply_move(kinked, remove.front()) == u1);
  CHECK(apply_move(gen(Family::KinkedUnknot), find_moves(gen(Family::KinkedUnknot), MoveKind::VR1Remove).front()).circles.size() == 1);

  for (const auto& [name, d] : corpus::all()) {
    for (const MoveSite& s : find_moves(d, MoveKind::VR1Add)) {
      const Diagram k = apply_move(d, s);
      bool restored = false;
      for (const MoveSite& r : find_moves(k, MoveKind::VR1Remove)) restored |= apply_move(k, r) == d;
      CHECK(restored);
    }
  }
}

TEST_CASE("VR2 inverse pair") {
  for (const auto& [name, d] : corpus::all()) {
    CAPTURE(name);
    for (const MoveSite& s : find_moves(d, MoveKind::VR2Add)) {
      const Diagram k = apply_move(d, s);
      CHECK(k.crossings.size() == d.crossings.size() + 2);
      bool restored = false;
      for (const MoveSite& r : find_moves(k, MoveKind::VR2Remove))
        restored |= serialize(apply_move(k, r)) == serialize(d);
      CHECK(restored);
    }
  }
}

TEST_CASE("vertex slide inverse pair") {
  const Diagram d = gen(Family::CrossedTheta);
  for (const MoveSite& s : find_moves(d, MoveKind::VertexSlide)) {
    const Diagram k = apply_move(d, s);
    CHECK(static_cast<long>(k.crossings.size()) == static_cast<long>(d.crossings.size()) + crossing_delta(s));
    bool restored = false;
    for (const MoveSite& r : find_moves(k, MoveKind::VertexSlide))
      if (crossing_delta(r) == -crossing_delta(s)) restored |= iso::same_up_to_names(apply_move(k, r), d);
    CHECK(restored);
  }
}

TEST_CASE("every applicable move on the corpus preserves all values") {
  for (const auto& [name, d] : corpus::all()) {
    if (d.crossings.size() > 3) continue;
    CAPTURE(name);
    const Values before = values(d);
    for (MoveKind k : kAllMoveKinds)
      for (const MoveSite& s : find_moves(d, k)) {
        CAPTURE(to_string(k));
        const Diagram moved = apply_move(d, s);
        CHECK(genus(moved) == 0);
        CHECK(same_graph_shape(d, moved));
        CHECK(values(moved) == before);
      }
  }
}

TEST_CASE("VR3 and vertex-slide collapse on prepared diagrams") {
  // Build triangles with random moves and check each VR3 / collapse found.
  std::mt19937_64 rng(11);
  int vr3 = 0, collapse = 0;
  for (int walk = 0; walk < 60 && (vr3 < 10 || collapse < 10); ++walk) {
    Diagram d = walk % 2 ? gen(Family::Theta) : gen(Family::K4);
    for (int step = 0; step < 4; ++step) d = random_move(d, rng, {6});
    const Values before = values(d);
    for (const MoveSite& s : find_moves(d, MoveKind::VR3)) {
      const Diagram moved = apply_move(d, s);
      CHECK(moved.crossings.size() == d.crossings.size());
      CHECK(genus(moved) == 0);
      CHECK(values(moved) == before);
      // VR3 is an involution on its triangle
      bool restored = false;
      for (const MoveSite& r : find_moves(moved, MoveKind::VR3))
        restored |= iso::same_up_to_names(apply_move(moved, r), d);
      CHECK(restored);
      ++vr3;
    }
    for (const MoveSite& s : find_moves(d, MoveKind::VertexSlide)) {
      if (crossing_delta(s) != -1) continue;
      const Diagram moved = apply_move(d, s);
      CHECK(genus(moved) == 0);
      CHECK(values(moved) == before);
      ++collapse;
    }
  }
  CHECK(vr3 >= 10);
  CHECK(collapse >= 10);
}

TEST_CASE("renaming check") {
  const Diagram ct = gen(Family::CrossedTheta);
  CHECK(iso::same_up_to_names(ct, parse(
      "vweb 1\nvertex p p.b p.a p.c\nvertex q q.a q.c q.b\ncrossing y y.3 y.4 y.1 y.2\n"
      "edge e1 p.a y.3\nedge e2 y.1 q.a\nedge f p.b q.b\nedge g1 p.c y.2\nedge g2 y.4 q.c\n")));
  CHECK_FALSE(iso::same_up_to_names(ct, reverse_strand(ct, "b")));
  CHECK_FALSE(iso::same_up_to_names(gen(Family::Theta), corpus::load("toroidal_theta.vweb")));
}

TEST_CASE("stale sites") {
  const Diagram theta = gen(Family::Theta);
  auto kind = [&](const MoveSite& s) {
    try {
      apply_move(theta, s);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Syntax;
  };
  CHECK(kind({MoveKind::VR1Remove, {"x", "k1"}}) == ErrorKind::StaleSite);
  CHECK(kind({MoveKind::VR1Add, {"zz", "L"}}) == ErrorKind::StaleSite);
  CHECK(kind({MoveKind::VR1Add, {"a", "Q"}}) == ErrorKind::StaleSite);
  CHECK(kind({MoveKind::VR2Remove, {"x", "y"}}) == ErrorKind::StaleSite);
  CHECK(kind({MoveKind::VR3, {"u", "v", "w", "a.t"}}) == ErrorKind::StaleSite);
  CHECK(kind({MoveKind::VertexSlide, {"u", "v", "a.t"}}) == ErrorKind::StaleSite);
  CHECK(kind({MoveKind::VR2Add, {"a.t", "a.h"}}) == ErrorKind::StaleSite);
}

TEST_CASE("random walks keep values, rotations and planarity") {
  std::mt19937_64 rng(3);
  for (const auto& [name, d] : corpus::all()) {
    CAPTURE(name);
    const Values before = values(d);
    for (int walk = 0; walk < 5; ++walk) {
      Diagram w = d;
      for (int step = 0; step < 6; ++step) w = random_move(w, rng, {8});
      CHECK(w.crossings.size() <= std::max<std::size_t>(8, d.crossings.size()));
      CHECK(genus(w) == 0);
      CHECK(same_graph_shape(d, w));
      CHECK(values(w) == before);
    }
  }
}
