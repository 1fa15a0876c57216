#include <doctest.h>

#include "corpus.hpp"
#include "oracle.hpp"
#include "vweb/error.hpp"
#include "vweb/generate.hpp"
#include "vweb/penrose.hpp"

using namespace vweb;

namespace {

Diagram renamed(const Diagram& d, const std::string& prefix) {
  Diagram r;
  for (const auto& v : d.vertices)
    r.vertices.push_back({prefix + v.id, {prefix + v.half_edges[0], prefix + v.half_edges[1],
                                          prefix + v.half_edges[2]}});
  for (const auto& c : d.crossings) {
    Crossing x{prefix + c.id, {}};
    for (int k = 0; k < 4; ++k) x.half_edges[k] = prefix + c.half_edges[k];
    r.crossings.push_back(x);
  }
  for (const auto& e : d.edges) r.edges.push_back({prefix + e.id, prefix + e.tail, prefix + e.head});
  for (const auto& c : d.circles) r.circles.push_back(prefix + c);
  return r;
}

Diagram disjoint(const Diagram& a, const Diagram& b) {
  Diagram u = renamed(a, "l.");
  const Diagram r = renamed(b, "r.");
  u.vertices.insert(u.vertices.end(), r.vertices.begin(), r.vertices.end());
  u.crossings.insert(u.crossings.end(), r.crossings.begin(), r.crossings.end());
  u.edges.insert(u.edges.end(), r.edges.begin(), r.edges.end());
  u.circles.insert(u.circles.end(), r.circles.begin(), r.circles.end());
  return validate(u);
}

Diagram gen(Family f, std::optional<unsigned> n = std::nullopt) { return generate({f, n}); }

}  // namespace

TEST_CASE("vertex_sign") {
  CHECK(vertex_sign({1, 2, 3}) == 1);
  CHECK(vertex_sign({2, 3, 1}) == 1);
  CHECK(vertex_sign({3, 1, 2}) == 1);
  CHECK(vertex_sign({1, 3, 2}) == -1);
  CHECK(vertex_sign({3, 2, 1}) == -1);
  CHECK_THROWS_AS(vertex_sign({1, 1, 2}), Error);
  CHECK_THROWS_AS(vertex_sign({0, 1, 2}), Error);
}

TEST_CASE("coloring_sign") {
  SUBCASE("planar theta") {
    const Diagram d = gen(Family::Theta);
    const auto colorings = enumerate_tait(underlying_graph(d));
    const TaitColoring first{{1, 2, 3}, {}};
    CHECK(colorings.front() == first);
    CHECK(coloring_sign(d, first) == SignTally{1, 1, 1});
    for (const auto& c : colorings) CHECK(coloring_sign(d, c).sign == 1);
  }
  SUBCASE("crossed theta") {
    const Diagram d = gen(Family::CrossedTheta);
    for (const auto& c : enumerate_tait(underlying_graph(d))) {
      const SignTally t = coloring_sign(d, c);
      CHECK(t.n_plus + t.n_minus == 2);
      CHECK((t.n_plus == 2 || t.n_minus == 2));
      CHECK(t.sign == -1);
    }
  }
  SUBCASE("vertexless") {
    const Diagram d = gen(Family::Unlink, 2);
    for (const auto& c : enumerate_tait(underlying_graph(d))) CHECK(coloring_sign(d, c) == SignTally{0, 0, 1});
  }
}

TEST_CASE("penrose_direct examples") {
  std::int64_t power = 1;
  for (unsigned n = 1; n <= 5; ++n) {
    power *= 3;
    const PenroseResult r = penrose_direct(gen(Family::Unlink, n));
    CHECK(r.value == power);
    CHECK(r.method == Method::Direct);
    CHECK(r.terms == static_cast<std::uint64_t>(power));
  }
  CHECK(penrose_direct(gen(Family::Theta)).value == 6);
  CHECK(penrose_direct(gen(Family::CrossedTheta)).value == -6);
  const PenroseResult p = penrose_direct(gen(Family::Petersen));
  CHECK(p.value == 0);
  CHECK(p.terms == 0);
}

TEST_CASE("direct method agrees with the diagram-level brute force") {
  for (const auto& [name, d] : corpus::all()) {
    if (d.edges.size() > 12) continue;
    CAPTURE(name);
    const oracle::Totals t = oracle::diagram(d);
    const PenroseResult r = penrose_direct(d);
    CHECK(r.value == t.penrose);
    CHECK(r.terms == t.colorings);
  }
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Diagram d = random_diagram(seed, {4, 6});
    const TrivalentGraph g = underlying_graph(d);
    if (g.num_edges() > 12) continue;
    CAPTURE(seed);
    CHECK(penrose_direct(d).value == oracle::graph(g).penrose);
  }
}

TEST_CASE("webs: penrose equals the Tait count") {
  for (const auto& [name, d] : corpus::all()) {
    if (!is_web(d)) continue;
    CAPTURE(name);
    CHECK(penrose_direct(d).value == static_cast<std::int64_t>(count_tait(underlying_graph(d))));
  }
}

TEST_CASE("value bounds and parity") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Diagram d = random_diagram(seed);
    const PenroseResult r = penrose_direct(d);
    const auto t = static_cast<std::int64_t>(count_tait(underlying_graph(d)));
    CHECK(std::llabs(r.value) <= t);
    CHECK((r.value - t) % 2 == 0);
    CHECK(r.terms == static_cast<std::uint64_t>(t));
    CHECK(penrose_direct(parse(serialize(d))).value == r.value);
  }
}

TEST_CASE("multiplicative under disjoint union") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Diagram a = random_diagram(seed, {3, 6});
    const Diagram b = random_diagram(seed + 100, {3, 6});
    CHECK(penrose_direct(disjoint(a, b)).value == penrose_direct(a).value * penrose_direct(b).value);
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(penrose_direct(gen(Family::Prism, 6), 71), Error);
  CHECK(penrose_direct(gen(Family::Prism, 6), 72).value == 72);
  CHECK(parse_method("skein") == Method::Skein);
  CHECK_THROWS_AS(parse_method("magic"), Error);
}
