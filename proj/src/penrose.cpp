#include "vweb/penrose.hpp"

#include <string>

#include "vweb/error.hpp"

namespace vweb {

const char* to_string(Method method) {
  switch (method) {
    case Method::Direct: return "direct";
    case Method::Cube: return "cube";
    case Method::Skein: return "skein";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "direct") return Method::Direct;
  if (name == "cube") return Method::Cube;
  if (name == "skein") return Method::Skein;
  throw Error(ErrorKind::InvalidParameter, "unknown method '" + std::string(name) + "'");
}

int vertex_sign(std::array<Color, 3> c) {
  if (c[0] == c[1] || c[1] == c[2] || c[0] == c[2] || c[0] < 1 || c[0] > 3 || c[1] < 1 ||
      c[1] > 3 || c[2] < 1 || c[2] > 3)
    throw Error(ErrorKind::ContractViolation, "vertex colors must be a permutation of 1,2,3");
  // 1 -> 2 -> 3 -> 1 clockwise
  return (c[1] + 3 - c[0]) % 3 == 1 ? 1 : -1;
}

namespace {

// (n_plus - n_minus) mod 4 over all vertices of the graph.
int chirality_mod4(const TrivalentGraph& graph, std::span<const Color> colors) {
  int acc = 0;
  for (const auto& rot : graph.rotation) {
    const int s = (colors[rot[1]] + 3 - colors[rot[0]]) % 3 == 1 ? 1 : 3;
    acc = (acc + s) & 3;
  }
  return acc;
}

}  // namespace

SignTally coloring_sign(const Diagram& diagram, const TaitColoring& coloring) {
  const TrivalentGraph graph = underlying_graph(diagram);
  if (coloring.edge_colors.size() != graph.num_edges())
    throw Error(ErrorKind::ContractViolation, "coloring does not match the underlying graph");
  SignTally tally;
  for (const auto& rot : graph.rotation) {
    const int s = vertex_sign({coloring.edge_colors[rot[0]], coloring.edge_colors[rot[1]],
                               coloring.edge_colors[rot[2]]});
    (s > 0 ? tally.n_plus : tally.n_minus) += 1;
  }
  tally.sign = (tally.n_plus % 4) == (tally.n_minus % 4) ? 1 : -1;
  return tally;
}

PenroseResult penrose_direct(const Diagram& diagram, std::size_t cap) {
  const auto start = std::chrono::steady_clock::now();
  const TrivalentGraph graph = underlying_graph(diagram);

  std::uint64_t circle_factor = 1;
  for (std::size_t i = 0; i < graph.free_circles; ++i) circle_factor *= 3;

  std::int64_t sum = 0;
  std::uint64_t colorings = 0;
  for_each_edge_coloring(graph, [&](std::span<const Color> colors) {
    ++colorings;
    if (colorings * circle_factor > cap)
      throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(cap) + " Tait colorings");
    // n_plus + n_minus is even, so the difference is 0 or 2 mod 4
    sum += chirality_mod4(graph, colors) == 0 ? 1 : -1;
  });

  PenroseResult result;
  result.method = Method::Direct;
  result.value = sum * static_cast<std::int64_t>(circle_factor);
  result.terms = colorings * circle_factor;
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace vweb
