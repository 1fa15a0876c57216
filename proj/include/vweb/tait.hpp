#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "vweb/diagram.hpp"

namespace vweb {

using Color = std::uint8_t;  // 1, 2 or 3

struct TaitColoring {
  std::vector<Color> edge_colors;    // indexed like TrivalentGraph::ends
  std::vector<Color> circle_colors;  // indexed like TrivalentGraph::circle_ids

  bool operator==(const TaitColoring&) const = default;
  auto operator<=>(const TaitColoring&) const = default;
};

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// Number of Tait colorings. Each free circle contributes a factor 3.
std::uint64_t count_tait(const TrivalentGraph& graph);

/// All Tait colorings in lexicographic order of (edge colors, circle colors).
/// Throws Error(CapExceeded) when there are more than `cap` of them.
std::vector<TaitColoring> enumerate_tait(const TrivalentGraph& graph,
                                         std::size_t cap = kDefaultEnumerationCap);

/// Calls `visit` once per Tait coloring of the graph's edges, ignoring free
/// circles. Colorings arrive in search order, not lexicographic order.
void for_each_edge_coloring(const TrivalentGraph& graph,
                            const std::function<void(std::span<const Color>)>& visit);

bool has_loop(const TrivalentGraph& graph);

/// True iff removing some edge disconnects its component. Loops never count.
bool has_bridge(const TrivalentGraph& graph);

/// Disjoint union; indices of `b` are shifted past those of `a`.
TrivalentGraph disjoint_union(const TrivalentGraph& a, const TrivalentGraph& b);

}  // namespace vweb
