#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <string_view>

#include "vweb/diagram.hpp"
#include "vweb/tait.hpp"

namespace vweb {

enum class Method { Direct, Cube, Skein };

const char* to_string(Method method);
Method parse_method(std::string_view name);

struct SignTally {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  int sign = 1;  // +1 iff n_plus == n_minus (mod 4)

  bool operator==(const SignTally&) const = default;
};

struct PenroseResult {
  std::int64_t value = 0;
  Method method = Method::Direct;
  std::uint64_t terms = 0;  // colorings (direct), cube vertices (cube), leaves (skein)
  std::chrono::nanoseconds elapsed{0};
};

/// +1 when the clockwise colors read 1,2,3 up to rotation, -1 for 1,3,2.
int vertex_sign(std::array<Color, 3> clockwise);

/// Tallies positive and negative vertices of `diagram` under a coloring of
/// its underlying graph.
SignTally coloring_sign(const Diagram& diagram, const TaitColoring& coloring);

/// Penrose number by summing the sign of every Tait coloring.
/// Throws Error(CapExceeded) when there are more than `cap` colorings.
PenroseResult penrose_direct(const Diagram& diagram, std::size_t cap = kDefaultEnumerationCap);

}  // namespace vweb
