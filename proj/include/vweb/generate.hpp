#pragma once

// Named diagram families and a seeded random generator of plane diagrams.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vweb/diagram.hpp"

namespace vweb {

enum class Family { Unlink, Theta, CrossedTheta, KinkedUnknot, K4, Prism, Dumbbell, Petersen };

inline constexpr Family kAllFamilies[] = {Family::Unlink,       Family::Theta, Family::CrossedTheta,
                                          Family::KinkedUnknot, Family::K4,    Family::Prism,
                                          Family::Dumbbell,     Family::Petersen};

const char* to_string(Family family);
Family parse_family(std::string_view name);
bool is_parameterized(Family family);

struct GeneratorSpec {
  Family family = Family::Theta;
  std::optional<unsigned> parameter;  // n for unlink (n >= 1) and prism (n >= 3)
};

/// Throws Error(InvalidParameter) for a malformed spec.
Diagram generate(const GeneratorSpec& spec);

struct RandomOptions {
  std::size_t max_crossings = 10;
  std::size_t max_vertices = 12;
};

/// A plane diagram built from a theta by inserting chords that cross the
/// existing edges, followed by a few random moves. Deterministic in `seed`.
Diagram random_diagram(std::uint64_t seed, const RandomOptions& options = {});

/// Straight-line drawing: points, and segments between point indices, each
/// oriented from its first to its second point. Segment interiors may cross
/// transversally; every crossing becomes a 4-valent node. Points of degree 3
/// become vertices; the rotation at each node is read off the angles.
struct StraightLineDrawing {
  struct Point {
    double x = 0;
    double y = 0;
  };
  std::vector<Point> points;
  std::vector<std::array<int, 2>> segments;
};

Diagram from_drawing(const StraightLineDrawing& drawing);

}  // namespace vweb
