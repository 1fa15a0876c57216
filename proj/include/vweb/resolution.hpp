#pragma once

// Crossing resolutions, the cube of complete resolutions and its Euler
// characteristic, and the skein recursion.
//
// At a crossing (s1, s2, s3, s4) the two adjacent-slot pairings are
// (s1 s2)(s3 s4) and (s4 s1)(s2 s3). The 0-resolution reconnects the slots
// along the pairing that joins every inbound end to an outbound end. The
// 1-resolution takes the other pairing and joins each pair at a new
// trivalent vertex; a bar edge connects the two new vertices. Each new vertex
// lists its pair in the crossing's clockwise order followed by the bar.
// With these conventions P(D) = P(D_0) - P(D_1) at every crossing.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "vweb/diagram.hpp"
#include "vweb/penrose.hpp"

namespace vweb {

enum class Resolution : std::uint8_t { Smoothing = 0, H = 1 };

enum class Pairing : std::uint8_t {
  Slots12_34,  // (s1 s2)(s3 s4)
  Slots41_23,  // (s4 s1)(s2 s3)
};

/// The pairing the 0-resolution uses at `crossing`, read off the orientations.
Pairing oriented_pairing(const Diagram& diagram, std::string_view crossing);

Diagram resolve_crossing(const Diagram& diagram, std::string_view crossing, Resolution kind);

/// Orientation-free variant: the 0-resolution smooths along `smoothing`, the
/// 1-resolution builds the H on the other pairing. Smoothing against the
/// orientations can leave incoherent strands at remaining crossings, in which
/// case Error(StrandOrientation) is thrown.
Diagram resolve_crossing(const Diagram& diagram, std::string_view crossing, Resolution kind,
                         Pairing smoothing);

struct ResolutionAssignment {
  std::map<std::string, Resolution> bits;

  /// Bit i of `mask` resolves the i-th crossing in identifier order.
  static ResolutionAssignment from_mask(const Diagram& diagram, std::uint64_t mask);
  /// One character per crossing in identifier order, '0' or '1'.
  static ResolutionAssignment from_bitstring(const Diagram& diagram, std::string_view bits);
};

/// Resolves every crossing. The result does not depend on the order in which
/// the crossings are processed.
Diagram complete_resolution(const Diagram& diagram, const ResolutionAssignment& assignment);

struct CubeLimits {
  std::size_t max_crossings = 20;
};

struct ResolutionCube {
  std::vector<std::string> crossings;       // bit i of a mask <-> crossings[i]
  std::vector<std::uint64_t> tait_counts;   // T(D_J), indexed by mask
  std::vector<std::uint64_t> graded_dims;   // d_i = sum over |J| = i
  std::int64_t euler = 0;                   // sum (-1)^i d_i
};

/// Tait count of every complete resolution. Resolved webs are not kept;
/// rebuild one with complete_resolution(diagram, from_mask(diagram, mask)).
/// Throws Error(TooLarge) beyond limits.max_crossings.
ResolutionCube build_cube(const Diagram& diagram, const CubeLimits& limits = {});

PenroseResult euler_characteristic(const Diagram& diagram, const CubeLimits& limits = {});

/// P(D) = P(D_0) - P(D_1) on the first remaining crossing, down to webs,
/// where the Tait count is taken. Branches containing a loop edge at a
/// trivalent vertex are cut (they contribute zero).
PenroseResult penrose_skein(const Diagram& diagram);

}  // namespace vweb
