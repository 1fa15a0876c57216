#pragma once

// Virtual Reidemeister moves on plane diagrams.
//
//   VR1_add / VR1_remove   kink on a single strand (one crossing)
//   VR2_add / VR2_remove   two strands crossing twice around a bigon face
//   VR3                    a strand passed across the opposite crossing of a
//                          triangular face bounded by three crossings
//   vertex_slide           a strand passed across a trivalent vertex; it
//                          crosses either two of the vertex's edges
//                          (triangular face) or the third one
//
// Every move keeps the underlying graph and the vertex rotations.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "vweb/diagram.hpp"

namespace vweb {

enum class MoveKind { VR1Add, VR1Remove, VR2Add, VR2Remove, VR3, VertexSlide };

inline constexpr MoveKind kAllMoveKinds[] = {MoveKind::VR1Add,    MoveKind::VR1Remove,
                                             MoveKind::VR2Add,    MoveKind::VR2Remove,
                                             MoveKind::VR3,       MoveKind::VertexSlide};

const char* to_string(MoveKind kind);
MoveKind parse_move_kind(std::string_view name);

/// Where a move applies. Anchors per kind:
///   VR1_add       {edge, "L"|"R"} kink on the left/right of the edge, or {circle}
///   VR1_remove    {crossing, loop edge}
///   VR2_add       {half-edge, half-edge}: two edge sides of one face, each
///                 named by the half-edge the face walk leaves from
///   VR2_remove    {crossing, crossing} bounding a bigon face
///   VR3           {crossing, crossing, crossing, half-edge of the triangle}
///   vertex_slide  {vertex, crossing, crossing, half-edge} collapses a
///                 triangle to one crossing; {vertex, crossing, half-edge}
///                 expands the crossing on that vertex edge into two
struct MoveSite {
  MoveKind kind = MoveKind::VR1Add;
  std::vector<std::string> anchors;

  bool operator==(const MoveSite&) const = default;
};

/// Every site of `kind`, in a deterministic order.
std::vector<MoveSite> find_moves(const Diagram& diagram, MoveKind kind);

/// Throws Error(StaleSite) when the site's pattern is not present.
Diagram apply_move(const Diagram& diagram, const MoveSite& site);

/// Change in the number of crossings caused by the move.
int crossing_delta(const MoveSite& site);

struct WalkOptions {
  std::size_t max_crossings = 10;
};

/// Picks a move kind uniformly among those with an admissible site, then a
/// site uniformly. Moves that would exceed `max_crossings` are skipped.
/// Returns the diagram unchanged when no move applies.
Diagram random_move(const Diagram& diagram, std::mt19937_64& rng,
                    const WalkOptions& options = {});

}  // namespace vweb
