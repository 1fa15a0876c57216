#pragma once

// Cross-checking of the three Penrose evaluations, and DOT export.

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "vweb/diagram.hpp"
#include "vweb/penrose.hpp"
#include "vweb/resolution.hpp"
#include "vweb/tait.hpp"

namespace vweb {

struct VerifyOptions {
  std::size_t cap = kDefaultEnumerationCap;
  CubeLimits limits;
};

struct VerifyReport {
  std::vector<PenroseResult> results;  // direct, cube, skein
  std::uint64_t tait_count = 0;
  bool is_web = false;
  int genus = 0;
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Runs all three methods and compares them; on a web also compares them with
/// the Tait count. Resource errors from any method propagate.
VerifyReport verify(const Diagram& diagram, const VerifyOptions& options = {});

/// Deterministic DOT digraph: vertices as points, crossings as boxes, one
/// directed edge per diagram edge, free circles as comments.
std::string export_dot(const Diagram& diagram);

}  // namespace vweb
