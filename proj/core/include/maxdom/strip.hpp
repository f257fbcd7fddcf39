#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "maxdom/geometry.hpp"

namespace maxdom {

/// Per-box bounds on how many objects any optimal solution needs from one box.
struct PerBoxBounds {
  int unit = 11;           // unit squares and unit disks
  int rect_diagonal = 23;  // unit-height rectangles, line at 45 degrees
};

struct StripParams {
  double strip_width = 0.0;  // across the line
  double box_length = 0.0;   // along the line
  int per_box_bound = 0;
  // Sub-box grid inside each box; 0 when the shape class does not use one.
  int sub_rows = 0;  // across
  int sub_cols = 0;  // along
};

/// Strip width, box length and per-box bound for a canonical line angle (radians).
/// Rectangles at angle 0 are rejected: they reduce to general intervals instead.
StripParams strip_params(ShapeKind kind, double theta, double max_diameter = 0.0, double min_diameter = 0.0,
                         const PerBoxBounds& bounds = {});

struct DecompositionConfig {
  int max_box_members = 16;
  std::int64_t max_boxes = std::int64_t{1} << 22;
  /// Pairwise check that only objects in equal or adjacent boxes intersect.
  bool check_locality = true;

  static DecompositionConfig from_env();
};

struct StripDecomposition {
  StripParams params;
  double box_length = 0.0;  // length used for bucketing
  double origin = 0.0;      // along-coordinate where box 0 begins
  std::vector<std::vector<int>> boxes;  // member ids per box, ascending; empty boxes kept
  std::vector<int> box_of;
  std::vector<double> along;   // per object, decomposition centre along the line
  std::vector<double> across;  // per object, signed offset of that centre

  [[nodiscard]] int box_count() const { return static_cast<int>(boxes.size()); }
  /// (row, col) of the object's sub-box inside its box; requires a sub-box grid.
  [[nodiscard]] std::pair<int, int> sub_box(int object) const;
};

/// Cuts the strip around a canonical line into consecutive half-open boxes.
/// Throws BudgetExceeded when a box holds more than `max_box_members` objects and
/// ContractViolation when two intersecting objects land two or more boxes apart.
StripDecomposition build_decomposition(const GeometricInstance& canonical, const DecompositionConfig& config = {},
                                       const PerBoxBounds& bounds = {});

}  // namespace maxdom
