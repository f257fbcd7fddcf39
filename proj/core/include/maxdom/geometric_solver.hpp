#pragma once

#include <cstdint>

#include "maxdom/geometry.hpp"
#include "maxdom/graph.hpp"
#include "maxdom/strip.hpp"

namespace maxdom {

struct GeometricOptions {
  /// Horizontal lines over unit squares or unit-height rectangles go to the interval solver.
  bool interval_fast_path = true;
  DecompositionConfig decomposition;
  PerBoxBounds bounds;
  /// Upper bound on DP state transitions before BudgetExceeded.
  std::int64_t max_transitions = std::int64_t{1} << 31;
};

/// Maximum dominating k-set of the intersection graph of objects stabbed by a line.
/// Chosen ids index instance.objects. per_k[l] is the best value with at most l objects.
SolveResult solve_geometric(const GeometricInstance& instance, int k, const GeometricOptions& options = {});

}  // namespace maxdom
