#pragma once

#include <cstdint>
#include <random>

#include "maxdom/io.hpp"

namespace maxdom {

struct GenParams {
  double edge_probability = 0.3;  // graph
  double max_length = 3.0;        // intervals: lengths in [0.1, max_length]
  double theta_deg = 0.0;         // geometric line
  double intercept = 0.0;
  double spread = 1.0;            // geometric: along-line extent per object
  double max_width = 3.0;         // rectangles: widths in [1, max_width]
  double max_diameter = 2.0;      // disks: D
  double min_diameter = 1.0;      // disks: delta
  int num_vars = 3;               // cnf2
  int num_clauses = 5;
};

/// Uniform double in [0, 1) from the top 53 bits, identical on every platform.
double unit_uniform(std::mt19937_64& rng);

/// Rounds to the 1e-6 grid used by every generated coordinate.
double snap(double x);

/// Deterministic instance of `kind` with `n` items (for cnf2, the clause and variable
/// counts come from `params`). Throws InvalidInput on infeasible parameters.
Instance generate(InstanceKind kind, int n, std::uint64_t seed, const GenParams& params = {});

}  // namespace maxdom
