#pragma once

#include <functional>

#include "maxdom/graph.hpp"

namespace maxdom {

/// Exact k-set solver: returns a k-set maximising |N[S]|.
using KSetSolver = std::function<SolveResult(const Graph&, int k)>;
/// Exact partial-domination solver: returns a minimum S with |N[S]| >= ceil(alpha n); result.k = |S|.
using PartialSolver = std::function<SolveResult(const Graph&, double alpha)>;

struct OracleConfig {
  /// Largest graph the exhaustive enumeration accepts. Hard ceiling 64 (bitmask width).
  int max_nodes = 24;

  /// Default config overridden by MAXDOM_ORACLE_MAX_NODES when set.
  static OracleConfig from_env();
};

inline constexpr int kOracleHardMaxNodes = 64;

/// ceil(alpha * n), tolerant of alpha being a rounded i/n. Throws InvalidInput unless 0 < alpha <= 1.
int required_coverage(int n, double alpha);

/// Exhaustive maximum dominating k-set. Combinations are visited in lexicographic
/// order and the first maximiser is kept, so equal inputs give equal witnesses.
SolveResult oracle_max_dom_k(const Graph& g, int k, const OracleConfig& config = {});

/// Minimum alpha-partial dominating set found by trying k = 0, 1, 2, ... with the k-set oracle.
SolveResult oracle_partial_dom(const Graph& g, double alpha, const OracleConfig& config = {});

/// Domination number via the k-set solver: min{k : nbd(k) = n}.
int domination_number(const Graph& g, const KSetSolver& solver);

/// n - (best |N[S]| over (gamma - r)-sets). Requires 0 <= r < gamma.
int domination_defect(const Graph& g, int r, const KSetSolver& solver);
int domination_defect(const Graph& g, int r, const OracleConfig& config = {});

/// Adapters so the oracle can be passed wherever a solver callback is expected.
KSetSolver oracle_kset_solver(OracleConfig config = {});
PartialSolver oracle_partial_solver(OracleConfig config = {});

}  // namespace maxdom
