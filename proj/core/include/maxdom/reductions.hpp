#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maxdom/graph.hpp"
#include "maxdom/oracle.hpp"

namespace maxdom {

// ---------------------------------------------------------------------------
// Padding reduction: dominating set <-> alpha-partial dominating set.
// ---------------------------------------------------------------------------

struct PaddingConfig {
  /// Upper bound on the number of isolated nodes appended.
  std::int64_t max_padding = std::int64_t{1} << 22;
};

/// floor(n / alpha), robust to alpha being a rounded fraction.
std::int64_t padded_size(int n, double alpha);

/// G plus floor(n/alpha) - n isolated nodes appended after the original ones.
Graph pad_for_partial(const Graph& g, double alpha, const PaddingConfig& config = {});

/// Turns an alpha-partial dominating set of the padded graph (|N[S']| >= n) into a
/// dominating set of `g` no larger than S': keep S' ∩ V, drop padding picks, and add
/// every original node the kept part leaves undominated.
NodeSet recover_dominating_set(const Graph& g, const Graph& g_padded, const NodeSet& s_prime);

// ---------------------------------------------------------------------------
// Equivalence drivers between the two problems.
// ---------------------------------------------------------------------------

/// Max dominating k-set from gamma_{i/n}, i = 1..n. The witness is the bracketing
/// partial-domination witness padded with the smallest unused indices.
SolveResult kset_via_partial(const PartialSolver& partial_solver, const Graph& g, int k);

/// Minimum alpha-partial dominating set: first k whose best k-set reaches ceil(alpha n).
SolveResult partial_via_kset(const KSetSolver& kset_solver, const Graph& g, double alpha);

// ---------------------------------------------------------------------------
// 2-CNF gadget graph.
// ---------------------------------------------------------------------------

struct Literal {
  int var = 0;  // 0-based
  bool positive = true;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct Clause {
  Literal first;
  Literal second;
  friend bool operator==(const Clause&, const Clause&) = default;
};

/// 2-CNF over variables 0..num_vars-1.
class Cnf2 {
 public:
  /// Throws InvalidInput unless num_vars >= 1, clauses non-empty and every variable in range.
  Cnf2(int num_vars, std::vector<Clause> clauses);

  [[nodiscard]] int num_vars() const { return num_vars_; }
  [[nodiscard]] const std::vector<Clause>& clauses() const { return clauses_; }
  [[nodiscard]] int num_clauses() const { return static_cast<int>(clauses_.size()); }

  /// Number of clauses satisfied by `assignment` (one bool per variable).
  [[nodiscard]] int satisfied_count(const std::vector<bool>& assignment) const;

  friend bool operator==(const Cnf2&, const Cnf2&) = default;

 private:
  int num_vars_;
  std::vector<Clause> clauses_;
};

enum class GcRole : std::uint8_t { kPositiveLiteral, kNegativeLiteral, kClause, kGuard, kApex };

struct GcLabel {
  GcRole role;
  int index = 0;       // variable for literals/guards, clause for clauses
  int sub_index = 0;   // guard number 0..2m-1
};

struct GcGraph {
  Graph graph;
  std::vector<GcLabel> labels;
};

/// Node layout: x_1, x̄_1, ..., x_n, x̄_n, then c_1..c_m, then 2m guards per variable
/// grouped by variable, then the apex.
struct GcLayout {
  int num_vars;
  int num_clauses;
  [[nodiscard]] NodeId literal(Literal lit) const { return 2 * lit.var + (lit.positive ? 0 : 1); }
  [[nodiscard]] NodeId clause(int j) const { return 2 * num_vars + j; }
  [[nodiscard]] NodeId guard(int var, int t) const { return 2 * num_vars + num_clauses + var * 2 * num_clauses + t; }
  [[nodiscard]] NodeId apex() const { return 2 * num_vars + num_clauses + 2 * num_clauses * num_vars; }
  [[nodiscard]] NodeId node_count() const { return apex() + 1; }
  /// 2n + 2mn + 1: nodes an assignment-inducing n-set always dominates.
  [[nodiscard]] int fixed_coverage() const { return 2 * num_vars + 2 * num_clauses * num_vars + 1; }
};

GcGraph build_gc(const Cnf2& cnf);

/// True iff gamma(G_C) = n. Only k = n and k = n + 1 are queried.
bool gc_sat_decision(const Cnf2& cnf, const KSetSolver& dom_solver);

/// Assignment read off an n-set of G_C. Variables with exactly one chosen literal take
/// that literal's value; the rest are fixed greedily to maximise satisfied clauses.
std::vector<bool> induced_assignment(const Cnf2& cnf, const NodeSet& chosen);

/// Maximum number of simultaneously satisfiable clauses:
/// best |N[S]| over n-sets of G_C minus (2n + 2mn + 1).
int max2sat_via_kset(const Cnf2& cnf, const KSetSolver& kset_solver);

}  // namespace maxdom
