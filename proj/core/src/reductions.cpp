#include "maxdom/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "maxdom/errors.hpp"

namespace maxdom {

std::int64_t padded_size(int n, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InvalidInput("alpha must lie in (0, 1], got " + std::to_string(alpha));
  }
  const double ratio = static_cast<double>(n) / alpha;
  return static_cast<std::int64_t>(std::floor(ratio + 1e-9 * std::max(1.0, ratio)));
}

Graph pad_for_partial(const Graph& g, double alpha, const PaddingConfig& config) {
  if (g.size() < 1) throw InvalidInput("padding needs a non-empty graph");
  const std::int64_t total = padded_size(g.size(), alpha);
  const std::int64_t extra = total - g.size();
  if (extra > config.max_padding) {
    throw BudgetExceeded("padding would append " + std::to_string(extra) + " nodes (limit " +
                         std::to_string(config.max_padding) + ")");
  }
  const auto edges = g.edges();
  return Graph(static_cast<NodeId>(total), edges);
}

NodeSet recover_dominating_set(const Graph& g, const Graph& g_padded, const NodeSet& s_prime) {
  const NodeId n = g.size();
  if (g_padded.size() < n) throw InvalidInput("padded graph is smaller than the original");
  check_members(g_padded, s_prime);
  if (closed_neighborhood_size(g_padded, s_prime) < n) {
    throw ContractViolation("S' dominates fewer than n = " + std::to_string(n) + " nodes of the padded graph");
  }

  std::vector<NodeId> kept;
  for (NodeId v : s_prime) {
    if (v < n) kept.push_back(v);
  }
  NodeSet core(kept);
  const NodeSet covered = closed_neighborhood(g, core);
  for (NodeId v = 0; v < n; ++v) {
    if (!covered.contains(v)) kept.push_back(v);
  }
  NodeSet out(std::move(kept));
  if (out.size() > s_prime.size()) {
    throw ContractViolation("recovered set is larger than S'; padded graph does not match the original");
  }
  return out;
}

SolveResult kset_via_partial(const PartialSolver& partial_solver, const Graph& g, int k) {
  const int n = g.size();
  if (k < 0 || k > n) throw InvalidInput("k=" + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  SolveResult result;
  result.k = k;
  if (n == 0 || k == 0) return result;

  // gamma[i] = gamma_{i/n}, i = 1..n.
  std::vector<SolveResult> witnesses;
  witnesses.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    witnesses.push_back(partial_solver(g, static_cast<double>(i) / n));
    if (i > 1 && witnesses[i - 1].k < witnesses[i - 2].k) {
      throw ContractViolation("partial solver returned a non-monotone gamma sequence at i=" + std::to_string(i));
    }
  }

  // Largest i with gamma_{i/n} <= k.
  int bracket = 0;
  for (int i = 1; i <= n; ++i) {
    if (witnesses[i - 1].k <= k) bracket = i;
  }
  if (bracket == 0) throw ContractViolation("gamma_{1/n} exceeds k >= 1");

  result.chosen = pad_with_smallest_unused(g, witnesses[bracket - 1].chosen, k);
  result.nbd_size = closed_neighborhood_size(g, result.chosen);
  if (result.nbd_size < bracket) {
    throw ContractViolation("partial solver witness does not reach its coverage target");
  }
  return result;
}

SolveResult partial_via_kset(const KSetSolver& kset_solver, const Graph& g, double alpha) {
  const int target = required_coverage(g.size(), alpha);
  for (int k = 0; k <= g.size(); ++k) {
    SolveResult r = kset_solver(g, k);
    if (r.nbd_size >= target) {
      r.k = k;
      return r;
    }
  }
  throw ContractViolation("k-set solver never reached ceil(alpha n), even for k = n");
}

Cnf2::Cnf2(int num_vars, std::vector<Clause> clauses) : num_vars_(num_vars), clauses_(std::move(clauses)) {
  if (num_vars_ < 1) throw InvalidInput("2-CNF needs at least one variable");
  if (clauses_.empty()) throw InvalidInput("2-CNF needs at least one clause");
  for (std::size_t j = 0; j < clauses_.size(); ++j) {
    for (const Literal& lit : {clauses_[j].first, clauses_[j].second}) {
      if (lit.var < 0 || lit.var >= num_vars_) {
        throw InvalidInput("clause " + std::to_string(j) + " uses variable " + std::to_string(lit.var + 1) +
                           " outside 1.." + std::to_string(num_vars_));
      }
    }
  }
}

int Cnf2::satisfied_count(const std::vector<bool>& assignment) const {
  const auto holds = [&](Literal lit) { return assignment[static_cast<std::size_t>(lit.var)] == lit.positive; };
  return static_cast<int>(
      std::count_if(clauses_.begin(), clauses_.end(), [&](const Clause& c) { return holds(c.first) || holds(c.second); }));
}

GcGraph build_gc(const Cnf2& cnf) {
  const GcLayout at{cnf.num_vars(), cnf.num_clauses()};
  const int n = cnf.num_vars();
  const int m = cnf.num_clauses();

  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int i = 0; i < n; ++i) {
    const NodeId pos = at.literal({i, true});
    const NodeId neg = at.literal({i, false});
    edges.emplace_back(pos, neg);
    for (int t = 0; t < 2 * m; ++t) {
      edges.emplace_back(pos, at.guard(i, t));
      edges.emplace_back(neg, at.guard(i, t));
    }
  }
  edges.emplace_back(at.literal({0, true}), at.apex());
  edges.emplace_back(at.literal({0, false}), at.apex());
  for (int j = 0; j < m; ++j) {
    const Clause& c = cnf.clauses()[static_cast<std::size_t>(j)];
    edges.emplace_back(at.clause(j), at.literal(c.first));
    if (!(c.second == c.first)) edges.emplace_back(at.clause(j), at.literal(c.second));
    edges.emplace_back(at.clause(j), at.apex());
  }

  GcGraph out{Graph(at.node_count(), edges), {}};
  out.labels.reserve(static_cast<std::size_t>(at.node_count()));
  for (int i = 0; i < n; ++i) {
    out.labels.push_back({GcRole::kPositiveLiteral, i, 0});
    out.labels.push_back({GcRole::kNegativeLiteral, i, 0});
  }
  for (int j = 0; j < m; ++j) out.labels.push_back({GcRole::kClause, j, 0});
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t < 2 * m; ++t) out.labels.push_back({GcRole::kGuard, i, t});
  }
  out.labels.push_back({GcRole::kApex, 0, 0});
  return out;
}

bool gc_sat_decision(const Cnf2& cnf, const KSetSolver& dom_solver) {
  const GcGraph gc = build_gc(cnf);
  const int total = gc.graph.size();
  const int n = cnf.num_vars();
  if (dom_solver(gc.graph, n).nbd_size == total) return true;
  if (dom_solver(gc.graph, n + 1).nbd_size == total) return false;
  throw ContractViolation("domination number of G_C exceeds n + 1; construction is broken");
}

std::vector<bool> induced_assignment(const Cnf2& cnf, const NodeSet& chosen) {
  const GcLayout at{cnf.num_vars(), cnf.num_clauses()};
  const int n = cnf.num_vars();
  std::vector<bool> value(static_cast<std::size_t>(n), false);
  std::vector<int> open;
  for (int i = 0; i < n; ++i) {
    const bool pos = chosen.contains(at.literal({i, true}));
    const bool neg = chosen.contains(at.literal({i, false}));
    if (pos != neg) {
      value[static_cast<std::size_t>(i)] = pos;
    } else {
      open.push_back(i);
    }
  }
  for (int i : open) {
    value[static_cast<std::size_t>(i)] = true;
    const int with_true = cnf.satisfied_count(value);
    value[static_cast<std::size_t>(i)] = false;
    if (with_true > cnf.satisfied_count(value)) value[static_cast<std::size_t>(i)] = true;
  }
  return value;
}

int max2sat_via_kset(const Cnf2& cnf, const KSetSolver& kset_solver) {
  const GcGraph gc = build_gc(cnf);
  const GcLayout at{cnf.num_vars(), cnf.num_clauses()};
  const SolveResult best = kset_solver(gc.graph, cnf.num_vars());
  const int satisfied = best.nbd_size - at.fixed_coverage();
  if (satisfied < 0 || satisfied > cnf.num_clauses()) {
    throw ContractViolation("n-set coverage " + std::to_string(best.nbd_size) +
                            " is inconsistent with the G_C offset " + std::to_string(at.fixed_coverage()));
  }
  return satisfied;
}

}  // namespace maxdom
