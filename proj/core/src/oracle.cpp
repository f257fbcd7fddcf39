#include "maxdom/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "maxdom/errors.hpp"

namespace maxdom {

OracleConfig OracleConfig::from_env() {
  OracleConfig config;
  if (const char* raw = std::getenv("MAXDOM_ORACLE_MAX_NODES")) {
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 0 || value > kOracleHardMaxNodes) {
      throw InvalidInput("MAXDOM_ORACLE_MAX_NODES must be an integer in [0, 64]");
    }
    config.max_nodes = static_cast<int>(value);
  }
  return config;
}

int required_coverage(int n, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InvalidInput("alpha must lie in (0, 1], got " + std::to_string(alpha));
  }
  // alpha usually arrives as a rounded i/n; absorb the representation error before ceil.
  const double scaled = alpha * static_cast<double>(n);
  return static_cast<int>(std::ceil(scaled - 1e-9 * std::max(1.0, scaled)));
}

namespace {

void check_budget(const Graph& g, const OracleConfig& config) {
  const int limit = std::min(config.max_nodes, kOracleHardMaxNodes);
  if (g.size() > limit) {
    throw BudgetExceeded("oracle enumeration budget is " + std::to_string(limit) + " nodes, graph has " +
                         std::to_string(g.size()));
  }
}

std::vector<std::uint64_t> closed_masks(const Graph& g) {
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(g.size()));
  for (NodeId v = 0; v < g.size(); ++v) {
    std::uint64_t m = std::uint64_t{1} << v;
    for (NodeId u : g.neighbors(v)) m |= std::uint64_t{1} << u;
    masks[static_cast<std::size_t>(v)] = m;
  }
  return masks;
}

}  // namespace

SolveResult oracle_max_dom_k(const Graph& g, int k, const OracleConfig& config) {
  const int n = g.size();
  if (k < 0 || k > n) throw InvalidInput("k=" + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  check_budget(g, config);

  SolveResult result;
  result.k = k;
  if (k == 0) return result;

  const auto masks = closed_masks(g);
  std::vector<int> comb(static_cast<std::size_t>(k));
  std::vector<std::uint64_t> acc(static_cast<std::size_t>(k) + 1, 0);
  for (int t = 0; t < k; ++t) {
    comb[t] = t;
    acc[t + 1] = acc[t] | masks[t];
  }

  int best = -1;
  std::vector<int> best_comb;
  while (true) {
    const int value = std::popcount(acc[k]);
    if (value > best) {
      best = value;
      best_comb = comb;
      if (best == n) break;  // nothing later can beat full coverage
    }
    int t = k - 1;
    while (t >= 0 && comb[t] == n - k + t) --t;
    if (t < 0) break;
    ++comb[t];
    acc[t + 1] = acc[t] | masks[comb[t]];
    for (int u = t + 1; u < k; ++u) {
      comb[u] = comb[u - 1] + 1;
      acc[u + 1] = acc[u] | masks[comb[u]];
    }
  }

  result.chosen = NodeSet(std::vector<NodeId>(best_comb.begin(), best_comb.end()));
  result.nbd_size = best;
  return result;
}

SolveResult oracle_partial_dom(const Graph& g, double alpha, const OracleConfig& config) {
  const int target = required_coverage(g.size(), alpha);
  check_budget(g, config);
  for (int k = 0; k <= g.size(); ++k) {
    SolveResult r = oracle_max_dom_k(g, k, config);
    if (r.nbd_size >= target) return r;
  }
  throw ContractViolation("no k-set reaches the required coverage");  // unreachable for 0 < alpha <= 1
}

int domination_number(const Graph& g, const KSetSolver& solver) {
  for (int k = 0; k <= g.size(); ++k) {
    if (solver(g, k).nbd_size == g.size()) return k;
  }
  throw ContractViolation("k-set solver never reported full domination, even for k = n");
}

int domination_defect(const Graph& g, int r, const KSetSolver& solver) {
  const int gamma = domination_number(g, solver);
  if (r < 0 || r >= gamma) {
    throw InvalidInput("defect order r=" + std::to_string(r) + " must lie in [0, gamma=" + std::to_string(gamma) +
                       ")");
  }
  return g.size() - solver(g, gamma - r).nbd_size;
}

int domination_defect(const Graph& g, int r, const OracleConfig& config) {
  return domination_defect(g, r, oracle_kset_solver(config));
}

KSetSolver oracle_kset_solver(OracleConfig config) {
  return [config](const Graph& g, int k) { return oracle_max_dom_k(g, k, config); };
}

PartialSolver oracle_partial_solver(OracleConfig config) {
  return [config](const Graph& g, double alpha) { return oracle_partial_dom(g, alpha, config); };
}

}  // namespace maxdom
