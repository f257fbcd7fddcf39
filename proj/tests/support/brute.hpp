#pragma once

// Second, deliberately naive solver family used to cross-check the library. Works on a
// dense adjacency matrix and enumerates raw bitmasks; no code shared with maxdom's oracle.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "maxdom/graph.hpp"
#include "maxdom/reductions.hpp"

namespace brute {

inline std::vector<std::vector<bool>> matrix(const maxdom::Graph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges()) {
    m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
  }
  return m;
}

inline int coverage(const std::vector<std::vector<bool>>& m, std::uint64_t mask) {
  int count = 0;
  for (std::size_t v = 0; v < m.size(); ++v) {
    bool hit = (mask >> v) & 1U;
    for (std::size_t u = 0; !hit && u < m.size(); ++u) hit = ((mask >> u) & 1U) && m[u][v];
    count += hit ? 1 : 0;
  }
  return count;
}

inline std::vector<int> coverage_table(const maxdom::Graph& g) {
  const auto m = matrix(g);
  std::vector<int> table(std::size_t{1} << m.size());
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) table[mask] = coverage(m, mask);
  return table;
}

/// best[k] = max |N[S]| over |S| = k.
inline std::vector<int> best_per_k(const maxdom::Graph& g) {
  const auto table = coverage_table(g);
  std::vector<int> best(static_cast<std::size_t>(g.size()) + 1, 0);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    auto& slot = best[static_cast<std::size_t>(std::popcount(mask))];
    slot = std::max(slot, table[mask]);
  }
  return best;
}

/// Smallest |S| with |N[S]| >= need.
inline int min_size_covering(const maxdom::Graph& g, int need) {
  const auto table = coverage_table(g);
  int best = g.size() + 1;
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    if (table[mask] >= need) best = std::min(best, std::popcount(mask));
  }
  return best;
}

inline int max_satisfied(const maxdom::Cnf2& cnf) {
  int best = 0;
  for (std::uint32_t bits = 0; bits < (1U << cnf.num_vars()); ++bits) {
    int sat = 0;
    for (const auto& c : cnf.clauses()) {
      const bool a = (((bits >> c.first.var) & 1U) != 0) == c.first.positive;
      const bool b = (((bits >> c.second.var) & 1U) != 0) == c.second.positive;
      sat += (a || b) ? 1 : 0;
    }
    best = std::max(best, sat);
  }
  return best;
}

inline bool satisfiable(const maxdom::Cnf2& cnf) { return max_satisfied(cnf) == cnf.num_clauses(); }

inline maxdom::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<maxdom::NodeId, maxdom::NodeId>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return maxdom::Graph(n, edges);
}

inline maxdom::Cnf2 random_cnf(std::mt19937_64& rng, int vars, int clauses) {
  std::uniform_int_distribution<int> var(0, vars - 1);
  std::bernoulli_distribution sign(0.5);
  std::vector<maxdom::Clause> list;
  for (int j = 0; j < clauses; ++j) list.push_back({{var(rng), sign(rng)}, {var(rng), sign(rng)}});
  return maxdom::Cnf2(vars, std::move(list));
}

}  // namespace brute
