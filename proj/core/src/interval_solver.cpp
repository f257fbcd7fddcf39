#include "maxdom/interval_solver.hpp"

#include <algorithm>
#include <string>

#include "maxdom/errors.hpp"
#include "maxdom/range_max_tree.hpp"

namespace maxdom {

DpTables::DpTables(int n, int k) : n_(n), k_(k) {
  const std::size_t cells = static_cast<std::size_t>(n) * static_cast<std::size_t>(k + 1);
  f_.assign(cells, kUndefined);
  g_.assign(cells, kUndefined);
  h_.assign(cells, kUndefined);
  pred_.assign(cells, -1);
  rule_.assign(cells, DpRule::kNone);
}

std::int32_t DpTables::best(int l) const {
  if (n_ == 0) return l == 0 ? 0 : kUndefined;
  return std::max({f(n_ - 1, l), g(n_ - 1, l), h(n_ - 1, l)});
}

std::vector<int> DpTables::witness(int i, int l) const {
  if (f(i, l) == kUndefined) throw InvalidInput("f(" + std::to_string(i) + ", " + std::to_string(l) + ") is undefined");
  std::vector<int> out;
  while (true) {
    out.push_back(i);
    if (rule(i, l) == DpRule::kSingleton) break;
    const int j = predecessor(i, l);
    if (j < 0) throw ContractViolation("dangling back pointer in interval DP");
    i = j;
    --l;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

constexpr std::int32_t kUndef = DpTables::kUndefined;

// Deleted-interval gains; all zero in the proper case.
struct Gains {
  const GeneralPreprocess* general = nullptr;
  [[nodiscard]] int extra(int i) const { return general ? general->extra(i) : 0; }
  [[nodiscard]] int common(int i, int j) const { return general ? general->common(i, j) : 0; }
};

struct Candidate {
  std::int32_t value = kUndef;
  int pred = -1;
  DpRule rule = DpRule::kNone;

  // Strictly better only, so earlier terms and smaller j win ties.
  void offer(std::int32_t v, int j, DpRule r) {
    if (v > value) {
      value = v;
      pred = j;
      rule = r;
    }
  }
};

void init_base_layers(DpTables& t, const UnitPreprocess& pre, const Gains& gains, int k) {
  for (int i = 0; i < t.size(); ++i) {
    t.set_h(i, 0, 0);
    if (k >= 1) {
      const auto s = static_cast<std::size_t>(i);
      t.set_f(i, 1, 1 + pre.y[s] + pre.x[s] + gains.extra(i), DpRule::kSingleton, -1);
    }
  }
}

DpTables run_scan(const IntervalLayout& layout, const UnitPreprocess& pre, const Gains& gains, int k) {
  const int n = layout.size();
  DpTables t(n, k);
  init_base_layers(t, pre, gains, k);
  const auto reach_rank = [&](int j) { return layout.b_rank(pre.reach[static_cast<std::size_t>(j)]); };

  for (int l = 2; l <= k; ++l) {
    for (int i = 0; i < n; ++i) {
      const auto s = static_cast<std::size_t>(i);
      const int ai = layout.a_rank(i);
      const int bi = layout.b_rank(i);
      const int own = pre.y[s] + gains.extra(i);
      Candidate t1, t2, t3;
      for (int j = 0; j < n; ++j) {
        const std::int32_t prev = t.f(j, l - 1);
        if (prev == kUndef) continue;
        const int bj = layout.b_rank(j);
        const int rbj = reach_rank(j);
        if (bj < ai && rbj < ai) {
          t1.offer(prev + 1 + own + pre.x[s] - gains.common(i, j), j, DpRule::kT1);
        } else if (bj < ai && rbj > ai) {
          const int reach = pre.reach[static_cast<std::size_t>(j)];
          if (reach >= i) throw ContractViolation("T2 predecessor reaches past the current interval");
          t2.offer(prev + 1 + own + (i - 1 - reach) - gains.common(i, j), j, DpRule::kT2);
        } else if (ai < bj && bj < bi) {
          t3.offer(prev + pre.prefix_z[s] - pre.prefix_z[static_cast<std::size_t>(j)] + gains.extra(i) -
                       gains.common(i, j),
                   j, DpRule::kT3);
        }
      }
      Candidate best = t1;
      best.offer(t2.value, t2.pred, t2.rule);
      best.offer(t3.value, t3.pred, t3.rule);
      if (best.value != kUndef) t.set_f(i, l, best.value, best.rule, best.pred);
    }
  }

  for (int l = 1; l <= k; ++l) {
    for (int i = 0; i < n; ++i) {
      const int ai = layout.a_rank(i);
      const int bi = layout.b_rank(i);
      std::int32_t g = kUndef;
      std::int32_t h = kUndef;
      for (int j = 0; j < n; ++j) {
        const int bj = layout.b_rank(j);
        if (ai < bj && bj < bi) g = std::max(g, t.f(j, l));
        if (bj < ai) h = std::max(h, t.f(j, l));
      }
      t.set_g(i, l, g);
      t.set_h(i, l, h);
    }
  }
  return t;
}

DpTables run_tree(const IntervalLayout& layout, const UnitPreprocess& pre, int k) {
  const int n = layout.size();
  DpTables t(n, k);
  init_base_layers(t, pre, Gains{}, k);

  // first_after_start[i]: first j with b_j > a_i, so [0, it) are the intervals ending before v_i starts.
  // clear_before[i]: number of j whose reach ends before a_i; reach is monotone in j.
  std::vector<int> b_ranks(static_cast<std::size_t>(n));
  std::vector<int> reach_ranks(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    b_ranks[static_cast<std::size_t>(j)] = layout.b_rank(j);
    reach_ranks[static_cast<std::size_t>(j)] = layout.b_rank(pre.reach[static_cast<std::size_t>(j)]);
    if (j > 0 && reach_ranks[static_cast<std::size_t>(j)] < reach_ranks[static_cast<std::size_t>(j) - 1]) {
      throw ContractViolation("reach is not monotone; layout is not proper");
    }
  }
  std::vector<int> first_after_start(static_cast<std::size_t>(n));
  std::vector<int> clear_before(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int ai = layout.a_rank(i);
    first_after_start[static_cast<std::size_t>(i)] =
        static_cast<int>(std::upper_bound(b_ranks.begin(), b_ranks.end(), ai) - b_ranks.begin());
    clear_before[static_cast<std::size_t>(i)] =
        static_cast<int>(std::lower_bound(reach_ranks.begin(), reach_ranks.end(), ai) - reach_ranks.begin());
  }

  // D1: f(j, l-1); D2: f(j, l-1) - reach(j); D3: f(j, l-1) - Z(j).
  RangeMaxTree d1, d2, d3, layer_tree;
  std::vector<std::int32_t> leaves2(static_cast<std::size_t>(n));
  std::vector<std::int32_t> leaves3(static_cast<std::size_t>(n));
  for (int l = 2; l <= k; ++l) {
    const auto prev = t.f_layer(l - 1);
    for (int j = 0; j < n; ++j) {
      const auto s = static_cast<std::size_t>(j);
      const bool defined = prev[s] != kUndef;
      leaves2[s] = defined ? prev[s] - pre.reach[s] : RangeMaxTree::kEmpty;
      leaves3[s] = defined ? prev[s] - pre.prefix_z[s] : RangeMaxTree::kEmpty;
    }
    d1.assign(prev);
    d2.assign(leaves2);
    d3.assign(leaves3);

    for (int i = 0; i < n; ++i) {
      const auto s = static_cast<std::size_t>(i);
      const int start = first_after_start[s];
      const int clear = clear_before[s];
      Candidate best;
      if (const auto hit = d1.query(0, clear); hit.found()) {
        best.offer(hit.value + 1 + pre.y[s] + pre.x[s], hit.index, DpRule::kT1);
      }
      if (const auto hit = d2.query(clear, start); hit.found()) {
        best.offer(hit.value + 1 + pre.y[s] + i - 1, hit.index, DpRule::kT2);
      }
      if (const auto hit = d3.query(start, i); hit.found()) {
        best.offer(hit.value + pre.prefix_z[s], hit.index, DpRule::kT3);
      }
      if (best.value != kUndef) t.set_f(i, l, best.value, best.rule, best.pred);
    }
  }

  for (int l = 1; l <= k; ++l) {
    layer_tree.assign(t.f_layer(l));
    for (int i = 0; i < n; ++i) {
      const int start = first_after_start[static_cast<std::size_t>(i)];
      t.set_g(i, l, layer_tree.query(start, i).value);
      t.set_h(i, l, layer_tree.query(0, start).value);
    }
  }
  return t;
}

void check_k(int k, int n) {
  if (k < 0 || k > n) throw InvalidInput("k=" + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
}

// Smallest last index attaining the best l-set, as original ids.
std::vector<NodeId> best_witness(const DpTables& t, const IntervalLayout& layout, int l) {
  std::vector<NodeId> chosen;
  if (l == 0) return chosen;
  const std::int32_t target = t.best(l);
  for (int i = 0; i < t.size(); ++i) {
    if (t.f(i, l) == target) {
      for (int idx : t.witness(i, l)) chosen.push_back(layout.original(idx));
      return chosen;
    }
  }
  throw ContractViolation("best value of the interval DP has no witness");
}

}  // namespace

DpTables run_unit_dp(const IntervalLayout& layout, const UnitPreprocess& pre, int k, IntervalEngine engine) {
  check_k(k, layout.size());
  return engine == IntervalEngine::kDirectScan ? run_scan(layout, pre, Gains{}, k) : run_tree(layout, pre, k);
}

DpTables run_general_dp(const IntervalLayout& kept, const UnitPreprocess& pre, const GeneralPreprocess& general,
                        int k) {
  check_k(k, kept.size());
  return run_scan(kept, pre, Gains{&general}, k);
}

SolveResult solve_unit(const IntervalLayout& layout, int k, IntervalEngine engine) {
  check_k(k, layout.size());
  const UnitPreprocess pre = preprocess_unit(layout);
  const DpTables tables = run_unit_dp(layout, pre, k, engine);

  SolveResult result;
  result.k = k;
  result.nbd_size = tables.best(k);
  result.chosen = NodeSet(best_witness(tables, layout, k));
  std::vector<int> per_k;
  for (int l = 0; l <= k; ++l) per_k.push_back(tables.best(l));
  result.per_k = std::move(per_k);
  return result;
}

SolveResult solve_general(const IntervalLayout& layout, int k) {
  check_k(k, layout.size());
  auto [kept, general] = reduce_general(layout);
  const int m = kept.size();
  const int k_kept = std::min(k, m);
  const UnitPreprocess pre = preprocess_unit(kept);
  const DpTables tables = run_general_dp(kept, pre, general, k_kept);

  SolveResult result;
  result.k = k;
  std::vector<NodeId> chosen = best_witness(tables, kept, k_kept);
  // k > m: every keeper is chosen and each deleted interval lies inside one, so all
  // deleted intervals have zero marginal gain; take the smallest ids.
  for (std::size_t d = 0; static_cast<int>(chosen.size()) < k && d < general.deleted.size(); ++d) {
    chosen.push_back(general.deleted[d]);
  }
  result.chosen = NodeSet(std::move(chosen));
  result.nbd_size = k > m ? layout.size() : tables.best(k);

  std::vector<int> per_k;
  for (int l = 0; l <= k; ++l) per_k.push_back(l <= m ? tables.best(l) : layout.size());
  result.per_k = std::move(per_k);
  return result;
}

SolveResult solve_intervals(const IntervalLayout& layout, int k, IntervalEngine engine) {
  return layout.is_proper() ? solve_unit(layout, k, engine) : solve_general(layout, k);
}

}  // namespace maxdom
