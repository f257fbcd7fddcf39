#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "maxdom/graph.hpp"
#include "maxdom/interval_layout.hpp"

namespace maxdom {

enum class IntervalEngine {
  kDirectScan,    // reference: every recurrence term by a linear scan, O(n^2 k)
  kRangeMaxTree,  // leaf-search max trees over static key ranges, O(n k log n)
};

/// Which recurrence produced f(i, l).
enum class DpRule : std::uint8_t { kNone, kSingleton, kT1, kT2, kT3 };

/// f, g, h over (layout index i, size l), stored layer-major.
///   f(i, l): best |N[S]|, S ⊆ {v_0..v_i}, |S| = l, v_i ∈ S
///   g(i, l): same with v_i ∉ S but dominated by S
///   h(i, l): same with v_i ∉ S and v_i undominated
class DpTables {
 public:
  static constexpr std::int32_t kUndefined = std::numeric_limits<std::int32_t>::min();

  DpTables() = default;
  DpTables(int n, int k);

  [[nodiscard]] int size() const { return n_; }
  [[nodiscard]] int max_l() const { return k_; }

  [[nodiscard]] std::int32_t f(int i, int l) const { return f_[at(i, l)]; }
  [[nodiscard]] std::int32_t g(int i, int l) const { return g_[at(i, l)]; }
  [[nodiscard]] std::int32_t h(int i, int l) const { return h_[at(i, l)]; }
  [[nodiscard]] int predecessor(int i, int l) const { return pred_[at(i, l)]; }
  [[nodiscard]] DpRule rule(int i, int l) const { return rule_[at(i, l)]; }

  /// Layer l of f as a contiguous span over i.
  [[nodiscard]] std::span<const std::int32_t> f_layer(int l) const {
    return {f_.data() + static_cast<std::size_t>(l) * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
  }

  /// max{f, g, h} at the last interval, i.e. the best l-set overall (0 when n = 0, l = 0).
  [[nodiscard]] std::int32_t best(int l) const;

  /// Layout indices of the l-set behind f(i, l), recovered through the back pointers.
  [[nodiscard]] std::vector<int> witness(int i, int l) const;

  void set_f(int i, int l, std::int32_t v, DpRule rule, int pred) {
    f_[at(i, l)] = v;
    rule_[at(i, l)] = rule;
    pred_[at(i, l)] = pred;
  }
  void set_g(int i, int l, std::int32_t v) { g_[at(i, l)] = v; }
  void set_h(int i, int l, std::int32_t v) { h_[at(i, l)] = v; }

 private:
  [[nodiscard]] std::size_t at(int i, int l) const {
    return static_cast<std::size_t>(l) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i);
  }

  int n_ = 0;
  int k_ = 0;
  std::vector<std::int32_t> f_, g_, h_;
  std::vector<std::int32_t> pred_;
  std::vector<DpRule> rule_;
};

/// Runs the proper-interval recurrences for l = 0..k.
DpTables run_unit_dp(const IntervalLayout& layout, const UnitPreprocess& pre, int k, IntervalEngine engine);

/// Same recurrences over the kept intervals, with deleted-interval gains
/// x_d + y_d + w_d - c_d(i, j) added to every f step. Direct scan only.
DpTables run_general_dp(const IntervalLayout& kept, const UnitPreprocess& pre, const GeneralPreprocess& general,
                        int k);

/// Maximum dominating k-set of a proper interval layout. Chosen ids are original indices.
SolveResult solve_unit(const IntervalLayout& layout, int k, IntervalEngine engine = IntervalEngine::kRangeMaxTree);

/// Maximum dominating k-set of an arbitrary interval layout (containment allowed).
SolveResult solve_general(const IntervalLayout& layout, int k);

/// solve_unit when the layout is proper, otherwise solve_general.
SolveResult solve_intervals(const IntervalLayout& layout, int k, IntervalEngine engine = IntervalEngine::kRangeMaxTree);

}  // namespace maxdom
