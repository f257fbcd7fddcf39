#include "maxdom/geometric_solver.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <vector>

#include "maxdom/errors.hpp"
#include "maxdom/interval_layout.hpp"
#include "maxdom/interval_solver.hpp"

namespace maxdom {

namespace {

constexpr std::int32_t kUndef = std::numeric_limits<std::int32_t>::min();

// Enumerated subsets of one box, each with its dominated set over all objects.
struct BoxSubsets {
  std::vector<std::uint32_t> masks;  // bits over the box's member list
  std::vector<int> sizes;
  std::vector<int> dominated_count;
  std::vector<std::uint64_t> dominated;  // masks.size() rows of `words` words
  int cap = 0;
};

struct Back {
  std::int32_t size_before = -1;  // |S_{i-3}| in the predecessor state
  std::int32_t older = -1;        // subset index of S_{i-2}
};

struct Layer {
  int dim_l2 = 1;
  int dim_prev = 1;
  int dim_cur = 1;
  std::vector<std::int32_t> value;
  std::vector<Back> back;

  [[nodiscard]] std::size_t index(int l1, int l2, int prev, int cur) const {
    return ((static_cast<std::size_t>(l1) * static_cast<std::size_t>(dim_l2) + static_cast<std::size_t>(l2)) *
                static_cast<std::size_t>(dim_prev) +
            static_cast<std::size_t>(prev)) *
               static_cast<std::size_t>(dim_cur) +
           static_cast<std::size_t>(cur);
  }
};

SolveResult solve_on_intervals(const GeometricInstance& inst, int k) {
  std::vector<Interval> raw;
  raw.reserve(inst.objects.size());
  for (const auto& o : inst.objects) {
    const double half = inst.kind == ShapeKind::kRectUnitHeight ? o.width / 2.0 : 0.5;
    raw.push_back({o.cx - half, o.cx + half});
  }
  return solve_intervals(normalize_layout(raw), k);
}

std::vector<BoxSubsets> enumerate_subsets(const GeometricInstance& inst, const StripDecomposition& dec, int k,
                                          std::size_t words) {
  const int n = inst.size();
  const int bound = dec.params.per_box_bound;
  std::vector<BoxSubsets> out(static_cast<std::size_t>(dec.box_count()));

  // Closed neighbourhood rows; by locality only the three surrounding boxes can hold neighbours.
  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(n) * words, 0);
  for (int i = 0; i < n; ++i) {
    const int bi = dec.box_of[static_cast<std::size_t>(i)];
    for (int b = std::max(0, bi - 1); b <= std::min(dec.box_count() - 1, bi + 1); ++b) {
      for (int j : dec.boxes[static_cast<std::size_t>(b)]) {
        if (i == j || intersects(inst.kind, inst.objects[static_cast<std::size_t>(i)],
                                 inst.objects[static_cast<std::size_t>(j)])) {
          nbr[static_cast<std::size_t>(i) * words + static_cast<std::size_t>(j) / 64] |= std::uint64_t{1}
                                                                                          << (j % 64);
        }
      }
    }
  }

  for (int b = 0; b < dec.box_count(); ++b) {
    const auto& members = dec.boxes[static_cast<std::size_t>(b)];
    BoxSubsets& box = out[static_cast<std::size_t>(b)];
    const int size = static_cast<int>(members.size());
    box.cap = std::min({bound, size, k});
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << size); ++mask) {
      const int pop = std::popcount(mask);
      if (pop > box.cap) continue;
      box.masks.push_back(mask);
      box.sizes.push_back(pop);
      const std::size_t row = box.dominated.size();
      box.dominated.resize(row + words, 0);
      for (int t = 0; t < size; ++t) {
        if (!(mask >> t & 1U)) continue;
        const auto src = static_cast<std::size_t>(members[static_cast<std::size_t>(t)]) * words;
        for (std::size_t w = 0; w < words; ++w) box.dominated[row + w] |= nbr[src + w];
      }
      int count = 0;
      for (std::size_t w = 0; w < words; ++w) count += std::popcount(box.dominated[row + w]);
      box.dominated_count.push_back(count);
    }
  }
  return out;
}

}  // namespace

SolveResult solve_geometric(const GeometricInstance& instance, int k, const GeometricOptions& options) {
  const int n = instance.size();
  if (k < 0 || k > n) throw InvalidInput("k=" + std::to_string(k) + " outside [0, " + std::to_string(n) + "]");
  const GeometricInstance inst = canonicalize_line(instance);

  if (options.interval_fast_path && inst.line.theta == 0.0 &&
      (inst.kind == ShapeKind::kUnitSquare || inst.kind == ShapeKind::kRectUnitHeight)) {
    return solve_on_intervals(inst, k);
  }

  SolveResult result;
  result.k = k;
  if (n == 0) {
    result.per_k = std::vector<int>{0};
    return result;
  }

  const StripDecomposition dec = build_decomposition(inst, options.decomposition, options.bounds);
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  const std::vector<BoxSubsets> boxes = enumerate_subsets(inst, dec, k, words);
  const int m = dec.box_count();

  // Boxes before the first are dummies holding only the empty subset.
  const BoxSubsets empty_box = [&] {
    BoxSubsets e;
    e.masks = {0};
    e.sizes = {0};
    e.dominated_count = {0};
    e.dominated.assign(words, 0);
    return e;
  }();
  const auto box_at = [&](int b) -> const BoxSubsets& {
    return b < 0 ? empty_box : boxes[static_cast<std::size_t>(b)];
  };

  std::int64_t transitions = 0;
  std::vector<Layer> layers;
  layers.reserve(static_cast<std::size_t>(m) + 1);

  Layer start;
  start.value.assign(static_cast<std::size_t>(k) + 1, kUndef);
  start.back.resize(start.value.size());
  start.value[0] = 0;
  layers.push_back(std::move(start));

  std::vector<std::uint64_t> covered(words);
  for (int i = 0; i < m; ++i) {
    const Layer& prev = layers.back();
    const BoxSubsets& older = box_at(i - 2);
    const BoxSubsets& last = box_at(i - 1);
    const BoxSubsets& cur = box_at(i);

    Layer next;
    next.dim_l2 = older.cap + 1;
    next.dim_prev = static_cast<int>(last.masks.size());
    next.dim_cur = static_cast<int>(cur.masks.size());
    const std::size_t cells = static_cast<std::size_t>(k + 1) * static_cast<std::size_t>(next.dim_l2) *
                              static_cast<std::size_t>(next.dim_prev) * static_cast<std::size_t>(next.dim_cur);
    transitions += static_cast<std::int64_t>(prev.value.size()) * next.dim_cur;
    if (transitions > options.max_transitions || cells > static_cast<std::size_t>(options.max_transitions)) {
      throw BudgetExceeded("box DP exceeds its transition budget of " + std::to_string(options.max_transitions) +
                           " at box " + std::to_string(i));
    }
    next.value.assign(cells, kUndef);
    next.back.resize(cells);

    for (int p1 = 0; p1 <= k; ++p1) {
      for (int p2 = 0; p2 < prev.dim_l2; ++p2) {
        for (int a = 0; a < prev.dim_prev; ++a) {
          for (int c = 0; c < prev.dim_cur; ++c) {
            const std::int32_t base = prev.value[prev.index(p1, p2, a, c)];
            if (base == kUndef) continue;
            const int l1 = p1 + p2;
            const int l2 = older.sizes[static_cast<std::size_t>(a)];
            const int fixed = l1 + l2 + last.sizes[static_cast<std::size_t>(c)];
            if (fixed > k) continue;
            const std::size_t row_a = static_cast<std::size_t>(a) * words;
            const std::size_t row_c = static_cast<std::size_t>(c) * words;
            for (std::size_t w = 0; w < words; ++w) covered[w] = older.dominated[row_a + w] | last.dominated[row_c + w];
            for (int d = 0; d < next.dim_cur; ++d) {
              if (fixed + cur.sizes[static_cast<std::size_t>(d)] > k) continue;
              const std::size_t row_d = static_cast<std::size_t>(d) * words;
              int overlap = 0;
              for (std::size_t w = 0; w < words; ++w) overlap += std::popcount(cur.dominated[row_d + w] & covered[w]);
              const std::int32_t value = base + cur.dominated_count[static_cast<std::size_t>(d)] - overlap;
              const std::size_t at = next.index(l1, l2, c, d);
              if (value > next.value[at]) {
                next.value[at] = value;
                next.back[at] = {p2, a};
              }
            }
          }
        }
      }
    }
    layers.push_back(std::move(next));
  }

  // Final states hold (l1, |S_{m-2}|, S_{m-2}, S_{m-1}); pick the best total <= k.
  const Layer& final_layer = layers.back();
  const BoxSubsets& second_last = box_at(m - 2);
  const BoxSubsets& last = box_at(m - 1);
  std::vector<std::int32_t> per_total(static_cast<std::size_t>(k) + 1, kUndef);
  std::size_t best_at = 0;
  std::int32_t best_value = kUndef;
  for (int l1 = 0; l1 <= k; ++l1) {
    for (int l2 = 0; l2 < final_layer.dim_l2; ++l2) {
      for (int a = 0; a < final_layer.dim_prev; ++a) {
        for (int c = 0; c < final_layer.dim_cur; ++c) {
          const std::size_t at = final_layer.index(l1, l2, a, c);
          const std::int32_t v = final_layer.value[at];
          if (v == kUndef) continue;
          const int total = l1 + l2 + second_last.sizes[static_cast<std::size_t>(a)] + last.sizes[static_cast<std::size_t>(c)];
          auto& slot = per_total[static_cast<std::size_t>(total)];
          slot = std::max(slot, v);
          if (v > best_value) {
            best_value = v;
            best_at = at;
          }
        }
      }
    }
  }
  if (best_value == kUndef) throw ContractViolation("box DP produced no final state");

  std::vector<int> per_k(static_cast<std::size_t>(k) + 1, 0);
  std::int32_t running = kUndef;
  for (int l = 0; l <= k; ++l) {
    running = std::max(running, per_total[static_cast<std::size_t>(l)]);
    per_k[static_cast<std::size_t>(l)] = running;
  }

  // Walk the back pointers: the state after box i names S_{i-1} and S_i.
  std::vector<char> taken(static_cast<std::size_t>(n), 0);
  std::size_t at = best_at;
  for (int i = m - 1; i >= 0; --i) {
    const Layer& layer = layers[static_cast<std::size_t>(i) + 1];
    const std::size_t cur = at % static_cast<std::size_t>(layer.dim_cur);
    std::size_t rest = at / static_cast<std::size_t>(layer.dim_cur);
    const std::size_t prev_idx = rest % static_cast<std::size_t>(layer.dim_prev);
    rest /= static_cast<std::size_t>(layer.dim_prev);
    const std::size_t l2 = rest % static_cast<std::size_t>(layer.dim_l2);
    const std::size_t l1 = rest / static_cast<std::size_t>(layer.dim_l2);

    const std::uint32_t mask = box_at(i).masks[cur];
    const auto& members = dec.boxes[static_cast<std::size_t>(i)];
    for (std::size_t t = 0; t < members.size(); ++t) {
      if (mask >> t & 1U) taken[static_cast<std::size_t>(members[t])] = 1;
    }
    if (i == 0) break;
    const Back& bp = layer.back[at];
    if (bp.size_before < 0) throw ContractViolation("dangling back pointer in box DP");
    const Layer& before = layers[static_cast<std::size_t>(i)];
    at = before.index(static_cast<int>(l1) - bp.size_before, bp.size_before, bp.older, static_cast<int>(prev_idx));
    (void)l2;
  }

  std::vector<NodeId> chosen;
  for (int v = 0; v < n; ++v) {
    if (taken[static_cast<std::size_t>(v)]) chosen.push_back(v);
  }
  // Sizes below k come from the per-box caps; unused objects only add coverage.
  for (int v = 0; v < n && static_cast<int>(chosen.size()) < k; ++v) {
    if (!taken[static_cast<std::size_t>(v)]) chosen.push_back(v);
  }
  result.chosen = NodeSet(std::move(chosen));
  result.nbd_size = best_value;
  result.per_k = std::move(per_k);
  return result;
}

}  // namespace maxdom
