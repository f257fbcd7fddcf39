#pragma once

#include <span>
#include <utility>
#include <vector>

#include "maxdom/graph.hpp"

namespace maxdom {

/// Closed interval [a, b].
struct Interval {
  double a = 0.0;
  double b = 0.0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Closed-overlap predicate on raw coordinates (touching intervals intersect).
inline bool closed_overlap(const Interval& p, const Interval& q) { return p.a <= q.b && q.a <= p.b; }

/// Intervals indexed by increasing right endpoint, with every endpoint replaced by its
/// rank in a strict total order. At equal coordinates a start precedes an end, so
/// touching intervals still overlap in rank space; remaining ties go by original index.
class IntervalLayout {
 public:
  IntervalLayout() = default;

  [[nodiscard]] int size() const { return static_cast<int>(intervals_.size()); }
  [[nodiscard]] const Interval& interval(int i) const { return intervals_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] int a_rank(int i) const { return a_rank_[static_cast<std::size_t>(i)]; }
  [[nodiscard]] int b_rank(int i) const { return b_rank_[static_cast<std::size_t>(i)]; }
  /// Index of interval i in the caller's original list.
  [[nodiscard]] NodeId original(int i) const { return original_[static_cast<std::size_t>(i)]; }
  /// Size of the original list this layout (or its parent) was built from.
  [[nodiscard]] int original_count() const { return original_count_; }
  /// All lengths equal (within 1e-9).
  [[nodiscard]] bool unit_flag() const { return unit_flag_; }
  /// No interval strictly contains another in rank space.
  [[nodiscard]] bool is_proper() const;
  [[nodiscard]] bool intersects(int i, int j) const {
    return a_rank(i) < b_rank(j) && a_rank(j) < b_rank(i);
  }

  /// Sub-layout over the given (increasing) indices; ranks keep their relative order.
  [[nodiscard]] IntervalLayout subset(std::span<const int> indices) const;

  /// Intersection graph in original indexing (node v = original interval v).
  [[nodiscard]] Graph intersection_graph() const;

  friend IntervalLayout normalize_layout(std::span<const Interval> raw);

 private:
  std::vector<Interval> intervals_;
  std::vector<int> a_rank_;
  std::vector<int> b_rank_;
  std::vector<NodeId> original_;
  int original_count_ = 0;
  bool unit_flag_ = true;
};

/// Throws InvalidInput if some interval has a >= b or a non-finite endpoint.
IntervalLayout normalize_layout(std::span<const Interval> raw);

/// Direct O(n^2) closed-overlap graph on raw coordinates, original indexing.
Graph interval_graph(std::span<const Interval> raw);

/// Tables of the unit (proper) interval recurrences, 0-based by layout index.
struct UnitPreprocess {
  std::vector<int> x;  // b_j strictly inside (a_i, b_i)
  std::vector<int> y;  // a_j strictly inside (a_i, b_i)
  std::vector<int> z;  // a_j (j != i) in (b_{i-1}, b_i); z[0] counts from -inf
  std::vector<int> prefix_z;  // prefix_z[i] = z[0] + ... + z[i]
  std::vector<double> r_a;    // max{a_j : a_i <= a_j < b_i}
  std::vector<double> r_b;    // right endpoint of the interval attaining r_a
  /// Layout index of the interval attaining r_a (the last interval v_i reaches).
  std::vector<int> reach;
};

/// One left-to-right queue sweep (y, z, r_a, r_b) and one right-to-left sweep (x).
/// Throws InvalidInput if the layout is not proper.
UnitPreprocess preprocess_unit(const IntervalLayout& layout);

/// Deleted-interval bookkeeping for the general (containment) case. Indices into
/// the kept layout unless stated otherwise.
struct GeneralPreprocess {
  std::vector<NodeId> kept;     // original indices, in kept-layout order
  std::vector<NodeId> deleted;  // original indices, increasing
  std::vector<int> x_d;         // deleted with only the right end in [a_i, b_i]
  std::vector<int> y_d;         // deleted with only the left end in [a_i, b_i]
  std::vector<int> w_d;         // deleted with both ends in [a_i, b_i]
  /// Row-major m x m; c_d(i, j) = deleted intervals meeting both kept i and kept j (0 on the diagonal).
  std::vector<int> c_d;

  [[nodiscard]] int kept_count() const { return static_cast<int>(kept.size()); }
  [[nodiscard]] int common(int i, int j) const {
    return c_d[static_cast<std::size_t>(i) * kept.size() + static_cast<std::size_t>(j)];
  }
  [[nodiscard]] int extra(int i) const {
    return x_d[static_cast<std::size_t>(i)] + y_d[static_cast<std::size_t>(i)] + w_d[static_cast<std::size_t>(i)];
  }
};

/// Deletes every interval strictly contained in another (one sweep with an ordered set
/// of open left endpoints) and counts deleted-interval incidences per kept interval.
std::pair<IntervalLayout, GeneralPreprocess> reduce_general(const IntervalLayout& layout);

}  // namespace maxdom
