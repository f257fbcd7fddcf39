#include "maxdom/interval_layout.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "maxdom/errors.hpp"

namespace maxdom {

namespace {

struct Endpoint {
  double coord;
  int kind;  // 0 = start, 1 = end
  int owner;
};

bool endpoint_less(const Endpoint& p, const Endpoint& q) {
  return std::tie(p.coord, p.kind, p.owner) < std::tie(q.coord, q.kind, q.owner);
}

}  // namespace

IntervalLayout normalize_layout(std::span<const Interval> raw) {
  const int n = static_cast<int>(raw.size());
  std::vector<Endpoint> events;
  events.reserve(2 * raw.size());
  for (int i = 0; i < n; ++i) {
    const Interval& iv = raw[static_cast<std::size_t>(i)];
    if (!std::isfinite(iv.a) || !std::isfinite(iv.b)) {
      throw InvalidInput("interval " + std::to_string(i) + " has a non-finite endpoint");
    }
    if (!(iv.a < iv.b)) {
      throw InvalidInput("interval " + std::to_string(i) + " has a >= b (" + std::to_string(iv.a) + ", " +
                         std::to_string(iv.b) + ")");
    }
    events.push_back({iv.a, 0, i});
    events.push_back({iv.b, 1, i});
  }
  std::sort(events.begin(), events.end(), endpoint_less);

  std::vector<int> a_rank(raw.size());
  std::vector<int> b_rank(raw.size());
  for (int r = 0; r < static_cast<int>(events.size()); ++r) {
    const Endpoint& e = events[static_cast<std::size_t>(r)];
    (e.kind == 0 ? a_rank : b_rank)[static_cast<std::size_t>(e.owner)] = r;
  }

  std::vector<int> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int p, int q) { return b_rank[p] < b_rank[q]; });

  IntervalLayout layout;
  layout.original_count_ = n;
  for (int i : order) {
    layout.intervals_.push_back(raw[static_cast<std::size_t>(i)]);
    layout.a_rank_.push_back(a_rank[static_cast<std::size_t>(i)]);
    layout.b_rank_.push_back(b_rank[static_cast<std::size_t>(i)]);
    layout.original_.push_back(i);
  }
  if (n > 0) {
    const double len0 = raw[0].b - raw[0].a;
    layout.unit_flag_ = std::all_of(raw.begin(), raw.end(),
                                    [&](const Interval& iv) { return std::abs((iv.b - iv.a) - len0) <= 1e-9; });
  }
  return layout;
}

bool IntervalLayout::is_proper() const {
  for (int i = 1; i < size(); ++i) {
    if (a_rank(i) < a_rank(i - 1)) return false;
  }
  return true;
}

IntervalLayout IntervalLayout::subset(std::span<const int> indices) const {
  std::vector<std::pair<int, int>> ranks;  // (old rank, slot)
  ranks.reserve(2 * indices.size());
  for (std::size_t s = 0; s < indices.size(); ++s) {
    ranks.emplace_back(a_rank(indices[s]), static_cast<int>(2 * s));
    ranks.emplace_back(b_rank(indices[s]), static_cast<int>(2 * s + 1));
  }
  std::sort(ranks.begin(), ranks.end());
  std::vector<int> fresh(ranks.size());
  for (std::size_t r = 0; r < ranks.size(); ++r) fresh[static_cast<std::size_t>(ranks[r].second)] = static_cast<int>(r);

  IntervalLayout out;
  out.original_count_ = original_count_;
  for (std::size_t s = 0; s < indices.size(); ++s) {
    if (s > 0 && indices[s] <= indices[s - 1]) throw InvalidInput("subset indices must be increasing");
    out.intervals_.push_back(interval(indices[s]));
    out.a_rank_.push_back(fresh[2 * s]);
    out.b_rank_.push_back(fresh[2 * s + 1]);
    out.original_.push_back(original(indices[s]));
  }
  if (!out.intervals_.empty()) {
    const double len0 = out.intervals_[0].b - out.intervals_[0].a;
    out.unit_flag_ = std::all_of(out.intervals_.begin(), out.intervals_.end(),
                                 [&](const Interval& iv) { return std::abs((iv.b - iv.a) - len0) <= 1e-9; });
  }
  return out;
}

Graph IntervalLayout::intersection_graph() const {
  std::vector<std::pair<int, bool>> events;  // (layout index, is_start) by rank
  events.resize(2 * intervals_.size());
  for (int i = 0; i < size(); ++i) {
    events[static_cast<std::size_t>(a_rank(i))] = {i, true};
    events[static_cast<std::size_t>(b_rank(i))] = {i, false};
  }
  std::set<int> active;
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const auto& [i, is_start] : events) {
    if (is_start) {
      for (int j : active) edges.emplace_back(original(i), original(j));
      active.insert(i);
    } else {
      active.erase(i);
    }
  }
  return Graph(original_count_, edges);
}

Graph interval_graph(std::span<const Interval> raw) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (std::size_t j = i + 1; j < raw.size(); ++j) {
      if (closed_overlap(raw[i], raw[j])) edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
    }
  }
  return Graph(static_cast<NodeId>(raw.size()), edges);
}

UnitPreprocess preprocess_unit(const IntervalLayout& layout) {
  if (!layout.is_proper()) {
    throw InvalidInput("layout contains an interval strictly inside another; use the general interval solver");
  }
  const int n = layout.size();
  UnitPreprocess pre;
  pre.x.assign(static_cast<std::size_t>(n), 0);
  pre.y.assign(static_cast<std::size_t>(n), 0);
  pre.z.assign(static_cast<std::size_t>(n), 0);
  pre.prefix_z.assign(static_cast<std::size_t>(n), 0);
  pre.r_a.assign(static_cast<std::size_t>(n), 0.0);
  pre.r_b.assign(static_cast<std::size_t>(n), 0.0);
  pre.reach.assign(static_cast<std::size_t>(n), 0);

  std::vector<std::pair<int, bool>> events(2 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    events[static_cast<std::size_t>(layout.a_rank(i))] = {i, true};
    events[static_cast<std::size_t>(layout.b_rank(i))] = {i, false};
  }

  // Left to right. The queue holds left endpoints whose right endpoint is still ahead;
  // in a proper layout the interval ending now owns the head of the queue, so only the
  // count, the newest entry and its owner are needed.
  int queue_count = 0;
  int queue_newest = -1;
  int starts_since_last_end = 0;
  for (const auto& [i, is_start] : events) {
    if (is_start) {
      ++queue_count;
      queue_newest = i;
      ++starts_since_last_end;
      continue;
    }
    --queue_count;
    const auto s = static_cast<std::size_t>(i);
    pre.y[s] = queue_count;
    if (queue_count == 0) {
      pre.r_a[s] = layout.interval(i).a;
      pre.r_b[s] = layout.interval(i).b;
      pre.reach[s] = i;
    } else {
      pre.r_a[s] = layout.interval(queue_newest).a;
      pre.r_b[s] = layout.interval(queue_newest).b;
      pre.reach[s] = queue_newest;
    }
    // a_i precedes b_i; it falls in (b_{i-1}, b_i) exactly when no end was seen after it.
    const bool own_start_in_window = (i == 0) || layout.a_rank(i) > layout.b_rank(i - 1);
    pre.z[s] = starts_since_last_end - (own_start_in_window ? 1 : 0);
    starts_since_last_end = 0;
  }

  // Right to left: x(i) = ends seen between b_i and a_i.
  int ends_seen = 0;
  std::vector<int> ends_at_b(static_cast<std::size_t>(n), 0);
  for (auto it = events.rbegin(); it != events.rend(); ++it) {
    const auto [i, is_start] = *it;
    const auto s = static_cast<std::size_t>(i);
    if (!is_start) {
      ends_at_b[s] = ends_seen;
      ++ends_seen;
    } else {
      pre.x[s] = ends_seen - ends_at_b[s] - 1;
    }
  }

  int running = 0;
  for (int i = 0; i < n; ++i) {
    running += pre.z[static_cast<std::size_t>(i)];
    pre.prefix_z[static_cast<std::size_t>(i)] = running;
  }
  return pre;
}

std::pair<IntervalLayout, GeneralPreprocess> reduce_general(const IntervalLayout& layout) {
  const int n = layout.size();
  std::vector<std::pair<int, bool>> events(2 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    events[static_cast<std::size_t>(layout.a_rank(i))] = {i, true};
    events[static_cast<std::size_t>(layout.b_rank(i))] = {i, false};
  }

  // Open left endpoints (by rank). When b of [a, b] arrives, any open left endpoint
  // before a belongs to an interval that started earlier and ends later.
  std::set<int> open;
  std::vector<char> is_deleted(static_cast<std::size_t>(n), 0);
  for (const auto& [i, is_start] : events) {
    if (is_start) {
      open.insert(layout.a_rank(i));
      continue;
    }
    const auto it = open.find(layout.a_rank(i));
    if (it != open.begin()) is_deleted[static_cast<std::size_t>(i)] = 1;
    open.erase(it);
  }

  std::vector<int> kept_idx;
  std::vector<int> deleted_idx;
  for (int i = 0; i < n; ++i) (is_deleted[static_cast<std::size_t>(i)] ? deleted_idx : kept_idx).push_back(i);

  IntervalLayout kept_layout = layout.subset(kept_idx);
  GeneralPreprocess pre;
  const int m = static_cast<int>(kept_idx.size());
  for (int i : kept_idx) pre.kept.push_back(layout.original(i));
  for (int i : deleted_idx) pre.deleted.push_back(layout.original(i));
  std::sort(pre.deleted.begin(), pre.deleted.end());
  pre.x_d.assign(static_cast<std::size_t>(m), 0);
  pre.y_d.assign(static_cast<std::size_t>(m), 0);
  pre.w_d.assign(static_cast<std::size_t>(m), 0);
  pre.c_d.assign(static_cast<std::size_t>(m) * static_cast<std::size_t>(m), 0);

  // Kept intervals are proper, so both their a and b ranks increase with the index and
  // the keepers meeting a deleted interval form one contiguous run (bipartite graph B).
  std::vector<int> kept_a(static_cast<std::size_t>(m));
  std::vector<int> kept_b(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t) {
    kept_a[static_cast<std::size_t>(t)] = layout.a_rank(kept_idx[static_cast<std::size_t>(t)]);
    kept_b[static_cast<std::size_t>(t)] = layout.b_rank(kept_idx[static_cast<std::size_t>(t)]);
  }
  for (int d : deleted_idx) {
    const int da = layout.a_rank(d);
    const int db = layout.b_rank(d);
    const int lo = static_cast<int>(std::upper_bound(kept_b.begin(), kept_b.end(), da) - kept_b.begin());
    const int hi = static_cast<int>(std::lower_bound(kept_a.begin(), kept_a.end(), db) - kept_a.begin());
    for (int t = lo; t < hi; ++t) {
      const auto s = static_cast<std::size_t>(t);
      const bool left_in = kept_a[s] < da && da < kept_b[s];
      const bool right_in = kept_a[s] < db && db < kept_b[s];
      if (left_in && right_in) {
        ++pre.w_d[s];
      } else if (right_in) {
        ++pre.x_d[s];
      } else {
        ++pre.y_d[s];
      }
      for (int u = lo; u < hi; ++u) {
        if (u != t) ++pre.c_d[s * static_cast<std::size_t>(m) + static_cast<std::size_t>(u)];
      }
    }
  }
  return {std::move(kept_layout), std::move(pre)};
}

}  // namespace maxdom
