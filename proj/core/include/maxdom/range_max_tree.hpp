#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace maxdom {

/// Static leaf-search tree over a fixed key order: every leaf holds a value and every
/// internal node the maximum of its subtree. Range queries return the leftmost maximiser.
class RangeMaxTree {
 public:
  static constexpr std::int32_t kEmpty = std::numeric_limits<std::int32_t>::min();

  struct Hit {
    std::int32_t value = kEmpty;
    int index = -1;
    [[nodiscard]] bool found() const { return index >= 0; }
  };

  RangeMaxTree() = default;
  explicit RangeMaxTree(std::span<const std::int32_t> leaves) { assign(leaves); }

  /// Rebuilds in O(n), reusing storage.
  void assign(std::span<const std::int32_t> leaves) {
    size_ = static_cast<int>(leaves.size());
    base_ = 1;
    while (base_ < size_) base_ <<= 1;
    nodes_.assign(2 * static_cast<std::size_t>(base_), Hit{});
    for (int i = 0; i < size_; ++i) {
      if (leaves[static_cast<std::size_t>(i)] != kEmpty) nodes_[static_cast<std::size_t>(base_ + i)] = {leaves[static_cast<std::size_t>(i)], i};
    }
    for (int v = base_ - 1; v >= 1; --v) nodes_[static_cast<std::size_t>(v)] = better(nodes_[2 * static_cast<std::size_t>(v)], nodes_[2 * static_cast<std::size_t>(v) + 1]);
  }

  [[nodiscard]] int size() const { return size_; }

  /// Maximum over leaves [lo, hi); `found()` is false for an empty or all-empty range.
  [[nodiscard]] Hit query(int lo, int hi) const {
    Hit left;
    Hit right;
    if (lo < 0) lo = 0;
    if (hi > size_) hi = size_;
    for (int l = lo + base_, r = hi + base_; l < r; l >>= 1, r >>= 1) {
      if (l & 1) left = better(left, nodes_[static_cast<std::size_t>(l++)]);
      if (r & 1) right = better(nodes_[static_cast<std::size_t>(--r)], right);
    }
    return better(left, right);
  }

 private:
  // Prefers the larger value, then the smaller index; `p` must lie left of `q`.
  static Hit better(const Hit& p, const Hit& q) {
    if (!q.found()) return p;
    if (!p.found()) return q;
    return q.value > p.value ? q : p;
  }

  int size_ = 0;
  int base_ = 1;
  std::vector<Hit> nodes_;
};

}  // namespace maxdom
