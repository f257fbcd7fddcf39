#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace maxdom {

using NodeId = std::int32_t;

/// Sorted, duplicate-free set of node indices.
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(std::initializer_list<NodeId> ids);
  /// Sorts `ids`; throws InvalidInput on negative or duplicate entries.
  explicit NodeSet(std::vector<NodeId> ids);

  [[nodiscard]] const std::vector<NodeId>& members() const { return members_; }
  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] bool contains(NodeId v) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

 private:
  std::vector<NodeId> members_;
};

/// Simple undirected graph with sorted adjacency lists. Immutable once built.
class Graph {
 public:
  Graph() = default;
  /// `n` isolated nodes.
  explicit Graph(NodeId n);
  /// Throws InvalidInput on self-loops or out-of-range endpoints.
  /// Parallel edges are collapsed.
  Graph(NodeId n, std::span<const std::pair<NodeId, NodeId>> edges);
  Graph(NodeId n, std::initializer_list<std::pair<NodeId, NodeId>> edges);

  [[nodiscard]] NodeId size() const { return static_cast<NodeId>(adjacency_.size()); }
  [[nodiscard]] std::span<const NodeId> neighbors(NodeId v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] bool adjacent(NodeId u, NodeId v) const;
  [[nodiscard]] std::size_t edge_count() const;
  /// Each edge once, as (u, v) with u < v, in lexicographic order.
  [[nodiscard]] std::vector<std::pair<NodeId, NodeId>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<NodeId>> adjacency_;
};

struct SolveResult {
  int k = 0;
  NodeSet chosen;
  int nbd_size = 0;
  /// Best dominated-neighbourhood size for every l = 0..k, when the solver has it.
  std::optional<std::vector<int>> per_k;
};

/// N[S] = S together with every neighbour of a member of S.
NodeSet closed_neighborhood(const Graph& g, const NodeSet& s);

/// |N[S]| without materialising the set.
int closed_neighborhood_size(const Graph& g, const NodeSet& s);

bool is_dominating(const Graph& g, const NodeSet& s);

/// Throws InvalidInput if some member of `s` is not a node of `g`.
void check_members(const Graph& g, const NodeSet& s);

/// Pads `s` with the smallest unused node indices until it has `k` members.
NodeSet pad_with_smallest_unused(const Graph& g, const NodeSet& s, int k);

}  // namespace maxdom
