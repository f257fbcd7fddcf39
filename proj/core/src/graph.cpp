#include "maxdom/graph.hpp"

#include <algorithm>
#include <string>

#include "maxdom/errors.hpp"

namespace maxdom {

NodeSet::NodeSet(std::initializer_list<NodeId> ids) : NodeSet(std::vector<NodeId>(ids)) {}

NodeSet::NodeSet(std::vector<NodeId> ids) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  if (!members_.empty() && members_.front() < 0) {
    throw InvalidInput("node set contains negative index " + std::to_string(members_.front()));
  }
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw InvalidInput("node set contains duplicate indices");
  }
}

bool NodeSet::contains(NodeId v) const { return std::binary_search(members_.begin(), members_.end(), v); }

Graph::Graph(NodeId n) {
  if (n < 0) throw InvalidInput("negative node count");
  adjacency_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(NodeId n, std::initializer_list<std::pair<NodeId, NodeId>> edges)
    : Graph(n, std::span<const std::pair<NodeId, NodeId>>(edges.begin(), edges.size())) {}

Graph::Graph(NodeId n, std::span<const std::pair<NodeId, NodeId>> edges) : Graph(n) {
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                         std::to_string(n));
    }
    if (u == v) throw InvalidInput("self-loop at node " + std::to_string(u));
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
}

bool Graph::adjacent(NodeId u, NodeId v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& list : adjacency_) twice += list.size();
  return twice / 2;
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (NodeId u = 0; u < size(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void check_members(const Graph& g, const NodeSet& s) {
  if (!s.empty() && s.members().back() >= g.size()) {
    throw InvalidInput("node " + std::to_string(s.members().back()) + " out of range for n=" +
                       std::to_string(g.size()));
  }
}

namespace {

std::vector<char> mark_closed_neighborhood(const Graph& g, const NodeSet& s) {
  check_members(g, s);
  std::vector<char> hit(static_cast<std::size_t>(g.size()), 0);
  for (NodeId v : s) {
    hit[static_cast<std::size_t>(v)] = 1;
    for (NodeId u : g.neighbors(v)) hit[static_cast<std::size_t>(u)] = 1;
  }
  return hit;
}

}  // namespace

NodeSet closed_neighborhood(const Graph& g, const NodeSet& s) {
  const auto hit = mark_closed_neighborhood(g, s);
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.size(); ++v) {
    if (hit[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return NodeSet(std::move(out));
}

int closed_neighborhood_size(const Graph& g, const NodeSet& s) {
  const auto hit = mark_closed_neighborhood(g, s);
  return static_cast<int>(std::count(hit.begin(), hit.end(), 1));
}

bool is_dominating(const Graph& g, const NodeSet& s) { return closed_neighborhood_size(g, s) == g.size(); }

NodeSet pad_with_smallest_unused(const Graph& g, const NodeSet& s, int k) {
  check_members(g, s);
  if (k > g.size()) throw InvalidInput("cannot pad to " + std::to_string(k) + " nodes in a graph of " +
                                       std::to_string(g.size()));
  std::vector<NodeId> out = s.members();
  for (NodeId v = 0; v < g.size() && static_cast<int>(out.size()) < k; ++v) {
    if (!s.contains(v)) out.push_back(v);
  }
  return NodeSet(std::move(out));
}

}  // namespace maxdom
