#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxdom/errors.hpp"
#include "maxdom/geometry.hpp"
#include "maxdom/graph.hpp"
#include "maxdom/interval_layout.hpp"
#include "maxdom/reductions.hpp"

namespace maxdom {

inline constexpr int kSchemaVersion = 1;

enum class InstanceKind {
  kGraph,
  kIntervals,
  kUnitIntervals,
  kUnitSquares,
  kUnitDisks,
  kRectsUnitHeight,
  kDisks,
  kCnf2,
};

std::string_view to_string(InstanceKind kind);
/// Throws InvalidInput on an unknown name.
InstanceKind instance_kind_from_string(std::string_view name);
bool is_geometric(InstanceKind kind);
bool is_interval(InstanceKind kind);
ShapeKind shape_of(InstanceKind kind);

/// One parsed instance file. Only the payload matching `kind` is populated.
struct Instance {
  InstanceKind kind = InstanceKind::kGraph;
  Graph graph;
  std::vector<Interval> intervals;
  GeometricInstance geometric;  // line.theta in radians, derived from theta_deg
  double theta_deg = 0.0;
  std::optional<Cnf2> cnf;

  friend bool operator==(const Instance& p, const Instance& q);
};

/// Parse failure carrying every schema violation as "path: message".
class SchemaError : public InvalidInput {
 public:
  explicit SchemaError(std::vector<std::string> violations);
  [[nodiscard]] const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

Instance parse_instance(std::string_view text);
std::string emit_instance(const Instance& instance);

/// FNV-1a 64 over the canonical emitted text, as 16 hex digits.
std::string instance_digest(const Instance& instance);

/// Graph the solvers act on: the graph itself, the interval or geometric intersection
/// graph, or the 2-CNF gadget graph.
Graph instance_graph(const Instance& instance);

/// DIMACS "p cnf V C" text where every clause has exactly two literals.
Cnf2 parse_dimacs_cnf2(std::string_view text);

/// Graphviz text of an undirected graph.
std::string to_dot(const Graph& g, std::string_view name = "G");

struct ResultFile {
  std::string digest;
  std::optional<int> k;
  std::optional<double> alpha;
  std::optional<int> nbd_size;  // k queries
  std::optional<int> gamma;     // alpha queries
  std::vector<NodeId> chosen;
  std::optional<std::vector<int>> per_k;
  std::string solver;
  double wall_ms = 0.0;
};

std::string emit_result(const ResultFile& result);
ResultFile parse_result(std::string_view text);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Re-checks the witness in `result` against `instance`: digest, id range, set size,
/// and the claimed coverage (or the alpha threshold).
VerifyReport verify_result(const Instance& instance, const ResultFile& result);

}  // namespace maxdom
