#include "maxdom/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "maxdom/oracle.hpp"

namespace maxdom {

using nlohmann::json;

namespace {

constexpr std::string_view kKindNames[] = {"graph",      "intervals",         "unit_intervals", "unit_squares",
                                           "unit_disks", "rects_unit_height", "disks",          "cnf2"};

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += "\n  " + p;
  return out;
}

double degrees_to_radians(double deg) { return deg * std::numbers::pi / 180.0; }

// Collects violations instead of stopping at the first one.
class Reader {
 public:
  std::vector<std::string> errors;

  void fail(const std::string& path, const std::string& what) { errors.push_back(path + ": " + what); }

  const json* member(const json& obj, const char* key, const std::string& path, bool required = true) {
    if (!obj.is_object()) {
      fail(path, "expected an object");
      return nullptr;
    }
    const auto it = obj.find(key);
    if (it == obj.end()) {
      if (required) fail(path + "/" + key, "missing");
      return nullptr;
    }
    return &*it;
  }

  std::optional<double> number(const json& value, const std::string& path) {
    if (!value.is_number()) {
      fail(path, "expected a number");
      return std::nullopt;
    }
    const double v = value.get<double>();
    if (!std::isfinite(v)) {
      fail(path, "not finite");
      return std::nullopt;
    }
    return v;
  }

  std::optional<double> number_at(const json& obj, const char* key, const std::string& path, bool required = true) {
    const json* v = member(obj, key, path, required);
    return v ? number(*v, path + "/" + key) : std::nullopt;
  }

  std::optional<std::int64_t> integer(const json& value, const std::string& path) {
    if (!value.is_number_integer()) {
      fail(path, "expected an integer");
      return std::nullopt;
    }
    return value.get<std::int64_t>();
  }

  std::optional<std::int64_t> integer_at(const json& obj, const char* key, const std::string& path,
                                         bool required = true) {
    const json* v = member(obj, key, path, required);
    return v ? integer(*v, path + "/" + key) : std::nullopt;
  }

  const json* array_at(const json& obj, const char* key, const std::string& path) {
    const json* v = member(obj, key, path);
    if (v && !v->is_array()) {
      fail(path + "/" + key, "expected an array");
      return nullptr;
    }
    return v;
  }
};

void parse_graph(Reader& r, const json& doc, Instance& out) {
  const auto n = r.integer_at(doc, "n", "");
  const json* edges = r.array_at(doc, "edges", "");
  if (!n || !edges) return;
  if (*n < 0 || *n > (std::int64_t{1} << 30)) {
    r.fail("/n", "out of range");
    return;
  }
  std::vector<std::pair<NodeId, NodeId>> list;
  for (std::size_t e = 0; e < edges->size(); ++e) {
    const std::string path = "/edges/" + std::to_string(e);
    const json& pair = (*edges)[e];
    if (!pair.is_array() || pair.size() != 2) {
      r.fail(path, "expected [u, v]");
      continue;
    }
    const auto u = r.integer(pair[0], path + "/0");
    const auto v = r.integer(pair[1], path + "/1");
    if (!u || !v) continue;
    if (*u < 0 || *u >= *n || *v < 0 || *v >= *n) {
      r.fail(path, "endpoint outside [0, n)");
    } else if (*u == *v) {
      r.fail(path, "self-loop");
    } else {
      list.emplace_back(static_cast<NodeId>(*u), static_cast<NodeId>(*v));
    }
  }
  if (r.errors.empty()) out.graph = Graph(static_cast<NodeId>(*n), list);
}

void parse_intervals(Reader& r, const json& doc, Instance& out) {
  const json* list = r.array_at(doc, "intervals", "");
  if (!list) return;
  for (std::size_t i = 0; i < list->size(); ++i) {
    const std::string path = "/intervals/" + std::to_string(i);
    const json& pair = (*list)[i];
    if (!pair.is_array() || pair.size() != 2) {
      r.fail(path, "expected [a, b]");
      continue;
    }
    const auto a = r.number(pair[0], path + "/0");
    const auto b = r.number(pair[1], path + "/1");
    if (!a || !b) continue;
    if (!(*a < *b)) r.fail(path, "needs a < b");
    out.intervals.push_back({*a, *b});
  }
  if (out.kind == InstanceKind::kUnitIntervals && !out.intervals.empty()) {
    const double len = out.intervals.front().b - out.intervals.front().a;
    for (std::size_t i = 0; i < out.intervals.size(); ++i) {
      if (std::abs(out.intervals[i].b - out.intervals[i].a - len) > 1e-9) {
        r.fail("/intervals/" + std::to_string(i), "length differs from the first interval");
      }
    }
  }
}

void parse_geometric(Reader& r, const json& doc, Instance& out) {
  GeometricInstance& g = out.geometric;
  g.kind = shape_of(out.kind);
  if (const json* line = r.member(doc, "line", "")) {
    const auto theta = r.number_at(*line, "theta_deg", "/line");
    const auto intercept = r.number_at(*line, "intercept", "/line");
    if (theta && intercept) {
      out.theta_deg = *theta;
      g.line = StabLine{degrees_to_radians(*theta), *intercept, false};
    }
  }
  if (out.kind == InstanceKind::kDisks) {
    g.max_diameter = r.number_at(doc, "D", "", false);
    g.min_diameter = r.number_at(doc, "delta", "", false);
    if (g.min_diameter && !(*g.min_diameter > 0.0)) r.fail("/delta", "must be positive");
    if (g.min_diameter && g.max_diameter && *g.min_diameter > *g.max_diameter) r.fail("/D", "must be >= delta");
  }
  const json* objects = r.array_at(doc, "objects", "");
  if (!objects) return;
  for (std::size_t i = 0; i < objects->size(); ++i) {
    const std::string path = "/objects/" + std::to_string(i);
    const json& o = (*objects)[i];
    GeoObject obj;
    const auto cx = r.number_at(o, "cx", path);
    const auto cy = r.number_at(o, "cy", path);
    if (cx) obj.cx = *cx;
    if (cy) obj.cy = *cy;
    if (out.kind == InstanceKind::kRectsUnitHeight) {
      if (const auto w = r.number_at(o, "width", path)) {
        obj.width = *w;
        if (*w < 1.0 - kGeomEps) r.fail(path + "/width", "must be >= 1");
      }
    } else if (out.kind == InstanceKind::kDisks) {
      if (const auto d = r.number_at(o, "diameter", path)) {
        obj.diameter = *d;
        if (!(*d > 0.0)) r.fail(path + "/diameter", "must be positive");
      }
    }
    g.objects.push_back(obj);
  }
  if (!r.errors.empty()) return;
  for (std::size_t i = 0; i < g.objects.size(); ++i) {
    const GeoObject& o = g.objects[i];
    if (!is_stabbed(g.kind, o, g.line)) r.fail("/objects/" + std::to_string(i), "not intersected by the line");
    if (g.kind == ShapeKind::kDisk &&
        ((g.min_diameter && o.diameter < *g.min_diameter - kGeomEps) ||
         (g.max_diameter && o.diameter > *g.max_diameter + kGeomEps))) {
      r.fail("/objects/" + std::to_string(i) + "/diameter", "outside [delta, D]");
    }
  }
}

void parse_cnf(Reader& r, const json& doc, Instance& out) {
  const auto vars = r.integer_at(doc, "num_vars", "");
  const json* clauses = r.array_at(doc, "clauses", "");
  if (!vars || !clauses) return;
  if (*vars < 1 || *vars > 1'000'000) {
    r.fail("/num_vars", "must lie in [1, 1000000]");
    return;
  }
  std::vector<Clause> list;
  for (std::size_t j = 0; j < clauses->size(); ++j) {
    const std::string path = "/clauses/" + std::to_string(j);
    const json& c = (*clauses)[j];
    if (!c.is_array() || c.size() != 2) {
      r.fail(path, "expected two literals");
      continue;
    }
    Literal lits[2];
    bool ok = true;
    for (std::size_t t = 0; t < 2; ++t) {
      const auto lit = r.integer(c[t], path + "/" + std::to_string(t));
      if (!lit || *lit == 0 || std::abs(*lit) > *vars) {
        if (lit) r.fail(path + "/" + std::to_string(t), "literal must be nonzero with |lit| <= num_vars");
        ok = false;
        continue;
      }
      lits[t] = {static_cast<int>(std::abs(*lit)) - 1, *lit > 0};
    }
    if (ok) list.push_back({lits[0], lits[1]});
  }
  if (clauses->empty()) r.fail("/clauses", "must not be empty");
  if (r.errors.empty()) out.cnf.emplace(static_cast<int>(*vars), std::move(list));
}

json result_to_json(const ResultFile& r) {
  json j;
  j["instance_digest"] = r.digest;
  if (r.k) j["k"] = *r.k;
  if (r.alpha) j["alpha"] = *r.alpha;
  if (r.nbd_size) j["nbd_size"] = *r.nbd_size;
  if (r.gamma) j["gamma"] = *r.gamma;
  j["chosen"] = r.chosen;
  if (r.per_k) j["per_k"] = *r.per_k;
  j["solver"] = r.solver;
  j["wall_ms"] = r.wall_ms;
  return j;
}

}  // namespace

std::string_view to_string(InstanceKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

InstanceKind instance_kind_from_string(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kKindNames); ++i) {
    if (kKindNames[i] == name) return static_cast<InstanceKind>(i);
  }
  throw InvalidInput("unknown instance kind '" + std::string(name) + "'");
}

bool is_geometric(InstanceKind kind) {
  return kind == InstanceKind::kUnitSquares || kind == InstanceKind::kUnitDisks ||
         kind == InstanceKind::kRectsUnitHeight || kind == InstanceKind::kDisks;
}

bool is_interval(InstanceKind kind) { return kind == InstanceKind::kIntervals || kind == InstanceKind::kUnitIntervals; }

ShapeKind shape_of(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kUnitSquares: return ShapeKind::kUnitSquare;
    case InstanceKind::kUnitDisks: return ShapeKind::kUnitDisk;
    case InstanceKind::kRectsUnitHeight: return ShapeKind::kRectUnitHeight;
    case InstanceKind::kDisks: return ShapeKind::kDisk;
    default: throw InvalidInput(std::string(to_string(kind)) + " is not a geometric kind");
  }
}

bool operator==(const Instance& p, const Instance& q) {
  if (p.kind != q.kind) return false;
  switch (p.kind) {
    case InstanceKind::kGraph: return p.graph == q.graph;
    case InstanceKind::kIntervals:
    case InstanceKind::kUnitIntervals: return p.intervals == q.intervals;
    case InstanceKind::kCnf2: return p.cnf == q.cnf;
    default: {
      const GeometricInstance& a = p.geometric;
      const GeometricInstance& b = q.geometric;
      return p.theta_deg == q.theta_deg && a.kind == b.kind && a.objects == b.objects &&
             a.line.theta == b.line.theta && a.line.intercept == b.line.intercept &&
             a.max_diameter == b.max_diameter && a.min_diameter == b.min_diameter;
    }
  }
}

SchemaError::SchemaError(std::vector<std::string> violations)
    : InvalidInput("instance failed validation:" + join(violations)), violations_(std::move(violations)) {}

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SchemaError({std::string("$: malformed JSON: ") + e.what()});
  }
  Reader r;
  if (!doc.is_object()) throw SchemaError({"$: expected a JSON object"});
  if (const auto version = r.integer_at(doc, "schema_version", "", false); version && *version != kSchemaVersion) {
    r.fail("/schema_version", "unsupported version " + std::to_string(*version));
  }
  Instance out;
  const json* kind = r.member(doc, "kind", "");
  if (!kind) throw SchemaError(r.errors);
  if (!kind->is_string()) throw SchemaError({"/kind: expected a string"});
  try {
    out.kind = instance_kind_from_string(kind->get<std::string>());
  } catch (const InvalidInput& e) {
    throw SchemaError({std::string("/kind: ") + e.what()});
  }

  try {
    if (out.kind == InstanceKind::kGraph) {
      parse_graph(r, doc, out);
    } else if (is_interval(out.kind)) {
      parse_intervals(r, doc, out);
    } else if (is_geometric(out.kind)) {
      parse_geometric(r, doc, out);
    } else {
      parse_cnf(r, doc, out);
    }
  } catch (const json::exception& e) {
    r.fail("$", e.what());
  }
  if (!r.errors.empty()) throw SchemaError(r.errors);
  return out;
}

std::string emit_instance(const Instance& instance) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["kind"] = std::string(to_string(instance.kind));
  switch (instance.kind) {
    case InstanceKind::kGraph: {
      doc["n"] = instance.graph.size();
      json edges = json::array();
      for (const auto& [u, v] : instance.graph.edges()) edges.push_back({u, v});
      doc["edges"] = std::move(edges);
      break;
    }
    case InstanceKind::kIntervals:
    case InstanceKind::kUnitIntervals: {
      json list = json::array();
      for (const auto& iv : instance.intervals) list.push_back({iv.a, iv.b});
      doc["intervals"] = std::move(list);
      break;
    }
    case InstanceKind::kCnf2: {
      if (!instance.cnf) throw InvalidInput("cnf2 instance without a formula");
      doc["num_vars"] = instance.cnf->num_vars();
      json list = json::array();
      const auto signed_lit = [](const Literal& l) { return l.positive ? l.var + 1 : -(l.var + 1); };
      for (const auto& c : instance.cnf->clauses()) list.push_back({signed_lit(c.first), signed_lit(c.second)});
      doc["clauses"] = std::move(list);
      break;
    }
    default: {
      const GeometricInstance& g = instance.geometric;
      doc["line"] = {{"theta_deg", instance.theta_deg}, {"intercept", g.line.intercept}};
      if (g.max_diameter) doc["D"] = *g.max_diameter;
      if (g.min_diameter) doc["delta"] = *g.min_diameter;
      json list = json::array();
      for (const auto& o : g.objects) {
        json obj = {{"cx", o.cx}, {"cy", o.cy}};
        if (instance.kind == InstanceKind::kRectsUnitHeight) obj["width"] = o.width;
        if (instance.kind == InstanceKind::kDisks) obj["diameter"] = o.diameter;
        list.push_back(std::move(obj));
      }
      doc["objects"] = std::move(list);
      break;
    }
  }
  return doc.dump(2) + "\n";
}

std::string instance_digest(const Instance& instance) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const unsigned char ch : emit_instance(instance)) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

Graph instance_graph(const Instance& instance) {
  switch (instance.kind) {
    case InstanceKind::kGraph: return instance.graph;
    case InstanceKind::kIntervals:
    case InstanceKind::kUnitIntervals: return interval_graph(instance.intervals);
    case InstanceKind::kCnf2: return build_gc(*instance.cnf).graph;
    default: return intersection_graph(instance.geometric);
  }
}

Cnf2 parse_dimacs_cnf2(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int vars = -1;
  long declared = -1;
  std::vector<Clause> clauses;
  std::vector<long> pending;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string head;
    if (!(tokens >> head) || head == "c" || head[0] == '%') continue;
    if (head == "p") {
      std::string fmt;
      if (!(tokens >> fmt >> vars >> declared) || fmt != "cnf" || vars < 1 || declared < 0) {
        throw InvalidInput("line " + std::to_string(line_no) + ": expected 'p cnf <vars> <clauses>'");
      }
      continue;
    }
    if (vars < 0) throw InvalidInput("line " + std::to_string(line_no) + ": clause before the problem line");
    std::istringstream lits(line);
    long lit = 0;
    while (lits >> lit) {
      if (lit == 0) {
        if (pending.size() != 2) {
          throw InvalidInput("line " + std::to_string(line_no) + ": clause with " + std::to_string(pending.size()) +
                             " literals; only 2-CNF is accepted");
        }
        const auto make = [](long v) { return Literal{static_cast<int>(std::labs(v)) - 1, v > 0}; };
        clauses.push_back({make(pending[0]), make(pending[1])});
        pending.clear();
        continue;
      }
      if (std::labs(lit) > vars) throw InvalidInput("line " + std::to_string(line_no) + ": literal out of range");
      pending.push_back(lit);
    }
    if (!lits.eof()) throw InvalidInput("line " + std::to_string(line_no) + ": malformed literal");
  }
  if (vars < 0) throw InvalidInput("missing 'p cnf' line");
  if (!pending.empty()) throw InvalidInput("last clause is not terminated by 0");
  if (declared != static_cast<long>(clauses.size())) {
    throw InvalidInput("header declares " + std::to_string(declared) + " clauses, found " +
                       std::to_string(clauses.size()));
  }
  return Cnf2(vars, std::move(clauses));
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::string out = "graph " + std::string(name) + " {\n";
  for (NodeId v = 0; v < g.size(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (const auto& [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

std::string emit_result(const ResultFile& result) { return result_to_json(result).dump(2) + "\n"; }

ResultFile parse_result(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw SchemaError({std::string("$: malformed JSON: ") + e.what()});
  }
  Reader r;
  ResultFile out;
  if (const json* d = r.member(doc, "instance_digest", ""); d) {
    if (d->is_string()) {
      out.digest = d->get<std::string>();
    } else {
      r.fail("/instance_digest", "expected a string");
    }
  }
  if (!doc.is_object()) throw SchemaError(r.errors);
  if (const auto k = r.integer_at(doc, "k", "", false)) out.k = static_cast<int>(*k);
  out.alpha = r.number_at(doc, "alpha", "", false);
  if (const auto v = r.integer_at(doc, "nbd_size", "", false)) out.nbd_size = static_cast<int>(*v);
  if (const auto v = r.integer_at(doc, "gamma", "", false)) out.gamma = static_cast<int>(*v);
  if (const json* chosen = r.array_at(doc, "chosen", "")) {
    for (std::size_t i = 0; i < chosen->size(); ++i) {
      if (const auto v = r.integer((*chosen)[i], "/chosen/" + std::to_string(i))) {
        out.chosen.push_back(static_cast<NodeId>(*v));
      }
    }
  }
  if (const json* per_k = r.member(doc, "per_k", "", false)) {
    std::vector<int> table;
    if (!per_k->is_array()) r.fail("/per_k", "expected an array");
    for (std::size_t i = 0; per_k->is_array() && i < per_k->size(); ++i) {
      if (const auto v = r.integer((*per_k)[i], "/per_k/" + std::to_string(i))) table.push_back(static_cast<int>(*v));
    }
    out.per_k = std::move(table);
  }
  if (const json* s = r.member(doc, "solver", "", false); s && s->is_string()) out.solver = s->get<std::string>();
  if (const auto ms = r.number_at(doc, "wall_ms", "", false)) out.wall_ms = *ms;
  if (out.k.has_value() == out.alpha.has_value()) r.fail("$", "exactly one of k and alpha is required");
  if (!r.errors.empty()) throw SchemaError(r.errors);
  return out;
}

VerifyReport verify_result(const Instance& instance, const ResultFile& result) {
  VerifyReport report;
  const auto problem = [&](std::string what) {
    report.ok = false;
    report.problems.push_back(std::move(what));
  };
  if (result.digest != instance_digest(instance)) problem("instance digest does not match");

  const Graph g = instance_graph(instance);
  std::set<NodeId> seen;
  for (NodeId v : result.chosen) {
    if (v < 0 || v >= g.size()) {
      problem("chosen id " + std::to_string(v) + " out of range");
    } else if (!seen.insert(v).second) {
      problem("chosen id " + std::to_string(v) + " repeated");
    }
  }
  if (!report.ok) return report;
  const NodeSet chosen(result.chosen);
  const int covered = closed_neighborhood_size(g, chosen);
  const auto size = static_cast<int>(chosen.size());

  if (result.k) {
    if (size != *result.k) problem("|chosen| = " + std::to_string(size) + " but k = " + std::to_string(*result.k));
    if (!result.nbd_size) {
      problem("k query without nbd_size");
    } else if (covered != *result.nbd_size) {
      problem("chosen set dominates " + std::to_string(covered) + " nodes, claimed " +
              std::to_string(*result.nbd_size));
    }
    if (result.per_k && result.nbd_size &&
        (result.per_k->size() != static_cast<std::size_t>(*result.k) + 1 ||
         result.per_k->back() != *result.nbd_size)) {
      problem("per_k table disagrees with nbd_size");
    }
  } else if (result.alpha) {
    const int need = required_coverage(g.size(), *result.alpha);
    if (covered < need) problem("chosen set dominates " + std::to_string(covered) + " < " + std::to_string(need));
    if (!result.gamma || *result.gamma != size) problem("gamma does not equal |chosen|");
  }
  return report;
}

}  // namespace maxdom
