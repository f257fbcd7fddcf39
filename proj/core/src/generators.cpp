#include "maxdom/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace maxdom {

namespace {

constexpr double kGrid = 1e-6;

double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * unit_uniform(rng); }

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(unit_uniform(rng) * static_cast<double>(hi - lo + 1));
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (unit_uniform(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

std::vector<Interval> random_intervals(int n, bool unit, double max_length, std::mt19937_64& rng) {
  std::vector<Interval> out;
  for (int i = 0; i < n; ++i) {
    const double len = unit ? 1.0 : snap(uniform(rng, 0.1, std::min(max_length, static_cast<double>(n))));
    const double a = snap(uniform(rng, 0.0, std::max(0.0, n - len)));
    out.push_back({a, a + len});
  }
  return out;
}

GeometricInstance random_objects(ShapeKind kind, int n, const GenParams& params, std::mt19937_64& rng) {
  GeometricInstance g;
  g.kind = kind;
  g.line = StabLine{params.theta_deg * std::numbers::pi / 180.0, params.intercept, false};
  if (kind == ShapeKind::kDisk) {
    g.max_diameter = params.max_diameter;
    g.min_diameter = params.min_diameter;
  }
  const Point origin = g.line.anchor();
  const Point u = g.line.direction();
  const Point nrm = g.line.normal();
  const double extent = params.spread * n;
  for (int i = 0; i < n; ++i) {
    GeoObject o;
    if (kind == ShapeKind::kRectUnitHeight) o.width = snap(uniform(rng, 1.0, params.max_width));
    if (kind == ShapeKind::kDisk) {
      o.diameter = std::clamp(snap(uniform(rng, params.min_diameter, params.max_diameter)), params.min_diameter,
                              params.max_diameter);
    }
    // Shrink the band so grid rounding cannot push the centre off the line.
    const double band = std::max(0.0, normal_half_extent(kind, o, g.line) - 2.0 * kGrid);
    const double t = uniform(rng, 0.0, extent);
    const double s = uniform(rng, -band, band);
    o.cx = snap(origin.x + t * u.x + s * nrm.x);
    o.cy = snap(origin.y + t * u.y + s * nrm.y);
    g.objects.push_back(o);
  }
  return g;
}

}  // namespace

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double snap(double x) {
  const double r = std::round(x / kGrid) * kGrid;
  return r == 0.0 ? 0.0 : r;
}

Instance generate(InstanceKind kind, int n, std::uint64_t seed, const GenParams& params) {
  if (kind != InstanceKind::kCnf2 && n < 1) throw InvalidInput("generator needs n >= 1");
  std::mt19937_64 rng(seed);
  Instance out;
  out.kind = kind;
  switch (kind) {
    case InstanceKind::kGraph:
      if (!(params.edge_probability >= 0.0 && params.edge_probability <= 1.0)) {
        throw InvalidInput("edge probability must lie in [0, 1]");
      }
      out.graph = random_graph(n, params.edge_probability, rng);
      break;
    case InstanceKind::kIntervals:
    case InstanceKind::kUnitIntervals:
      if (!(params.max_length >= 0.1)) throw InvalidInput("max_length must be at least 0.1");
      out.intervals = random_intervals(n, kind == InstanceKind::kUnitIntervals, params.max_length, rng);
      break;
    case InstanceKind::kCnf2: {
      if (params.num_vars < 1 || params.num_clauses < 1) throw InvalidInput("cnf2 needs >= 1 variable and clause");
      std::vector<Clause> clauses;
      for (int j = 0; j < params.num_clauses; ++j) {
        Clause c;
        c.first = {uniform_int(rng, 0, params.num_vars - 1), unit_uniform(rng) < 0.5};
        c.second = {uniform_int(rng, 0, params.num_vars - 1), unit_uniform(rng) < 0.5};
        clauses.push_back(c);
      }
      out.cnf.emplace(params.num_vars, std::move(clauses));
      break;
    }
    default: {
      if (!(params.spread > 0.0) || !std::isfinite(params.theta_deg) || !std::isfinite(params.intercept)) {
        throw InvalidInput("spread must be positive and the line finite");
      }
      if (kind == InstanceKind::kRectsUnitHeight && !(params.max_width >= 1.0)) {
        throw InvalidInput("max_width must be at least 1");
      }
      if (kind == InstanceKind::kDisks && !(params.min_diameter > 0.0 && params.min_diameter <= params.max_diameter)) {
        throw InvalidInput("disk diameters need 0 < delta <= D");
      }
      out.theta_deg = params.theta_deg;
      out.geometric = random_objects(shape_of(kind), n, params, rng);
      break;
    }
  }
  return out;
}

}  // namespace maxdom
