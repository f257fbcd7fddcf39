#include "maxdom/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "maxdom/errors.hpp"

namespace maxdom {

namespace {

constexpr double kVerticalCos = 1e-12;
constexpr double kAngleSnap = 1e-9;

bool symmetric_under_swap(ShapeKind kind) { return kind != ShapeKind::kRectUnitHeight; }

}  // namespace

std::string_view to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::kUnitSquare: return "unit_squares";
    case ShapeKind::kUnitDisk: return "unit_disks";
    case ShapeKind::kRectUnitHeight: return "rects_unit_height";
    case ShapeKind::kDisk: return "disks";
  }
  return "unknown";
}

bool StabLine::vertical() const { return std::abs(std::cos(theta)) < kVerticalCos; }

Point StabLine::anchor() const { return vertical() ? Point{intercept, 0.0} : Point{0.0, intercept}; }

Point StabLine::direction() const { return {std::cos(theta), std::sin(theta)}; }

Point StabLine::normal() const { return {-std::sin(theta), std::cos(theta)}; }

double StabLine::offset(Point p) const {
  const Point o = anchor();
  const Point nrm = normal();
  return (p.x - o.x) * nrm.x + (p.y - o.y) * nrm.y;
}

double StabLine::along(Point p) const {
  const Point o = anchor();
  const Point u = direction();
  return (p.x - o.x) * u.x + (p.y - o.y) * u.y;
}

double GeometricInstance::largest_diameter() const {
  if (max_diameter) return *max_diameter;
  double d = 0.0;
  for (const auto& o : objects) d = std::max(d, o.diameter);
  return d;
}

double GeometricInstance::smallest_diameter() const {
  if (min_diameter) return *min_diameter;
  if (objects.empty()) return 0.0;
  double d = objects.front().diameter;
  for (const auto& o : objects) d = std::min(d, o.diameter);
  return d;
}

bool intersects(ShapeKind kind, const GeoObject& p, const GeoObject& q) {
  const double dx = std::abs(p.cx - q.cx);
  const double dy = std::abs(p.cy - q.cy);
  switch (kind) {
    case ShapeKind::kUnitSquare: return dx <= 1.0 + kGeomEps && dy <= 1.0 + kGeomEps;
    case ShapeKind::kRectUnitHeight: return dx <= (p.width + q.width) / 2.0 + kGeomEps && dy <= 1.0 + kGeomEps;
    case ShapeKind::kUnitDisk: return std::hypot(dx, dy) <= 1.0 + kGeomEps;
    case ShapeKind::kDisk: return std::hypot(dx, dy) <= (p.diameter + q.diameter) / 2.0 + kGeomEps;
  }
  return false;
}

bool intersects(const TypedObject& p, const TypedObject& q) {
  if (p.kind != q.kind) {
    throw InvalidInput("cannot intersect " + std::string(to_string(p.kind)) + " with " + std::string(to_string(q.kind)));
  }
  return intersects(p.kind, p.object, q.object);
}

double normal_half_extent(ShapeKind kind, const GeoObject& obj, const StabLine& line) {
  const double s = std::abs(std::sin(line.theta));
  const double c = std::abs(std::cos(line.theta));
  switch (kind) {
    case ShapeKind::kUnitSquare: return (s + c) / 2.0;
    case ShapeKind::kRectUnitHeight: return obj.width / 2.0 * s + c / 2.0;
    case ShapeKind::kUnitDisk: return 0.5;
    case ShapeKind::kDisk: return obj.diameter / 2.0;
  }
  return 0.0;
}

bool is_stabbed(ShapeKind kind, const GeoObject& obj, const StabLine& line) {
  return std::abs(line.offset({obj.cx, obj.cy})) <= normal_half_extent(kind, obj, line) + kGeomEps;
}

void validate_instance(const GeometricInstance& instance) {
  if (!std::isfinite(instance.line.theta) || !std::isfinite(instance.line.intercept)) {
    throw InvalidInput("stabbing line has a non-finite parameter");
  }
  std::string problems;
  int bad = 0;
  const auto note = [&](int i, const std::string& what) {
    if (bad < 20) problems += "\n  object " + std::to_string(i) + ": " + what;
    ++bad;
  };
  for (int i = 0; i < instance.size(); ++i) {
    const GeoObject& o = instance.objects[static_cast<std::size_t>(i)];
    if (!std::isfinite(o.cx) || !std::isfinite(o.cy)) {
      note(i, "non-finite centre");
      continue;
    }
    if (instance.kind == ShapeKind::kRectUnitHeight && !(o.width >= 1.0 - kGeomEps && std::isfinite(o.width))) {
      note(i, "width " + std::to_string(o.width) + " below 1");
      continue;
    }
    if (instance.kind == ShapeKind::kDisk) {
      const double lo = instance.min_diameter.value_or(0.0);
      const double hi = instance.max_diameter.value_or(o.diameter);
      if (!(o.diameter > 0.0) || !std::isfinite(o.diameter) || o.diameter < lo - kGeomEps ||
          o.diameter > hi + kGeomEps) {
        note(i, "diameter " + std::to_string(o.diameter) + " outside the declared range");
        continue;
      }
    }
    if (!is_stabbed(instance.kind, o, instance.line)) note(i, "not intersected by the stabbing line");
  }
  if (instance.kind == ShapeKind::kDisk && instance.min_diameter && instance.max_diameter &&
      !(*instance.min_diameter > 0.0 && *instance.min_diameter <= *instance.max_diameter)) {
    throw InvalidInput("disk diameter bounds must satisfy 0 < delta <= D");
  }
  if (bad > 0) throw InvalidInput(std::to_string(bad) + " invalid object(s):" + problems);
}

Graph intersection_graph(const GeometricInstance& instance) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  const int n = instance.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (intersects(instance.kind, instance.objects[static_cast<std::size_t>(i)],
                     instance.objects[static_cast<std::size_t>(j)])) {
        edges.emplace_back(i, j);
      }
    }
  }
  return Graph(n, edges);
}

GeometricInstance canonicalize_line(const GeometricInstance& instance) {
  validate_instance(instance);
  GeometricInstance out = instance;
  Point anchor = instance.line.anchor();

  double theta = std::fmod(instance.line.theta, std::numbers::pi);
  if (theta < 0.0) theta += std::numbers::pi;
  if (std::abs(theta - std::numbers::pi) < kAngleSnap) theta = 0.0;

  if (theta > std::numbers::pi / 2.0 + kAngleSnap) {
    theta = std::numbers::pi - theta;
    anchor.x = -anchor.x;
    for (auto& o : out.objects) o.cx = -o.cx;
  }
  if (symmetric_under_swap(instance.kind) && theta > std::numbers::pi / 4.0 + kAngleSnap) {
    theta = std::numbers::pi / 2.0 - theta;
    std::swap(anchor.x, anchor.y);
    for (auto& o : out.objects) std::swap(o.cx, o.cy);
  }
  if (std::abs(theta) < kAngleSnap) theta = 0.0;
  if (std::abs(theta - std::numbers::pi / 4.0) < kAngleSnap) theta = std::numbers::pi / 4.0;
  if (std::abs(theta - std::numbers::pi / 2.0) < kAngleSnap) theta = std::numbers::pi / 2.0;

  out.line.theta = theta;
  out.line.canonical = true;
  if (out.line.vertical()) {
    out.line.intercept = anchor.x;
  } else {
    out.line.intercept = anchor.y - anchor.x * std::tan(theta);
  }
  return out;
}

Point decomposition_center(ShapeKind kind, const GeoObject& obj, const StabLine& line) {
  if (kind != ShapeKind::kRectUnitHeight) return {obj.cx, obj.cy};
  const double slack = std::max(0.0, (obj.width - 1.0) / 2.0);
  double x = obj.cx;
  if (line.vertical()) {
    x = line.intercept;
  } else if (std::abs(std::sin(line.theta)) > kVerticalCos) {
    x = (obj.cy - line.intercept) / std::tan(line.theta);
  }
  return {std::clamp(x, obj.cx - slack, obj.cx + slack), obj.cy};
}

}  // namespace maxdom
