#include "maxdom/strip.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "maxdom/errors.hpp"

namespace maxdom {

namespace {

constexpr double kAngleTol = 1e-9;
// Centres this close below a box boundary count as on it (and go right).
constexpr double kBoundarySnap = 1e-9;

int ceil_tolerant(double x) { return static_cast<int>(std::ceil(x - 1e-9)); }

}  // namespace

StripParams strip_params(ShapeKind kind, double theta, double max_diameter, double min_diameter,
                         const PerBoxBounds& bounds) {
  const double quarter = std::numbers::pi / 4.0;
  StripParams p;
  switch (kind) {
    case ShapeKind::kUnitSquare:
    case ShapeKind::kUnitDisk: {
      if (theta < -kAngleTol || theta > quarter + kAngleTol) {
        throw InvalidInput("line angle must be canonical (0 to 45 degrees) for " + std::string(to_string(kind)));
      }
      p.strip_width = std::numbers::sqrt2 * std::sin(quarter + theta);
      p.box_length = p.strip_width;
      p.per_box_bound = bounds.unit;
      return p;
    }
    case ShapeKind::kRectUnitHeight: {
      if (theta <= kAngleTol) {
        throw InvalidInput("horizontal line over unit-height rectangles: solve as an interval instance");
      }
      if (theta > quarter + kAngleTol) {
        throw InvalidInput("unit-height rectangles support line angles in (0, 45] degrees up to reflection, got " +
                           std::to_string(theta * 180.0 / std::numbers::pi) + " degrees");
      }
      if (std::abs(theta - quarter) <= kAngleTol) {
        p.strip_width = std::numbers::sqrt2;
        p.box_length = 2.0 * std::numbers::sqrt2;
        p.sub_rows = 2;
        p.sub_cols = 4;
        p.per_box_bound = bounds.rect_diagonal;
        return p;
      }
      const double c = std::cos(theta);
      const double s = std::sin(theta);
      p.strip_width = 2.0 * c;
      p.box_length = (1.0 + 2.0 * c * c) / s;
      p.sub_rows = ceil_tolerant(std::numbers::sqrt2 * p.strip_width);
      p.sub_cols = ceil_tolerant(std::numbers::sqrt2 * p.box_length);
      p.per_box_bound = 3 * p.sub_rows * p.sub_cols - 1;
      return p;
    }
    case ShapeKind::kDisk: {
      if (theta < -kAngleTol || theta > quarter + kAngleTol) {
        throw InvalidInput("line angle must be canonical (0 to 45 degrees) for disks");
      }
      if (!(min_diameter > 0.0 && min_diameter <= max_diameter)) {
        throw InvalidInput("disk diameters need 0 < delta <= D, got delta=" + std::to_string(min_diameter) +
                           " D=" + std::to_string(max_diameter));
      }
      p.strip_width = max_diameter;
      p.box_length = max_diameter;
      const int side = ceil_tolerant(std::numbers::sqrt2 * max_diameter / min_diameter);
      p.sub_rows = side;
      p.sub_cols = side;
      p.per_box_bound = 3 * side * side - 1;
      return p;
    }
  }
  throw InvalidInput("unknown shape kind");
}

DecompositionConfig DecompositionConfig::from_env() {
  DecompositionConfig config;
  if (const char* raw = std::getenv("MAXDOM_BOX_MAX_MEMBERS")) {
    char* end = nullptr;
    const long value = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || value < 1 || value > 30) {
      throw InvalidInput("MAXDOM_BOX_MAX_MEMBERS must be an integer in [1, 30]");
    }
    config.max_box_members = static_cast<int>(value);
  }
  return config;
}

std::pair<int, int> StripDecomposition::sub_box(int object) const {
  if (params.sub_rows <= 0 || params.sub_cols <= 0) throw InvalidInput("this decomposition has no sub-box grid");
  const auto s = static_cast<std::size_t>(object);
  const double into_box = along[s] - origin - box_length * box_of[s];
  const int col = static_cast<int>(std::floor(into_box / (box_length / params.sub_cols)));
  const int row =
      static_cast<int>(std::floor((across[s] + params.strip_width / 2.0) / (params.strip_width / params.sub_rows)));
  return {std::clamp(row, 0, params.sub_rows - 1), std::clamp(col, 0, params.sub_cols - 1)};
}

StripDecomposition build_decomposition(const GeometricInstance& canonical, const DecompositionConfig& config,
                                       const PerBoxBounds& bounds) {
  if (!canonical.line.canonical) throw InvalidInput("decomposition needs a canonicalized line");
  StripDecomposition out;
  out.params = strip_params(canonical.kind, canonical.line.theta, canonical.largest_diameter(),
                            canonical.smallest_diameter(), bounds);
  out.box_length = out.params.box_length;

  const int n = canonical.size();
  out.along.resize(static_cast<std::size_t>(n));
  out.across.resize(static_cast<std::size_t>(n));
  out.box_of.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Point c = decomposition_center(canonical.kind, canonical.objects[static_cast<std::size_t>(i)], canonical.line);
    out.along[static_cast<std::size_t>(i)] = canonical.line.along(c);
    out.across[static_cast<std::size_t>(i)] = canonical.line.offset(c);
  }
  if (n == 0) return out;

  out.origin = *std::min_element(out.along.begin(), out.along.end());
  const double span = *std::max_element(out.along.begin(), out.along.end()) - out.origin;
  const double box_count = std::floor(span / out.box_length + kBoundarySnap) + 1.0;
  if (box_count > static_cast<double>(config.max_boxes)) {
    throw BudgetExceeded("strip needs " + std::to_string(box_count) + " boxes, budget is " +
                         std::to_string(config.max_boxes));
  }
  out.boxes.resize(static_cast<std::size_t>(box_count));
  for (int i = 0; i < n; ++i) {
    const auto s = static_cast<std::size_t>(i);
    int b = static_cast<int>(std::floor((out.along[s] - out.origin) / out.box_length + kBoundarySnap));
    b = std::clamp(b, 0, out.box_count() - 1);
    out.box_of[s] = b;
    out.boxes[static_cast<std::size_t>(b)].push_back(i);
  }
  for (int b = 0; b < out.box_count(); ++b) {
    const auto members = static_cast<int>(out.boxes[static_cast<std::size_t>(b)].size());
    if (members > config.max_box_members) {
      throw BudgetExceeded("box " + std::to_string(b) + " holds " + std::to_string(members) +
                           " objects, budget is " + std::to_string(config.max_box_members));
    }
  }

  if (config.check_locality) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (std::abs(out.box_of[static_cast<std::size_t>(i)] - out.box_of[static_cast<std::size_t>(j)]) < 2) continue;
        if (intersects(canonical.kind, canonical.objects[static_cast<std::size_t>(i)],
                       canonical.objects[static_cast<std::size_t>(j)])) {
          throw ContractViolation("objects " + std::to_string(i) + " and " + std::to_string(j) +
                                  " intersect but lie in non-adjacent boxes");
        }
      }
    }
  }
  return out;
}

}  // namespace maxdom
