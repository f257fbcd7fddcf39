#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "maxdom/graph.hpp"

namespace maxdom {

/// Absolute tolerance for every geometric comparison.
inline constexpr double kGeomEps = 1e-9;

enum class ShapeKind {
  kUnitSquare,      // axis-parallel, side 1
  kUnitDisk,        // diameter 1
  kRectUnitHeight,  // axis-parallel, height 1, width >= 1
  kDisk,            // arbitrary diameter in [delta, D]
};

std::string_view to_string(ShapeKind kind);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// y = x tan(theta) + intercept; when theta is vertical the line is x = intercept.
struct StabLine {
  double theta = 0.0;  // radians
  double intercept = 0.0;
  bool canonical = false;

  [[nodiscard]] bool vertical() const;
  [[nodiscard]] Point anchor() const;     // a point on the line
  [[nodiscard]] Point direction() const;  // unit vector along the line
  [[nodiscard]] Point normal() const;     // unit vector, direction rotated by +90 degrees
  /// Signed perpendicular distance of p from the line, positive on the normal side.
  [[nodiscard]] double offset(Point p) const;
  /// Coordinate of p's projection along the line, measured from anchor().
  [[nodiscard]] double along(Point p) const;
};

/// One planar object. `width` matters for rectangles, `diameter` for disks; the unit
/// kinds ignore both.
struct GeoObject {
  double cx = 0.0;
  double cy = 0.0;
  double width = 1.0;
  double diameter = 1.0;
  friend bool operator==(const GeoObject&, const GeoObject&) = default;
};

struct TypedObject {
  ShapeKind kind;
  GeoObject object;
};

struct GeometricInstance {
  ShapeKind kind = ShapeKind::kUnitSquare;
  std::vector<GeoObject> objects;
  StabLine line;
  /// Declared diameter bounds for disks; derived from the objects when absent.
  std::optional<double> max_diameter;
  std::optional<double> min_diameter;

  [[nodiscard]] int size() const { return static_cast<int>(objects.size()); }
  [[nodiscard]] double largest_diameter() const;
  [[nodiscard]] double smallest_diameter() const;
};

/// Closed-shape intersection with tolerance kGeomEps.
bool intersects(ShapeKind kind, const GeoObject& p, const GeoObject& q);
/// Kind-checked variant; throws InvalidInput on a kind mismatch.
bool intersects(const TypedObject& p, const TypedObject& q);

/// Half the extent of the object along the line's normal.
double normal_half_extent(ShapeKind kind, const GeoObject& obj, const StabLine& line);

bool is_stabbed(ShapeKind kind, const GeoObject& obj, const StabLine& line);

/// Throws InvalidInput listing every object that misses the line or has bad dimensions.
void validate_instance(const GeometricInstance& instance);

/// O(n^2) pairwise intersection graph.
Graph intersection_graph(const GeometricInstance& instance);

/// Maps the line into the canonical angle range with axis reflections (and, for shapes
/// symmetric under it, the x/y swap): [0, 45] degrees for squares and disks,
/// [0, 90) degrees for unit-height rectangles. The intersection graph is unchanged.
GeometricInstance canonicalize_line(const GeometricInstance& instance);

/// Centre used for box membership: the object centre, or for rectangles the centre of
/// the inscribed unit square nearest the line (on the horizontal midline, clamped).
Point decomposition_center(ShapeKind kind, const GeoObject& obj, const StabLine& line);

}  // namespace maxdom
