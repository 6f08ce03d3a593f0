#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "rgbc/rng.hpp"

namespace rgbc {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point p) { return std::sqrt(dot(p, p)); }
inline double distance(Point a, Point b) { return norm(a - b); }

struct BoundingBox {
  Point lo;
  Point hi;
  double width() const { return hi.x - lo.x; }
  double height() const { return hi.y - lo.y; }
  double area() const { return width() * height(); }
};

struct CircleHole {
  Point center;
  double radius = 0.0;
};

/// Bounded 2-D region: a disk, an axis-aligned rectangle or a strictly
/// convex polygon, optionally minus a set of circular holes. The base
/// shapes are convex; adding holes makes the domain non-convex and rules
/// out boundary ray casts.
///
/// Points exactly on the outer boundary count as contained (closed set);
/// points inside an open hole do not.
class Domain {
 public:
  enum class Shape { Disk, Rectangle, Polygon };

  static Domain disk(Point center, double radius);
  static Domain rectangle(Point center, double width, double height);
  static Domain square(Point center, double side);
  /// Vertices must be in counterclockwise order and strictly convex.
  static Domain polygon(std::vector<Point> vertices);
  /// Copy of this domain with circular holes removed. Holes must lie
  /// strictly inside the base shape and be pairwise disjoint.
  Domain with_holes(std::vector<CircleHole> holes) const;

  Shape shape() const { return shape_; }
  bool has_holes() const { return !holes_.empty(); }
  bool convex() const { return holes_.empty(); }
  const std::vector<CircleHole>& holes() const { return holes_; }
  /// Corner list for Rectangle/Polygon (CCW); empty for a disk.
  const std::vector<Point>& vertices() const { return verts_; }

  double area() const;
  /// Reference center used for radial distance measurements:
  /// disk/rectangle center, polygon centroid.
  Point anchor() const { return center_; }
  /// Radius accessor; only valid for Shape::Disk.
  double disk_radius() const;
  BoundingBox bounding_box() const;

  bool contains(Point p) const;
  bool strictly_inside(Point p) const;

  /// Distance from an interior point to the domain boundary along the
  /// direction theta (radians, taken mod 2pi). Requires a convex domain
  /// and a strictly interior origin.
  double ray_distance(Point origin, double theta) const;

  /// `count` i.i.d. points uniform on the domain, by rejection from the
  /// bounding box. Deterministic given the stream state.
  std::vector<Point> sample_uniform(std::int64_t count, RngStream& rng) const;

 private:
  Domain() = default;

  bool base_contains(Point p) const;
  bool base_strictly_inside(Point p) const;

  Shape shape_ = Shape::Disk;
  Point center_;                  // disk/rect center, polygon centroid
  double radius_ = 0.0;           // disk only
  double width_ = 0.0;            // rectangle only
  double height_ = 0.0;           // rectangle only
  std::vector<Point> verts_;      // rectangle corners / polygon vertices, CCW
  std::vector<CircleHole> holes_;
};

}  // namespace rgbc
