#include "rgbc/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <string>

#include "rgbc/error.hpp"

namespace rgbc {

namespace {

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

void require_finite(Point p, const char* what) {
  if (!finite(p)) fail(Errc::ConfigError, std::string(what) + " must be finite");
}

double shoelace_area(const std::vector<Point>& v) {
  double twice = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    twice += cross(a, b);
  }
  return 0.5 * twice;
}

Point polygon_centroid(const std::vector<Point>& v, double area) {
  double cx = 0.0, cy = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    const double w = cross(a, b);
    cx += (a.x + b.x) * w;
    cy += (a.y + b.y) * w;
  }
  return {cx / (6.0 * area), cy / (6.0 * area)};
}

// Distance from p to the segment [a, b].
double segment_distance(Point p, Point a, Point b) {
  const Point d = b - a;
  const double len2 = dot(d, d);
  double t = len2 > 0.0 ? dot(p - a, d) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, a + t * d);
}

}  // namespace

Domain Domain::disk(Point center, double radius) {
  require_finite(center, "disk center");
  if (!(radius > 0.0) || !std::isfinite(radius))
    fail(Errc::ConfigError, "disk radius must be positive");
  Domain d;
  d.shape_ = Shape::Disk;
  d.center_ = center;
  d.radius_ = radius;
  return d;
}

Domain Domain::rectangle(Point center, double width, double height) {
  require_finite(center, "rectangle center");
  if (!(width > 0.0) || !(height > 0.0) || !std::isfinite(width) ||
      !std::isfinite(height))
    fail(Errc::ConfigError, "rectangle sides must be positive");
  Domain d;
  d.shape_ = Shape::Rectangle;
  d.center_ = center;
  d.width_ = width;
  d.height_ = height;
  const double hw = 0.5 * width, hh = 0.5 * height;
  d.verts_ = {{center.x - hw, center.y - hh},
              {center.x + hw, center.y - hh},
              {center.x + hw, center.y + hh},
              {center.x - hw, center.y + hh}};
  return d;
}

Domain Domain::square(Point center, double side) {
  return rectangle(center, side, side);
}

Domain Domain::polygon(std::vector<Point> vertices) {
  if (vertices.size() < 3)
    fail(Errc::ConfigError, "polygon needs at least 3 vertices");
  for (const Point& v : vertices) require_finite(v, "polygon vertex");
  // Strict convexity: every consecutive edge pair turns left. The test is
  // scaled by the edge lengths so it is unit-free.
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = vertices[i];
    const Point b = vertices[(i + 1) % n];
    const Point c = vertices[(i + 2) % n];
    const Point e1 = b - a;
    const Point e2 = c - b;
    const double turn = cross(e1, e2);
    if (!(turn > 1e-12 * norm(e1) * norm(e2)))
      fail(Errc::ConfigError,
           "polygon vertices must be strictly convex in counterclockwise "
           "order with no repeats");
  }
  Domain d;
  d.shape_ = Shape::Polygon;
  d.verts_ = std::move(vertices);
  const double area = shoelace_area(d.verts_);
  d.center_ = polygon_centroid(d.verts_, area);
  return d;
}

Domain Domain::with_holes(std::vector<CircleHole> holes) const {
  if (has_holes()) fail(Errc::ConfigError, "domain already has holes");
  Domain d = *this;
  for (const CircleHole& h : holes) {
    require_finite(h.center, "hole center");
    if (!(h.radius > 0.0) || !std::isfinite(h.radius))
      fail(Errc::ConfigError, "hole radius must be positive");
    // Strictly inside the base: clearance to the boundary exceeds the radius.
    double clearance;
    if (shape_ == Shape::Disk) {
      clearance = radius_ - distance(h.center, center_);
    } else {
      if (!base_strictly_inside(h.center))
        fail(Errc::ConfigError, "hole center must lie inside the base shape");
      clearance = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < verts_.size(); ++i) {
        const Point a = verts_[i];
        const Point b = verts_[(i + 1) % verts_.size()];
        clearance = std::min(clearance, segment_distance(h.center, a, b));
      }
    }
    if (!(clearance > h.radius))
      fail(Errc::ConfigError, "hole must lie strictly inside the base shape");
  }
  for (std::size_t i = 0; i < holes.size(); ++i)
    for (std::size_t j = i + 1; j < holes.size(); ++j)
      if (!(distance(holes[i].center, holes[j].center) >
            holes[i].radius + holes[j].radius))
        fail(Errc::ConfigError, "holes must be pairwise disjoint");
  d.holes_ = std::move(holes);
  return d;
}

double Domain::area() const {
  double base;
  switch (shape_) {
    case Shape::Disk:
      base = std::numbers::pi * radius_ * radius_;
      break;
    case Shape::Rectangle:
      base = width_ * height_;
      break;
    case Shape::Polygon:
      base = shoelace_area(verts_);
      break;
    default:
      base = 0.0;
  }
  for (const CircleHole& h : holes_) base -= std::numbers::pi * h.radius * h.radius;
  return base;
}

double Domain::disk_radius() const {
  if (shape_ != Shape::Disk)
    fail(Errc::ConfigError, "disk_radius requested on a non-disk domain");
  return radius_;
}

BoundingBox Domain::bounding_box() const {
  switch (shape_) {
    case Shape::Disk:
      return {{center_.x - radius_, center_.y - radius_},
              {center_.x + radius_, center_.y + radius_}};
    default: {
      Point lo = verts_.front(), hi = verts_.front();
      for (const Point& v : verts_) {
        lo.x = std::min(lo.x, v.x);
        lo.y = std::min(lo.y, v.y);
        hi.x = std::max(hi.x, v.x);
        hi.y = std::max(hi.y, v.y);
      }
      return {lo, hi};
    }
  }
}

bool Domain::base_contains(Point p) const {
  switch (shape_) {
    case Shape::Disk:
      return distance(p, center_) <= radius_;
    case Shape::Rectangle:
      return std::abs(p.x - center_.x) <= 0.5 * width_ &&
             std::abs(p.y - center_.y) <= 0.5 * height_;
    case Shape::Polygon:
      for (std::size_t i = 0; i < verts_.size(); ++i) {
        const Point a = verts_[i];
        const Point b = verts_[(i + 1) % verts_.size()];
        if (cross(b - a, p - a) < 0.0) return false;
      }
      return true;
  }
  return false;
}

bool Domain::base_strictly_inside(Point p) const {
  switch (shape_) {
    case Shape::Disk:
      return distance(p, center_) < radius_;
    case Shape::Rectangle:
      return std::abs(p.x - center_.x) < 0.5 * width_ &&
             std::abs(p.y - center_.y) < 0.5 * height_;
    case Shape::Polygon:
      for (std::size_t i = 0; i < verts_.size(); ++i) {
        const Point a = verts_[i];
        const Point b = verts_[(i + 1) % verts_.size()];
        if (!(cross(b - a, p - a) > 0.0)) return false;
      }
      return true;
  }
  return false;
}

bool Domain::contains(Point p) const {
  if (!finite(p) || !base_contains(p)) return false;
  for (const CircleHole& h : holes_)
    if (distance(p, h.center) < h.radius) return false;  // open holes
  return true;
}

bool Domain::strictly_inside(Point p) const {
  if (!finite(p) || !base_strictly_inside(p)) return false;
  for (const CircleHole& h : holes_)
    if (!(distance(p, h.center) > h.radius)) return false;
  return true;
}

double Domain::ray_distance(Point origin, double theta) const {
  if (has_holes())
    fail(Errc::NonConvexDomain, "ray distance is undefined on a holed domain");
  if (!strictly_inside(origin))
    fail(Errc::OriginOutside, "ray origin must lie strictly inside the domain");

  const Point u{std::cos(theta), std::sin(theta)};

  if (shape_ == Shape::Disk) {
    // Smallest positive root of |origin + t*u - center|^2 = R^2; the origin
    // is interior, so the constant term is negative and the root below is
    // the positive one.
    const Point w = origin - center_;
    const double b = dot(w, u);
    const double c = dot(w, w) - radius_ * radius_;
    return -b + std::sqrt(b * b - c);
  }

  // Rectangle/polygon: minimal positive ray-segment intersection parameter
  // over all edges. Corner hits produce ties and the minimum resolves them.
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = verts_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = verts_[i];
    const Point d = verts_[(i + 1) % n] - a;
    const double denom = cross(u, d);
    if (std::abs(denom) < 1e-300) continue;  // ray parallel to this edge
    const Point ao = a - origin;
    const double t = cross(ao, d) / denom;
    const double s = cross(ao, u) / denom;
    if (t > 0.0 && s >= -1e-12 && s <= 1.0 + 1e-12) best = std::min(best, t);
  }
  if (!std::isfinite(best))
    fail(Errc::OriginOutside, "ray escaped the domain; origin not interior");
  return best;
}

std::vector<Point> Domain::sample_uniform(std::int64_t count,
                                          RngStream& rng) const {
  if (count < 0) fail(Errc::ConfigError, "sample count must be nonnegative");
  const BoundingBox bb = bounding_box();
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(count));
  while (static_cast<std::int64_t>(pts.size()) < count) {
    const double x = rng.uniform(bb.lo.x, bb.hi.x);
    const double y = rng.uniform(bb.lo.y, bb.hi.y);
    const Point p{x, y};
    if (contains(p)) pts.push_back(p);
  }
  return pts;
}

}  // namespace rgbc
