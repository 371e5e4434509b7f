#pragma once

#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "locus/error.hpp"

namespace locus {

/// Geometric tolerance in input length units.
inline constexpr double kEpsGeom = 1e-9;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

// Points double as free vectors.
using Vec2 = Point2;

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
inline Point2 operator*(Point2 a, double s) { return {s * a.x, s * a.y}; }
inline Point2 operator/(Point2 a, double s) { return {a.x / s, a.y / s}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
// Counterclockwise quarter turn.
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Infinite line through `point` along `direction` (not necessarily unit).
struct Line2 {
  Point2 point;
  Vec2 direction;

  /// The line a*x + b*y = c.
  static Line2 from_equation(double a, double b, double c);
};

/// The line {P : normal . P = offset}; `normal` is unit length and points
/// away from the interior of the polygon owning the line.
class OrientedLine {
 public:
  /// Line through edge a->b of a counterclockwise polygon.
  static OrientedLine through_edge(Point2 a, Point2 b);
  /// Normalizes `normal`; throws DegenerateInput on a zero normal.
  static OrientedLine from_normal(Vec2 normal, double offset);

  Vec2 normal() const { return normal_; }
  double offset() const { return offset_; }

  /// Negative on the interior side; |value| is the Euclidean distance.
  double signed_distance(Point2 p) const { return dot(normal_, p) - offset_; }

 private:
  OrientedLine(Vec2 n, double o) : normal_(n), offset_(o) {}
  Vec2 normal_;
  double offset_;
};

inline double signed_distance(const OrientedLine& line, Point2 p) {
  return line.signed_distance(p);
}

enum class Containment { inside, boundary, outside };

struct Box {
  Point2 min;
  Point2 max;

  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }
  Box united(const Box& o) const;
};

/// Result of intersecting a line with a closed convex region.
struct ClipResult {
  enum class Kind { empty, point, segment };
  Kind kind = Kind::empty;
  // For `point` both endpoints coincide.
  Point2 first;
  Point2 second;
};

/// Strictly convex polygon with counterclockwise vertices.
class ConvexPolygon {
 public:
  /// Validates and orients `points`. Clockwise input is reversed, keeping the
  /// first vertex in place. Throws DegenerateInput or NotConvex.
  static ConvexPolygon make(std::span<const Point2> points, double eps = kEpsGeom);

  std::span<const Point2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Point2& vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

  /// Line of edge i, from vertex i to vertex i+1.
  const OrientedLine& side(std::size_t i) const { return sides_[i % sides_.size()]; }
  std::span<const OrientedLine> sides() const { return sides_; }
  double side_length(std::size_t i) const { return distance(vertex(i), vertex(i + 1)); }

  double area() const { return area_; }
  Box bounds() const;

 private:
  ConvexPolygon(std::vector<Point2> v, std::vector<OrientedLine> s, double area)
      : vertices_(std::move(v)), sides_(std::move(s)), area_(area) {}

  std::vector<Point2> vertices_;
  std::vector<OrientedLine> sides_;
  double area_;
};

inline ConvexPolygon make_polygon(std::span<const Point2> points, double eps = kEpsGeom) {
  return ConvexPolygon::make(points, eps);
}

class Triangle {
 public:
  static Triangle make(Point2 a, Point2 b, Point2 c, double eps = kEpsGeom);
  /// Throws DegenerateInput unless `poly` has exactly three vertices.
  static Triangle from_polygon(ConvexPolygon poly);

  const ConvexPolygon& polygon() const { return poly_; }
  operator const ConvexPolygon&() const { return poly_; }

  const Point2& vertex(std::size_t i) const { return poly_.vertex(i); }
  const OrientedLine& side(std::size_t i) const { return poly_.side(i); }
  double side_length(std::size_t i) const { return poly_.side_length(i); }
  double area() const { return poly_.area(); }

  /// Altitude onto side i, i.e. the distance from vertex i+2 to that side.
  double altitude(std::size_t i) const { return 2.0 * area() / side_length(i); }

 private:
  explicit Triangle(ConvexPolygon p) : poly_(std::move(p)) {}
  ConvexPolygon poly_;
};

std::array<double, 3> altitudes(const Triangle& tri);

/// True when all sides agree within `rel_tol` of the longest side.
bool is_equilateral(const Triangle& tri, double rel_tol = 1e-9);

Containment contains(const ConvexPolygon& poly, Point2 p, double boundary_tol = kEpsGeom);

/// Intersection of an infinite line with the closed polygon. Segment
/// endpoints are ordered along `line.direction`.
ClipResult clip_line(const ConvexPolygon& poly, const Line2& line, double eps = kEpsGeom);

}  // namespace locus
