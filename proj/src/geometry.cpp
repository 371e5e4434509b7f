#include "locus/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

namespace locus {

Line2 Line2::from_equation(double a, double b, double c) {
  const double n2 = a * a + b * b;
  if (!(n2 > 0.0)) throw DegenerateInput("line equation with zero normal");
  return {{a * c / n2, b * c / n2}, {-b, a}};
}

OrientedLine OrientedLine::through_edge(Point2 a, Point2 b) {
  const Vec2 d = b - a;
  const double len = norm(d);
  if (!(len > 0.0)) throw DegenerateInput("edge of zero length");
  // Interior lies to the left of a->b, so the right-hand normal points out.
  const Vec2 n{d.y / len, -d.x / len};
  return {n, dot(n, a)};
}

OrientedLine OrientedLine::from_normal(Vec2 normal, double offset) {
  const double len = norm(normal);
  if (!(len > 0.0) || !std::isfinite(len)) throw DegenerateInput("zero line normal");
  return {normal / len, offset / len};
}

Box Box::united(const Box& o) const {
  return {{std::min(min.x, o.min.x), std::min(min.y, o.min.y)},
          {std::max(max.x, o.max.x), std::max(max.y, o.max.y)}};
}

namespace {

double shoelace(std::span<const Point2> v) {
  double twice = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) twice += cross(v[i], v[(i + 1) % v.size()]);
  return 0.5 * twice;
}

}  // namespace

ConvexPolygon ConvexPolygon::make(std::span<const Point2> points, double eps) {
  const std::size_t n = points.size();
  if (n < 3) throw DegenerateInput("polygon needs at least 3 vertices");
  for (const auto& p : points)
    if (!is_finite(p)) throw DegenerateInput("non-finite vertex coordinate");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (distance(points[i], points[j]) <= eps) throw DegenerateInput("repeated vertex");

  std::vector<Point2> v(points.begin(), points.end());
  double area = shoelace(v);
  if (std::abs(area) <= eps) throw DegenerateInput("collinear vertices");
  if (area < 0.0) {
    std::reverse(v.begin() + 1, v.end());
    area = -area;
  }

  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e0 = v[(i + 1) % n] - v[i];
    const Vec2 e1 = v[(i + 2) % n] - v[(i + 1) % n];
    const double c = cross(e0, e1);
    if (c < -eps) throw NotConvex("reflex vertex");
    if (c <= eps) throw DegenerateInput("collinear consecutive vertices");
    turning += std::atan2(c, dot(e0, e1));
  }
  // A self-intersecting star turns more than once.
  if (std::abs(turning - 2.0 * std::numbers::pi) > 1e-6) throw NotConvex("vertices wind more than once");

  std::vector<OrientedLine> sides;
  sides.reserve(n);
  for (std::size_t i = 0; i < n; ++i) sides.push_back(OrientedLine::through_edge(v[i], v[(i + 1) % n]));
  return ConvexPolygon(std::move(v), std::move(sides), area);
}

Box ConvexPolygon::bounds() const {
  Box b{vertices_.front(), vertices_.front()};
  for (const auto& p : vertices_) b = b.united({p, p});
  return b;
}

Triangle Triangle::make(Point2 a, Point2 b, Point2 c, double eps) {
  const std::array<Point2, 3> pts{a, b, c};
  return Triangle(ConvexPolygon::make(pts, eps));
}

Triangle Triangle::from_polygon(ConvexPolygon poly) {
  if (poly.size() != 3) throw DegenerateInput("triangle needs exactly 3 vertices");
  return Triangle(std::move(poly));
}

std::array<double, 3> altitudes(const Triangle& tri) {
  return {tri.altitude(0), tri.altitude(1), tri.altitude(2)};
}

bool is_equilateral(const Triangle& tri, double rel_tol) {
  const double s0 = tri.side_length(0), s1 = tri.side_length(1), s2 = tri.side_length(2);
  const double longest = std::max({s0, s1, s2});
  const double shortest = std::min({s0, s1, s2});
  return longest - shortest <= rel_tol * longest;
}

Containment contains(const ConvexPolygon& poly, Point2 p, double boundary_tol) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& s : poly.sides()) worst = std::max(worst, s.signed_distance(p));
  if (worst < -boundary_tol) return Containment::inside;
  if (worst <= boundary_tol) return Containment::boundary;
  return Containment::outside;
}

ClipResult clip_line(const ConvexPolygon& poly, const Line2& line, double eps) {
  const double len = norm(line.direction);
  if (!(len > 0.0)) throw DegenerateInput("line direction is zero");
  const Vec2 dir = line.direction / len;

  // Cyrus-Beck: each side restricts t where s0 + t * rate <= 0.
  double t_lo = -std::numeric_limits<double>::infinity();
  double t_hi = std::numeric_limits<double>::infinity();
  for (const auto& s : poly.sides()) {
    const double s0 = s.signed_distance(line.point);
    const double rate = dot(s.normal(), dir);
    if (std::abs(rate) <= 1e-15) {
      if (s0 > eps) return {};
      continue;
    }
    const double t = -s0 / rate;
    if (rate > 0.0)
      t_hi = std::min(t_hi, t);
    else
      t_lo = std::max(t_lo, t);
  }

  if (t_lo > t_hi + eps) return {};
  if (t_hi - t_lo <= eps) {
    const Point2 p = line.point + (0.5 * (t_lo + t_hi)) * dir;
    return {ClipResult::Kind::point, p, p};
  }
  return {ClipResult::Kind::segment, line.point + t_lo * dir, line.point + t_hi * dir};
}

}  // namespace locus
