#include "locus/linear_locus.hpp"

#include <algorithm>
#include <cmath>

namespace locus {

AffineDistanceSum distance_sum_functional(const ConvexPolygon& poly) {
  // Inside, each unsigned distance is offset - normal . P.
  AffineDistanceSum f;
  for (const auto& s : poly.sides()) {
    f.gradient = f.gradient - s.normal();
    f.constant += s.offset();
  }
  return f;
}

ValueRange value_range(const ConvexPolygon& poly) {
  const auto f = distance_sum_functional(poly);
  ValueRange r{f.value(poly.vertex(0)), f.value(poly.vertex(0))};
  for (const auto& v : poly.vertices()) {
    r.min = std::min(r.min, f.value(v));
    r.max = std::max(r.max, f.value(v));
  }
  return r;
}

const char* to_string(Habitat::Kind kind) {
  switch (kind) {
    case Habitat::Kind::everywhere: return "everywhere";
    case Habitat::Kind::segment: return "segment";
    case Habitat::Kind::point: return "point";
    case Habitat::Kind::empty: return "empty";
  }
  return "?";
}

Habitat level_segment(const ConvexPolygon& poly, double level, double eps_val) {
  const auto f = distance_sum_functional(poly);
  Habitat h;
  h.level = level;
  if (f.is_constant()) {
    if (std::abs(f.constant - level) <= eps_val) h.kind = Habitat::Kind::everywhere;
    return h;
  }

  const auto range = value_range(poly);
  if (level < range.min - eps_val || level > range.max + eps_val) return h;
  double target = std::clamp(level, range.min, range.max);
  if (std::abs(target - range.min) <= eps_val) target = range.min;
  if (std::abs(target - range.max) <= eps_val) target = range.max;

  const double g2 = dot(f.gradient, f.gradient);
  const Line2 line{f.gradient * ((target - f.constant) / g2), perp(f.gradient)};
  const auto clip = clip_line(poly, line);
  switch (clip.kind) {
    case ClipResult::Kind::empty: return h;
    case ClipResult::Kind::point: h.kind = Habitat::Kind::point; break;
    case ClipResult::Kind::segment: h.kind = Habitat::Kind::segment; break;
  }
  h.first = clip.first;
  h.second = clip.second;
  return h;
}

std::vector<Habitat> parallel_decomposition(const ConvexPolygon& poly, int levels) {
  if (levels < 1) throw DegenerateInput("at least one level required");
  const auto f = distance_sum_functional(poly);
  if (f.is_constant()) return {level_segment(poly, f.constant)};

  const auto range = value_range(poly);
  const double step = (range.max - range.min) / levels;
  std::vector<Habitat> out;
  out.reserve(static_cast<std::size_t>(levels));
  for (int i = 0; i < levels; ++i) out.push_back(level_segment(poly, range.min + (i + 0.5) * step));
  return out;
}

namespace {

bool collinear(const std::array<Point2, 3>& p, double eps) {
  return 0.5 * std::abs(cross(p[1] - p[0], p[2] - p[0])) <= eps;
}

}  // namespace

ConstancyVerdict infer_constancy(const ConvexPolygon& poly, std::array<Point2, 3> samples,
                                 double eps_val, double eps_geom) {
  if (collinear(samples, eps_geom)) throw CollinearSamples("sample points are collinear");
  for (const auto& p : samples)
    if (contains(poly, p, eps_geom) == Containment::outside) throw PointOutside("sample outside polygon");

  const auto f = distance_sum_functional(poly);
  const double v0 = f.value(samples[0]), v1 = f.value(samples[1]), v2 = f.value(samples[2]);
  const double lo = std::min({v0, v1, v2}), hi = std::max({v0, v1, v2});
  if (hi - lo > eps_val) return {};
  return {true, (v0 + v1 + v2) / 3.0};
}

Triangle reconstruct_equilateral_from_base(Point2 v1, Point2 v2, std::array<Point2, 3> witnesses,
                                           double eps_geom) {
  if (distance(v1, v2) <= eps_geom) throw DegenerateInput("base endpoints coincide");
  if (collinear(witnesses, eps_geom)) throw CollinearSamples("witness points are collinear");

  const Vec2 base = v2 - v1;
  const Point2 centroid = (witnesses[0] + witnesses[1] + witnesses[2]) / 3.0;
  const double side = cross(base, centroid - v1) >= 0.0 ? 1.0 : -1.0;
  const Point2 apex = 0.5 * (v1 + v2) + (side * std::sqrt(3.0) / 2.0) * perp(base);

  auto tri = Triangle::make(v1, v2, apex, eps_geom);
  for (const auto& w : witnesses)
    if (contains(tri, w, eps_geom) == Containment::outside)
      throw WitnessOutside("witness not contained in the equilateral triangle on the base");
  return tri;
}

}  // namespace locus
