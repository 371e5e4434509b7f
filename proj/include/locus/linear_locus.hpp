#pragma once

#include <array>
#include <vector>

#include "locus/geometry.hpp"

namespace locus {

/// Tolerance for comparing values of the distance-sum functional.
inline constexpr double kEpsVal = 1e-9;

/// The sum of distances to the sides of a convex polygon, extended to the
/// plane as the affine sum of negated signed distances. It equals the plain
/// distance sum only on the closed polygon.
struct AffineDistanceSum {
  Vec2 gradient;
  double constant = 0.0;

  double value(Point2 p) const { return dot(gradient, p) + constant; }
  bool is_constant(double tol = kEpsVal) const { return norm(gradient) <= tol; }
};

AffineDistanceSum distance_sum_functional(const ConvexPolygon& poly);

struct ValueRange {
  double min = 0.0;
  double max = 0.0;
};

/// Extremes of the functional over the closed polygon (attained at vertices).
ValueRange value_range(const ConvexPolygon& poly);

/// Where a point of fixed distance sum (`level`) may sit inside the polygon.
struct Habitat {
  enum class Kind { everywhere, segment, point, empty };
  Kind kind = Kind::empty;
  double level = 0.0;
  Point2 first;
  Point2 second;
};

const char* to_string(Habitat::Kind kind);

/// Intersection of {V = level} with the polygon. Levels that hit the range
/// ends within `eps_val` snap to the extreme vertex.
Habitat level_segment(const ConvexPolygon& poly, double level, double eps_val = kEpsVal);

/// `levels` mid-level slices of the value range, in increasing level order.
/// A polygon with constant functional yields a single `everywhere` entry.
std::vector<Habitat> parallel_decomposition(const ConvexPolygon& poly, int levels);

struct ConstancyVerdict {
  bool constant = false;
  double value = 0.0;  // meaningful only when `constant`
};

/// Equal functional values at three non-collinear points of a convex polygon
/// force the functional to be constant on it. Points may sit on the boundary
/// within `eps_geom`. Throws CollinearSamples or PointOutside.
ConstancyVerdict infer_constancy(const ConvexPolygon& poly, std::array<Point2, 3> samples,
                                 double eps_val = kEpsVal, double eps_geom = kEpsGeom);

/// Equilateral triangle on base v1-v2 whose apex lies on the side of the
/// witness points, all of which must be contained (boundary allowed).
/// Throws DegenerateInput, CollinearSamples or WitnessOutside.
Triangle reconstruct_equilateral_from_base(Point2 v1, Point2 v2, std::array<Point2, 3> witnesses,
                                           double eps_geom = kEpsGeom);

}  // namespace locus
