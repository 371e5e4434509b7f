#pragma once

#include <array>
#include <vector>

#include "locus/geometry.hpp"

namespace locus {

/// Q(P) = P^T M P + L . P + c0, the sum of squared distances from P to the
/// three side lines of a triangle. Valid everywhere in the plane.
struct QuadraticDistanceSum {
  // Symmetric: m01 is the off-diagonal entry.
  double m00 = 0.0, m01 = 0.0, m11 = 0.0;
  Vec2 linear;
  double constant = 0.0;

  double value(Point2 p) const {
    return m00 * p.x * p.x + 2.0 * m01 * p.x * p.y + m11 * p.y * p.y + dot(linear, p) + constant;
  }
  /// Minimizer of Q; M is positive definite for non-degenerate triangles.
  Point2 minimizer() const;
  double minimum() const { return value(minimizer()); }
};

QuadraticDistanceSum squared_distance_sum(const Triangle& tri);

/// A x^2 + B xy + C y^2 + D x + E y + F = 0.
struct ConicCoefficients {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0, e = 0.0, f = 0.0;

  double evaluate(Point2 p) const {
    return a * p.x * p.x + b * p.x * p.y + c * p.y * p.y + d * p.x + e * p.y + f;
  }
  double discriminant() const { return b * b - 4.0 * a * c; }
  /// Divides through by A + C when it is positive; returns *this otherwise.
  ConicCoefficients canonical() const;
  std::array<double, 6> as_array() const { return {a, b, c, d, e, f}; }
};

/// Level set {Q = k}, canonically scaled so that A + C = 1.
ConicCoefficients locus_conic(const Triangle& tri, double k);
ConicCoefficients locus_conic(const QuadraticDistanceSum& q, double k);

struct ConicGeometry {
  enum class Class { ellipse, circle, point, empty };
  Class kind = Class::empty;
  Point2 center;
  double semi_major = 0.0;
  double semi_minor = 0.0;
  /// Direction of the major axis, in [0, pi).
  double rotation = 0.0;

  /// Point on the curve at parameter `t` (radians).
  Point2 at(double t) const;
  std::vector<Point2> sample(std::size_t count) const;
};

const char* to_string(ConicGeometry::Class kind);

/// Center, semi-axes and rotation of a conic with a positive-definite
/// quadratic part. Throws NotDefinite when B^2 - 4AC >= 0.
ConicGeometry classify(const ConicCoefficients& conic, double eps = 1e-12);

/// Real intersections of a line with a conic, ordered along the line
/// direction. A near-zero discriminant (within `tangent_tol` after
/// normalization) reports a single tangent point.
std::vector<Point2> intersect_line_conic(const ConicCoefficients& conic, const Line2& line,
                                         double tangent_tol = 1e-9);

}  // namespace locus
