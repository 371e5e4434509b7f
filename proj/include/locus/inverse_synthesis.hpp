#pragma once

#include "locus/geometry.hpp"

namespace locus {

/// x^2 / alpha2 + y^2 / beta2 = 1 with alpha2 >= beta2 > 0.
struct EllipseCanonical {
  double alpha2 = 0.0;
  double beta2 = 0.0;

  /// Throws NonPositiveParameter or DegenerateInput (beta2 > alpha2).
  void validate() const;
};

/// Isosceles triangle A(0, a), B(-b, 0), C(b, 0) shifted down by
/// `vertical_shift`, and the squared-distance sum `k` it needs.
struct IsoscelesParams {
  double a = 0.0;
  double b = 0.0;
  double k = 0.0;
  double vertical_shift = 0.0;
};

struct EllipseTriangle {
  IsoscelesParams params;
  Triangle triangle;
};

/// Locus constant for the unshifted isosceles triangle with apex height `a`
/// and half-base `b`. Throws NonPositiveParameter.
double k_constant(double a, double b);

/// A triangle and constant k whose squared-distance locus {Q = k} is the
/// given canonical ellipse centered at the origin.
EllipseTriangle triangle_for_ellipse(const EllipseCanonical& e);

/// True iff the locus conics of `tri` are circles, i.e. it is equilateral.
bool is_circle_case(const Triangle& tri);

}  // namespace locus
