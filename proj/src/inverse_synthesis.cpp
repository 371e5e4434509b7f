#include "locus/inverse_synthesis.hpp"

#include <cmath>

namespace locus {

void EllipseCanonical::validate() const {
  if (!(alpha2 > 0.0) || !(beta2 > 0.0) || !std::isfinite(alpha2) || !std::isfinite(beta2))
    throw NonPositiveParameter("ellipse axes must be positive and finite");
  if (beta2 > alpha2) throw DegenerateInput("ellipse needs alpha2 >= beta2");
}

double k_constant(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw NonPositiveParameter("a and b must be positive");
  const double a2 = a * a, b2 = b * b;
  return 2.0 * a2 * (a2 * a2 + 7.0 * a2 * b2 + 10.0 * b2 * b2) / ((a2 + b2) * (a2 + 3.0 * b2));
}

EllipseTriangle triangle_for_ellipse(const EllipseCanonical& e) {
  e.validate();
  // beta^2 = 2a^2 and alpha^2 = a^2 + 3b^2.
  IsoscelesParams p;
  p.a = std::sqrt(e.beta2 / 2.0);
  p.b = std::sqrt((e.alpha2 - p.a * p.a) / 3.0);
  p.k = k_constant(p.a, p.b);
  p.vertical_shift = 2.0 * p.a * p.b * p.b / (p.a * p.a + 3.0 * p.b * p.b);

  const double s = p.vertical_shift;
  auto tri = Triangle::make({0.0, p.a - s}, {-p.b, -s}, {p.b, -s});
  return {p, std::move(tri)};
}

bool is_circle_case(const Triangle& tri) { return is_equilateral(tri, 1e-9); }

}  // namespace locus
