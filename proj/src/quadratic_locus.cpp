#include "locus/quadratic_locus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace locus {

Point2 QuadraticDistanceSum::minimizer() const {
  // Gradient 2 M P + L = 0.
  const double det = m00 * m11 - m01 * m01;
  if (!(det > 0.0)) throw NotDefinite("quadratic part is not positive definite");
  return {(-linear.x * m11 + linear.y * m01) / (2.0 * det),
          (-linear.y * m00 + linear.x * m01) / (2.0 * det)};
}

QuadraticDistanceSum squared_distance_sum(const Triangle& tri) {
  // (n . P - o)^2 = P^T n n^T P - 2 o n . P + o^2, summed over the sides.
  QuadraticDistanceSum q;
  for (const auto& s : tri.polygon().sides()) {
    const Vec2 n = s.normal();
    const double o = s.offset();
    q.m00 += n.x * n.x;
    q.m01 += n.x * n.y;
    q.m11 += n.y * n.y;
    q.linear = q.linear - (2.0 * o) * n;
    q.constant += o * o;
  }
  return q;
}

ConicCoefficients ConicCoefficients::canonical() const {
  const double trace = a + c;
  if (!(trace > 0.0)) return *this;
  return {a / trace, b / trace, c / trace, d / trace, e / trace, f / trace};
}

ConicCoefficients locus_conic(const QuadraticDistanceSum& q, double k) {
  return ConicCoefficients{q.m00, 2.0 * q.m01, q.m11, q.linear.x, q.linear.y, q.constant - k}.canonical();
}

ConicCoefficients locus_conic(const Triangle& tri, double k) {
  return locus_conic(squared_distance_sum(tri), k);
}

Point2 ConicGeometry::at(double t) const {
  const double ct = std::cos(rotation), st = std::sin(rotation);
  const double u = semi_major * std::cos(t), v = semi_minor * std::sin(t);
  return {center.x + ct * u - st * v, center.y + st * u + ct * v};
}

std::vector<Point2> ConicGeometry::sample(std::size_t count) const {
  std::vector<Point2> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(at(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(count)));
  return out;
}

const char* to_string(ConicGeometry::Class kind) {
  switch (kind) {
    case ConicGeometry::Class::ellipse: return "ellipse";
    case ConicGeometry::Class::circle: return "circle";
    case ConicGeometry::Class::point: return "point";
    case ConicGeometry::Class::empty: return "empty";
  }
  return "?";
}

ConicGeometry classify(const ConicCoefficients& conic, double eps) {
  if (!(conic.discriminant() < 0.0)) throw NotDefinite("conic discriminant is not negative");
  auto k = conic.canonical();
  if (k.a < 0.0) k = ConicCoefficients{-k.a, -k.b, -k.c, -k.d, -k.e, -k.f}.canonical();

  ConicGeometry g;
  const double det = 4.0 * k.a * k.c - k.b * k.b;
  g.center = {(k.b * k.e - 2.0 * k.c * k.d) / det, (k.b * k.d - 2.0 * k.a * k.e) / det};
  const double f_center = k.f + 0.5 * (k.d * g.center.x + k.e * g.center.y);

  if (f_center > eps) {
    g.kind = ConicGeometry::Class::empty;
    return g;
  }
  if (f_center >= -eps) {
    g.kind = ConicGeometry::Class::point;
    return g;
  }

  // Closed-form eigenvalues of [[A, B/2], [B/2, C]].
  const double mean = 0.5 * (k.a + k.c);
  const double radius = std::hypot(0.5 * (k.a - k.c), 0.5 * k.b);
  const double lambda_min = mean - radius;
  const double lambda_max = mean + radius;
  g.semi_major = std::sqrt(-f_center / lambda_min);
  g.semi_minor = std::sqrt(-f_center / lambda_max);

  if (g.semi_major - g.semi_minor <= 1e-9 * g.semi_major) {
    g.kind = ConicGeometry::Class::circle;
    g.rotation = 0.0;
    return g;
  }
  g.kind = ConicGeometry::Class::ellipse;
  // The major axis follows the eigenvector of the smaller eigenvalue.
  double angle = 0.5 * std::atan2(-k.b, k.c - k.a);
  if (angle < 0.0) angle += std::numbers::pi;
  if (angle >= std::numbers::pi) angle -= std::numbers::pi;
  g.rotation = angle;
  return g;
}

std::vector<Point2> intersect_line_conic(const ConicCoefficients& conic, const Line2& line,
                                         double tangent_tol) {
  const double len = norm(line.direction);
  if (!(len > 0.0)) throw DegenerateInput("line direction is zero");
  const Vec2 u = line.direction / len;
  const Point2 p = line.point;
  const auto k = conic.canonical();

  // Conic along P(t) = p + t u is qa t^2 + qb t + qc.
  const double qa = k.a * u.x * u.x + k.b * u.x * u.y + k.c * u.y * u.y;
  const double qb = 2.0 * k.a * p.x * u.x + k.b * (p.x * u.y + p.y * u.x) + 2.0 * k.c * p.y * u.y +
                    k.d * u.x + k.e * u.y;
  const double qc = k.evaluate(p);

  std::vector<Point2> out;
  if (std::abs(qa) <= 1e-15) {
    if (std::abs(qb) > 1e-15) out.push_back(p + (-qc / qb) * u);
    return out;
  }
  const double disc = qb * qb - 4.0 * qa * qc;
  if (std::abs(disc) <= tangent_tol) {
    out.push_back(p + (-qb / (2.0 * qa)) * u);
    return out;
  }
  if (disc < 0.0) return out;

  const double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
  double t1 = q / qa;
  double t2 = qc / q;
  if (t1 > t2) std::swap(t1, t2);
  out.push_back(p + t1 * u);
  out.push_back(p + t2 * u);
  return out;
}

}  // namespace locus
