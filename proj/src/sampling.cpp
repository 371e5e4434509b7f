#include "locus/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "locus/format.hpp"

namespace locus {

double FieldSample::interpolate(Point2 p) const {
  const double fx = (p.x - origin.x) / cell;
  const double fy = (p.y - origin.y) / cell;
  const double max_x = static_cast<double>(cols - 1), max_y = static_cast<double>(rows - 1);
  if (!(fx >= 0.0 && fy >= 0.0 && fx <= max_x && fy <= max_y)) throw PointOutsideGrid("query outside sampled grid");

  const auto col = std::min(static_cast<std::size_t>(fx), cols - 2);
  const auto row = std::min(static_cast<std::size_t>(fy), rows - 2);
  const double tx = fx - static_cast<double>(col), ty = fy - static_cast<double>(row);
  const double bottom = (1.0 - tx) * at(row, col) + tx * at(row, col + 1);
  const double top = (1.0 - tx) * at(row + 1, col) + tx * at(row + 1, col + 1);
  return (1.0 - ty) * bottom + ty * top;
}

FieldSample make_grid(const Box& extent, int resolution) {
  if (resolution < 8) throw DegenerateInput("grid resolution must be at least 8");
  const double span = std::max(extent.width(), extent.height());
  if (!(span > 0.0) || !std::isfinite(span)) throw DegenerateInput("grid extent is empty");

  FieldSample f;
  f.cell = span / resolution;
  f.origin = {extent.min.x - f.cell, extent.min.y - f.cell};
  f.cols = static_cast<std::size_t>(std::ceil(extent.width() / f.cell)) + 3;
  f.rows = static_cast<std::size_t>(std::ceil(extent.height() / f.cell)) + 3;
  f.values.assign(f.rows * f.cols, 0.0);
  return f;
}

namespace {

// Point-to-line distance from the raw vertex pair, independent of the
// oriented-line machinery the closed forms are built on.
double edge_distance(Point2 a, Point2 b, Point2 p) {
  return std::abs(cross(b - a, p - a)) / distance(a, b);
}

template <typename NodeFn>
void fill(FieldSample& f, NodeFn node_value, bool parallel) {
  const auto rows = static_cast<std::ptrdiff_t>(f.rows);
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::ptrdiff_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < f.cols; ++c)
        f.values[static_cast<std::size_t>(r) * f.cols + c] = node_value(f.node(static_cast<std::size_t>(r), c));
  } else {
    for (std::ptrdiff_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < f.cols; ++c)
        f.values[static_cast<std::size_t>(r) * f.cols + c] = node_value(f.node(static_cast<std::size_t>(r), c));
  }
}

FieldSample linear_field(const ConvexPolygon& poly, int resolution, std::optional<Box> extent,
                         bool parallel) {
  auto f = make_grid(extent.value_or(poly.bounds()), resolution);
  const auto v = poly.vertices();
  fill(
      f,
      [v](Point2 p) {
        double sum = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) sum += edge_distance(v[i], v[(i + 1) % v.size()], p);
        return sum;
      },
      parallel);
  return f;
}

FieldSample quadratic_field(const Triangle& tri, int resolution, std::optional<Box> extent,
                            bool parallel) {
  auto f = make_grid(extent.value_or(tri.polygon().bounds()), resolution);
  const Point2 a = tri.vertex(0), b = tri.vertex(1), c = tri.vertex(2);
  fill(
      f,
      [a, b, c](Point2 p) {
        const double d0 = edge_distance(a, b, p);
        const double d1 = edge_distance(b, c, p);
        const double d2 = edge_distance(c, a, p);
        return d0 * d0 + d1 * d1 + d2 * d2;
      },
      parallel);
  return f;
}

}  // namespace

FieldSample sample_linear_field(const ConvexPolygon& poly, int resolution, std::optional<Box> extent) {
  return linear_field(poly, resolution, extent, true);
}

FieldSample sample_linear_field_serial(const ConvexPolygon& poly, int resolution, std::optional<Box> extent) {
  return linear_field(poly, resolution, extent, false);
}

FieldSample sample_quadratic_field(const Triangle& tri, int resolution, std::optional<Box> extent) {
  return quadratic_field(tri, resolution, extent, true);
}

FieldSample sample_quadratic_field_serial(const Triangle& tri, int resolution, std::optional<Box> extent) {
  return quadratic_field(tri, resolution, extent, false);
}

std::vector<Point2> interior_probes(const ConvexPolygon& poly, Point2 a, Point2 b, std::size_t count,
                                    double clearance) {
  std::vector<Point2> out;
  for (std::size_t i = 0; i < count; ++i) {
    const double t = count == 1 ? 0.5 : static_cast<double>(i) / static_cast<double>(count - 1);
    const Point2 p = a + t * (b - a);
    bool clear = true;
    for (const auto& s : poly.sides()) clear &= s.signed_distance(p) <= -clearance;
    if (clear) out.push_back(p);
  }
  return out;
}

double contour_residual(const FieldSample& field, std::span<const Point2> predicted, double level) {
  double worst = 0.0;
  for (const auto& p : predicted) worst = std::max(worst, std::abs(field.interpolate(p) - level));
  return worst;
}

void write_csv(std::ostream& os, const FieldSample& field) {
  os << "origin_x,origin_y,cell,rows,cols\n";
  os << format_number(field.origin.x) << ',' << format_number(field.origin.y) << ','
     << format_number(field.cell) << ',' << field.rows << ',' << field.cols << '\n';
  for (std::size_t r = 0; r < field.rows; ++r) {
    for (std::size_t c = 0; c < field.cols; ++c) {
      if (c) os << ',';
      os << format_number(field.at(r, c));
    }
    os << '\n';
  }
}

}  // namespace locus
