#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "locus/geometry.hpp"

namespace locus {

/// Values of a scalar field on a regular grid. Node (row, col) sits at
/// origin + (col * cell, row * cell); values are row-major.
struct FieldSample {
  Point2 origin;
  double cell = 0.0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  Point2 node(std::size_t row, std::size_t col) const {
    return {origin.x + static_cast<double>(col) * cell, origin.y + static_cast<double>(row) * cell};
  }
  double at(std::size_t row, std::size_t col) const { return values[row * cols + col]; }

  /// Bilinear interpolation; throws PointOutsideGrid.
  double interpolate(Point2 p) const;
};

/// Grid spanning `extent` expanded by one cell on every side, with
/// `resolution` cells along the longer side of `extent`.
FieldSample make_grid(const Box& extent, int resolution);

/// Sum of unsigned side distances at every node, computed directly from
/// the vertex coordinates. Rows are sampled in parallel when OpenMP is on.
FieldSample sample_linear_field(const ConvexPolygon& poly, int resolution,
                                std::optional<Box> extent = std::nullopt);

/// Sum of squared side distances at every node. `extent` defaults to the
/// triangle bounds; pass the locus bounds when checking a contour.
FieldSample sample_quadratic_field(const Triangle& tri, int resolution,
                                   std::optional<Box> extent = std::nullopt);

// Serial reference kernels; results are bit-identical to the parallel ones.
FieldSample sample_linear_field_serial(const ConvexPolygon& poly, int resolution,
                                       std::optional<Box> extent = std::nullopt);
FieldSample sample_quadratic_field_serial(const Triangle& tri, int resolution,
                                          std::optional<Box> extent = std::nullopt);

/// `count` evenly spaced points of segment a-b at least `clearance` inside
/// every side of `poly`. The unsigned distance sum has a kink on the
/// boundary, so bilinear probes there carry first-order error.
std::vector<Point2> interior_probes(const ConvexPolygon& poly, Point2 a, Point2 b, std::size_t count,
                                    double clearance);

/// max |interpolated field - level| over `predicted`.
double contour_residual(const FieldSample& field, std::span<const Point2> predicted, double level);

/// Header line "origin_x,origin_y,cell,rows,cols", one data line with those
/// numbers, then one line per grid row.
void write_csv(std::ostream& os, const FieldSample& field);

}  // namespace locus
