#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "locus/geometry.hpp"
#include "locus/inverse_synthesis.hpp"

namespace locus {

struct RenderOptions {
  int size = 640;        // pixels along the longer side
  double margin = 0.1;   // fraction of the geometry extent
  bool decorate = false;
};

/// Flat key-value scene description:
///
///   # comment
///   vertex = 0 0
///   vertex = 4 0
///   vertex = 0 3
///   leg_sum = 3.16743
///   squares_sum = 5
///   ellipse = 4 2
///   size = 640
///   margin = 0.1
///   decorate = true
struct SceneFile {
  std::vector<Point2> vertices;
  std::optional<double> leg_sum;
  std::optional<double> squares_sum;
  std::optional<EllipseCanonical> ellipse;
  RenderOptions render;

  bool has_polygon() const { return !vertices.empty(); }
};

/// Throws InvalidScene with the offending line number.
SceneFile parse_scene(std::istream& in);

}  // namespace locus
