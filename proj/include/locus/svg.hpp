#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locus/geometry.hpp"

namespace locus {

/// Static SVG figure in world coordinates. The y axis points up; the view
/// box is the union of everything added, grown by `margin` on each side.
class SvgFigure {
 public:
  SvgFigure(int size, double margin) : size_(size), margin_(margin) {}

  void polygon(std::span<const Point2> pts, std::string_view style);
  void polyline(std::span<const Point2> pts, std::string_view style);
  void segment(Point2 a, Point2 b, std::string_view style);
  void dot(Point2 p, std::string_view fill, std::string_view label = {});

  std::string render() const;

 private:
  struct Item {
    enum class Kind { polygon, polyline, dot } kind;
    std::vector<Point2> pts;
    std::string style;
    std::string label;
  };

  void include(Point2 p);

  int size_;
  double margin_;
  bool have_bounds_ = false;
  Box bounds_;
  std::vector<Item> items_;
};

}  // namespace locus
