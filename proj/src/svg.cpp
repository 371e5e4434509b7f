#include "locus/svg.hpp"

#include <algorithm>
#include <sstream>

#include "locus/format.hpp"

namespace locus {

namespace {

std::string escape(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

void SvgFigure::include(Point2 p) {
  if (!have_bounds_) {
    bounds_ = {p, p};
    have_bounds_ = true;
  } else {
    bounds_ = bounds_.united({p, p});
  }
}

void SvgFigure::polygon(std::span<const Point2> pts, std::string_view style) {
  for (const auto& p : pts) include(p);
  items_.push_back({Item::Kind::polygon, {pts.begin(), pts.end()}, std::string(style), {}});
}

void SvgFigure::polyline(std::span<const Point2> pts, std::string_view style) {
  for (const auto& p : pts) include(p);
  items_.push_back({Item::Kind::polyline, {pts.begin(), pts.end()}, std::string(style), {}});
}

void SvgFigure::segment(Point2 a, Point2 b, std::string_view style) {
  const Point2 pts[] = {a, b};
  polyline(pts, style);
}

void SvgFigure::dot(Point2 p, std::string_view fill, std::string_view label) {
  include(p);
  items_.push_back({Item::Kind::dot, {p}, std::string(fill), std::string(label)});
}

std::string SvgFigure::render() const {
  Box box = have_bounds_ ? bounds_ : Box{{0, 0}, {1, 1}};
  double extent = std::max(box.width(), box.height());
  if (!(extent > 0.0)) extent = 1.0;
  const double pad = margin_ * extent;
  box.min = box.min - Point2{pad, pad};
  box.max = box.max + Point2{pad, pad};

  const double scale = size_ / std::max(box.width(), box.height());
  const double width = box.width() * scale, height = box.height() * scale;
  auto sx = [&](Point2 p) { return format_number((p.x - box.min.x) * scale, 8); };
  auto sy = [&](Point2 p) { return format_number((box.max.y - p.y) * scale, 8); };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_number(width, 8) << "\" height=\""
     << format_number(height, 8) << "\" viewBox=\"0 0 " << format_number(width, 8) << ' '
     << format_number(height, 8) << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (const auto& item : items_) {
    switch (item.kind) {
      case Item::Kind::polygon:
      case Item::Kind::polyline: {
        os << (item.kind == Item::Kind::polygon ? "<polygon" : "<polyline") << " points=\"";
        for (std::size_t i = 0; i < item.pts.size(); ++i)
          os << (i ? " " : "") << sx(item.pts[i]) << ',' << sy(item.pts[i]);
        os << "\" " << item.style << "/>\n";
        break;
      }
      case Item::Kind::dot: {
        const auto& p = item.pts.front();
        os << "<circle cx=\"" << sx(p) << "\" cy=\"" << sy(p) << "\" r=\"3\" fill=\"" << escape(item.style)
           << "\"/>\n";
        if (!item.label.empty())
          os << "<text x=\"" << sx(p) << "\" y=\"" << sy(p) << "\" dx=\"5\" dy=\"-5\" font-size=\"12\">"
             << escape(item.label) << "</text>\n";
        break;
      }
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace locus
