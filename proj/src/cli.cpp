#include "locus/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "locus/format.hpp"
#include "locus/inverse_synthesis.hpp"
#include "locus/linear_locus.hpp"
#include "locus/quadratic_locus.hpp"
#include "locus/sampling.hpp"
#include "locus/svg.hpp"

namespace locus::cli {

namespace {

constexpr std::size_t kCurveSamples = 256;
constexpr std::size_t kContourSamples = 64;
constexpr double kContourTolerance = 1e-3;
constexpr double kFieldTolerance = 1e-12;

constexpr std::string_view kPolygonStyle = "fill=\"#f4f4f4\" stroke=\"black\" stroke-width=\"1.5\"";
constexpr std::string_view kHabitatStyle = "fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2.5\"";
constexpr std::string_view kLevelStyle = "fill=\"none\" stroke=\"#7f8c8d\" stroke-width=\"1\"";
constexpr std::string_view kCurveStyle = "fill=\"none\" stroke=\"#2c6fbb\" stroke-width=\"2\"";
constexpr std::string_view kLegStyle = "fill=\"none\" stroke=\"#27ae60\" stroke-width=\"1\" stroke-dasharray=\"4 3\"";

std::string pt(Point2 p) { return format_number(p.x) + ' ' + format_number(p.y); }

ConvexPolygon scene_polygon(const SceneFile& scene) {
  if (!scene.has_polygon()) throw InvalidScene("scene has no vertices");
  return make_polygon(scene.vertices);
}

Triangle scene_triangle(const SceneFile& scene) {
  auto poly = scene_polygon(scene);
  if (poly.size() != 3) throw InvalidScene("this command needs a triangle (exactly 3 vertices)");
  return Triangle::from_polygon(std::move(poly));
}

void print_polygon(std::ostream& out, const ConvexPolygon& poly) {
  out << "vertices: " << poly.size() << '\n';
  for (const auto& v : poly.vertices()) out << "vertex: " << pt(v) << '\n';
}

void print_conic(std::ostream& out, const ConicCoefficients& conic, const ConicGeometry& geom) {
  out << "conic:";
  for (double c : conic.as_array()) out << ' ' << format_number(c);
  out << '\n';
  out << "discriminant: " << format_number(conic.discriminant()) << '\n';
  out << "class: " << to_string(geom.kind) << '\n';
  out << "center: " << pt(geom.center) << '\n';
  if (geom.kind == ConicGeometry::Class::ellipse || geom.kind == ConicGeometry::Class::circle) {
    out << "semi_major: " << format_number(geom.semi_major) << '\n';
    out << "semi_minor: " << format_number(geom.semi_minor) << '\n';
    out << "rotation: " << format_number(geom.rotation) << '\n';
  }
}

// Perpendicular legs from `p` to each side line.
void draw_legs(SvgFigure& fig, const ConvexPolygon& poly, Point2 p) {
  for (const auto& s : poly.sides()) {
    const Point2 foot = p - s.signed_distance(p) * s.normal();
    fig.segment(p, foot, kLegStyle);
    fig.dot(foot, "#27ae60");
  }
  fig.dot(p, "black", "P");
}

void draw_curve(SvgFigure& fig, const ConicGeometry& geom) {
  if (geom.kind != ConicGeometry::Class::ellipse && geom.kind != ConicGeometry::Class::circle) return;
  const auto pts = geom.sample(kCurveSamples);
  fig.polygon(pts, kCurveStyle);
}

void write_svg(const Options& opts, const SvgFigure& fig) {
  if (!opts.svg_path) return;
  std::ofstream f(*opts.svg_path, std::ios::binary);
  if (!f) throw InvalidScene("cannot open SVG output " + *opts.svg_path);
  f << fig.render();
}

Line2 level_line(const AffineDistanceSum& v, double level) {
  const double g2 = dot(v.gradient, v.gradient);
  return {v.gradient * ((level - v.constant) / g2), perp(v.gradient)};
}

bool check(std::ostream& out, std::string_view name, double value, double limit) {
  const bool ok = value <= limit;
  out << "check " << name << ": value " << format_number(value) << " limit " << format_number(limit)
      << (ok ? " pass" : " fail") << '\n';
  return ok;
}

double linear_field_error(const ConvexPolygon& poly, const FieldSample& field) {
  const auto v = distance_sum_functional(poly);
  double worst = 0.0;
  for (std::size_t r = 0; r < field.rows; ++r)
    for (std::size_t c = 0; c < field.cols; ++c) {
      const Point2 p = field.node(r, c);
      if (contains(poly, p) != Containment::inside) continue;
      const double expected = v.value(p);
      worst = std::max(worst, std::abs(field.at(r, c) - expected) / std::max(1.0, std::abs(expected)));
    }
  return worst;
}

double quadratic_field_error(const QuadraticDistanceSum& q, const FieldSample& field) {
  double worst = 0.0;
  for (std::size_t r = 0; r < field.rows; ++r)
    for (std::size_t c = 0; c < field.cols; ++c) {
      const double expected = q.value(field.node(r, c));
      worst = std::max(worst, std::abs(field.at(r, c) - expected) / std::max(1.0, std::abs(expected)));
    }
  return worst;
}

Box bounds_of(std::span<const Point2> pts) {
  Box b{pts.front(), pts.front()};
  for (const auto& p : pts) b = b.united({p, p});
  return b;
}

// Checks the closed-form locus {Q = k} of `tri` against a sampled field.
bool verify_quadratic(std::ostream& out, const Triangle& tri, double k, const Options& opts) {
  const auto q = squared_distance_sum(tri);
  auto conic = locus_conic(q, k);
  conic.a += opts.perturb;
  const auto geom = classify(conic);
  out << "class: " << to_string(geom.kind) << '\n';

  std::vector<Point2> contour;
  if (geom.kind == ConicGeometry::Class::ellipse || geom.kind == ConicGeometry::Class::circle)
    contour = geom.sample(kContourSamples);
  else if (geom.kind == ConicGeometry::Class::point)
    contour.push_back(geom.center);

  Box extent = tri.polygon().bounds();
  if (!contour.empty()) extent = extent.united(bounds_of(contour));
  const auto field = sample_quadratic_field(tri, opts.resolution, extent);

  bool ok = check(out, "quadratic_field", quadratic_field_error(q, field), kFieldTolerance);
  if (!contour.empty()) ok &= check(out, "ellipse_contour", contour_residual(field, contour, k), kContourTolerance);
  return ok;
}

}  // namespace

int cmd_habitat(const SceneFile& scene, const Options& opts, std::ostream& out) {
  const auto poly = scene_polygon(scene);
  if (!scene.leg_sum) throw InvalidScene("habitat needs leg_sum");
  const double level = *scene.leg_sum;
  const auto v = distance_sum_functional(poly);
  const auto range = value_range(poly);
  const auto h = level_segment(poly, level);

  out << "task: habitat\n";
  print_polygon(out, poly);
  out << "functional: gradient " << pt(v.gradient) << " constant " << format_number(v.constant) << '\n';
  out << "value_range: " << format_number(range.min) << ' ' << format_number(range.max) << '\n';
  out << "leg_sum: " << format_number(level) << '\n';
  out << "habitat: " << to_string(h.kind) << '\n';
  if (h.kind == Habitat::Kind::segment) {
    out << "endpoint: " << pt(h.first) << '\n';
    out << "endpoint: " << pt(h.second) << '\n';
  } else if (h.kind == Habitat::Kind::point) {
    out << "point: " << pt(h.first) << '\n';
  }

  std::vector<Habitat> slices;
  if (opts.levels > 0) {
    slices = parallel_decomposition(poly, opts.levels);
    for (const auto& s : slices) {
      out << "level: " << format_number(s.level) << ' ' << to_string(s.kind);
      if (s.kind == Habitat::Kind::segment || s.kind == Habitat::Kind::point)
        out << ' ' << pt(s.first) << ' ' << pt(s.second);
      out << '\n';
    }
  }

  SvgFigure fig(scene.render.size, scene.render.margin);
  fig.polygon(poly.vertices(), h.kind == Habitat::Kind::everywhere
                                   ? "fill=\"#f5b7b1\" stroke=\"black\" stroke-width=\"1.5\""
                                   : kPolygonStyle);
  for (const auto& s : slices)
    if (s.kind == Habitat::Kind::segment) fig.segment(s.first, s.second, kLevelStyle);
  if (h.kind == Habitat::Kind::segment) fig.segment(h.first, h.second, kHabitatStyle);
  if (h.kind == Habitat::Kind::point) fig.dot(h.first, "#c0392b");
  if (opts.decorate || scene.render.decorate) {
    Point2 head;
    if (h.kind == Habitat::Kind::segment || h.kind == Habitat::Kind::point) {
      head = 0.5 * (h.first + h.second);
    } else {
      for (const auto& p : poly.vertices()) head = head + p;
      head = head / static_cast<double>(poly.size());
    }
    draw_legs(fig, poly, head);
  }
  write_svg(opts, fig);
  return kExitOk;
}

int cmd_locus(const SceneFile& scene, const Options& opts, std::ostream& out) {
  const auto tri = scene_triangle(scene);
  if (!scene.squares_sum) throw InvalidScene("locus needs squares_sum");
  const double k = *scene.squares_sum;
  const auto q = squared_distance_sum(tri);
  const auto conic = locus_conic(q, k);
  const auto geom = classify(conic);

  out << "task: locus\n";
  print_polygon(out, tri);
  out << "squares_sum: " << format_number(k) << '\n';
  out << "minimum: " << format_number(q.minimum()) << " at " << pt(q.minimizer()) << '\n';
  print_conic(out, conic, geom);

  SvgFigure fig(scene.render.size, scene.render.margin);
  fig.polygon(tri.polygon().vertices(), kPolygonStyle);
  draw_curve(fig, geom);
  if (geom.kind == ConicGeometry::Class::point) fig.dot(geom.center, "#2c6fbb");

  if (scene.leg_sum) {
    const double level = *scene.leg_sum;
    const auto v = distance_sum_functional(tri);
    out << "leg_sum: " << format_number(level) << '\n';
    const auto h = level_segment(tri, level);
    out << "habitat: " << to_string(h.kind) << '\n';
    if (h.kind == Habitat::Kind::segment) fig.segment(h.first, h.second, kHabitatStyle);
    if (v.is_constant()) {
      out << "meeting_points: none (constant distance sum)\n";
    } else {
      const auto meets = intersect_line_conic(conic, level_line(v, level));
      out << "meeting_points: " << meets.size() << '\n';
      const char* labels[] = {"L", "J"};
      for (std::size_t i = 0; i < meets.size(); ++i) {
        const auto where = contains(tri, meets[i]);
        out << "meeting: " << pt(meets[i]) << ' '
            << (where == Containment::inside ? "inside" : where == Containment::boundary ? "boundary" : "outside")
            << '\n';
        fig.dot(meets[i], "#8e44ad", labels[i % 2]);
      }
    }
  }
  if ((opts.decorate || scene.render.decorate) && geom.kind != ConicGeometry::Class::empty)
    draw_legs(fig, tri, geom.kind == ConicGeometry::Class::point ? geom.center : geom.at(std::numbers::pi / 3.0));
  write_svg(opts, fig);
  return kExitOk;
}

int cmd_inverse(const SceneFile& scene, const Options& opts, std::ostream& out) {
  if (!scene.ellipse) throw InvalidScene("inverse needs ellipse");
  const auto e = *scene.ellipse;
  const auto [params, tri] = triangle_for_ellipse(e);
  const auto conic = locus_conic(tri, params.k);
  const auto geom = classify(conic);

  out << "task: inverse\n";
  out << "ellipse: " << format_number(e.alpha2) << ' ' << format_number(e.beta2) << '\n';
  out << "a: " << format_number(params.a) << '\n';
  out << "b: " << format_number(params.b) << '\n';
  out << "k: " << format_number(params.k) << '\n';
  out << "vertical_shift: " << format_number(params.vertical_shift) << '\n';
  print_polygon(out, tri);
  out << "equilateral: " << (is_circle_case(tri) ? "yes" : "no") << '\n';
  print_conic(out, conic, geom);

  SvgFigure fig(scene.render.size, scene.render.margin);
  fig.polygon(tri.polygon().vertices(), kPolygonStyle);
  draw_curve(fig, geom);
  fig.dot(geom.center, "black", "O");
  if (opts.decorate || scene.render.decorate) draw_legs(fig, tri, geom.at(std::numbers::pi / 4.0));
  write_svg(opts, fig);
  return kExitOk;
}

int cmd_verify(const SceneFile& scene, const Options& opts, std::ostream& out) {
  out << "task: verify\n";
  out << "resolution: " << opts.resolution << '\n';
  bool ok = true;
  bool ran = false;

  if (scene.has_polygon()) {
    const auto poly = scene_polygon(scene);
    const auto field = sample_linear_field(poly, opts.resolution);
    ok &= check(out, "linear_field", linear_field_error(poly, field), kFieldTolerance);
    ran = true;

    if (scene.leg_sum) {
      const auto h = level_segment(poly, *scene.leg_sum);
      out << "habitat: " << to_string(h.kind) << '\n';
      if (h.kind == Habitat::Kind::segment || h.kind == Habitat::Kind::point) {
        const auto probes = interior_probes(poly, h.first, h.second, kContourSamples, 2.0 * field.cell);
        out << "probes: " << probes.size() << '\n';
        if (!probes.empty())
          ok &= check(out, "level_contour", contour_residual(field, probes, *scene.leg_sum), kContourTolerance);
      }
    }
    if (scene.squares_sum) {
      if (poly.size() != 3) throw InvalidScene("squares_sum needs a triangle");
      ok &= verify_quadratic(out, Triangle::from_polygon(poly), *scene.squares_sum, opts);
    }
  }
  if (scene.ellipse) {
    const auto [params, tri] = triangle_for_ellipse(*scene.ellipse);
    out << "k: " << format_number(params.k) << '\n';
    ok &= verify_quadratic(out, tri, params.k, opts);
    ran = true;
  }
  if (!ran) throw InvalidScene("nothing to verify");

  out << "verify: " << (ok ? "pass" : "fail") << '\n';
  return ok ? kExitOk : kExitVerifyFailed;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance-sum and squared-distance-sum loci of triangles and convex polygons"};
  app.require_subcommand(1);

  std::string scene_path;
  Options opts;
  std::string svg_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--scene", scene_path, "Scene file, or - for stdin")->required();
    sub->add_option("--svg", svg_path, "Write an SVG figure");
    sub->add_option("--resolution", opts.resolution, "Oracle grid resolution")->check(CLI::Range(8, 1 << 14));
    sub->add_flag("--decorate", opts.decorate, "Draw perpendicular legs");
  };
  auto* habitat = app.add_subcommand("habitat", "Level segment of the distance sum");
  auto* locus = app.add_subcommand("locus", "Squared-distance-sum conic");
  auto* inverse = app.add_subcommand("inverse", "Triangle realizing a canonical ellipse");
  auto* verify = app.add_subcommand("verify", "Check closed forms against sampled fields");
  for (auto* sub : {habitat, locus, inverse, verify}) add_common(sub);
  habitat->add_option("--levels", opts.levels, "Also slice into this many parallel segments")
      ->check(CLI::Range(1, 10000));
  verify->add_option("--perturb", opts.perturb, "Add this to the conic A coefficient");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }
  if (!svg_path.empty()) opts.svg_path = svg_path;

  try {
    SceneFile scene;
    if (scene_path == "-") {
      scene = parse_scene(in);
    } else {
      std::ifstream f(scene_path);
      if (!f) throw InvalidScene("cannot open scene " + scene_path);
      scene = parse_scene(f);
    }

    std::ostringstream report;
    int code = kExitOk;
    if (habitat->parsed()) code = cmd_habitat(scene, opts, report);
    if (locus->parsed()) code = cmd_locus(scene, opts, report);
    if (inverse->parsed()) code = cmd_inverse(scene, opts, report);
    if (verify->parsed()) code = cmd_verify(scene, opts, report);
    out << report.str();
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace locus::cli
