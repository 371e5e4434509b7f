#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "locus/linear_locus.hpp"
#include "oracle.hpp"

using namespace locus;

namespace {

const std::vector<Point2> kRight{{0, 0}, {0, 3}, {4, 0}};
const double kSqrt3 = std::sqrt(3.0);

ConvexPolygon right_triangle() { return make_polygon(kRight); }

ConvexPolygon equilateral(double side, Point2 at = {}) {
  const std::vector<Point2> v{at, at + Point2{side, 0}, at + Point2{side / 2, side * kSqrt3 / 2}};
  return make_polygon(v);
}

}  // namespace

TEST_CASE("distance_sum_functional") {
  SUBCASE("right triangle is (2x + y + 12) / 5") {
    const auto f = distance_sum_functional(right_triangle());
    CHECK(f.gradient.x == doctest::Approx(0.4));
    CHECK(f.gradient.y == doctest::Approx(0.2));
    CHECK(f.constant == doctest::Approx(2.4));
    // Level lines are parallel to 2x + y = 0.
    CHECK(std::abs(cross(f.gradient, {2, 1})) < 1e-15);
    CHECK(f.value({1, 1}) == doctest::Approx(oracle::distance_sum(kRight, {1, 1})));
  }
  SUBCASE("equilateral is constant at the altitude") {
    const auto f = distance_sum_functional(equilateral(4, {-7, 3}));
    CHECK(norm(f.gradient) < 1e-12);
    CHECK(f.constant - (-7 * f.gradient.x + 3 * f.gradient.y) == doctest::Approx(2 * kSqrt3));
    CHECK(f.value({-5, 4}) == doctest::Approx(2 * kSqrt3));
  }
  SUBCASE("unit square") {
    const std::vector<Point2> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    const auto f = distance_sum_functional(make_polygon(sq));
    CHECK(norm(f.gradient) < 1e-15);
    CHECK(f.constant == doctest::Approx(2.0));
  }
}

TEST_CASE("value_range") {
  const auto t = right_triangle();
  const auto r = value_range(t);
  // V at a vertex is the distance to the one side not through it:
  // (0,0) -> 12/5, (4,0) -> 4, (0,3) -> 3.
  CHECK(oracle::distance_sum(kRight, {0, 0}) == doctest::Approx(12.0 / 5.0));
  CHECK(r.min == doctest::Approx(12.0 / 5.0).epsilon(1e-14));
  CHECK(r.max == doctest::Approx(4.0).epsilon(1e-14));

  const auto f = distance_sum_functional(t);
  const auto tri = Triangle::make({0, 0}, {0, 3}, {4, 0});
  for (std::size_t i = 0; i < 3; ++i) CHECK(f.value(tri.vertex(i + 2)) == doctest::Approx(tri.altitude(i)));

  const auto e = value_range(equilateral(4));
  CHECK(e.min == doctest::Approx(2 * kSqrt3));
  CHECK(e.max == doctest::Approx(2 * kSqrt3));
}

TEST_CASE("level_segment") {
  const auto t = right_triangle();
  SUBCASE("leg sum 3.16743") {
    const auto h = level_segment(t, 3.16743);
    REQUIRE(h.kind == Habitat::Kind::segment);
    CHECK(h.first.x == doctest::Approx(1.918575).epsilon(1e-12));
    CHECK(std::abs(h.first.y) < 1e-12);
    CHECK(h.second.x == doctest::Approx(0.66972).epsilon(1e-12));
    CHECK(h.second.y == doctest::Approx(2.49771).epsilon(1e-12));
    CHECK(std::abs(cross(h.second - h.first, {1, -2})) < 1e-12);
  }
  SUBCASE("outside the range") {
    CHECK(level_segment(t, 2.3).kind == Habitat::Kind::empty);
    CHECK(level_segment(t, 4.1).kind == Habitat::Kind::empty);
  }
  SUBCASE("range ends snap to the extreme vertex") {
    const auto lo = level_segment(t, 12.0 / 5.0 - 1e-10);
    REQUIRE(lo.kind == Habitat::Kind::point);
    CHECK(distance(lo.first, {0, 0}) < 1e-9);
    const auto hi = level_segment(t, 4.0);
    REQUIRE(hi.kind == Habitat::Kind::point);
    CHECK(distance(hi.first, {4, 0}) < 1e-9);
  }
  SUBCASE("extreme level along an edge is that edge") {
    // Isosceles with a 120 degree apex: V is smallest along the base.
    const std::vector<Point2> v{{-kSqrt3, 0}, {kSqrt3, 0}, {0, 1}};
    const auto iso = make_polygon(v);
    const auto r = value_range(iso);
    const auto h = level_segment(iso, r.max);
    CHECK(h.kind == Habitat::Kind::segment);
  }
  SUBCASE("equilateral") {
    CHECK(level_segment(equilateral(4), 2 * kSqrt3).kind == Habitat::Kind::everywhere);
    CHECK(level_segment(equilateral(4), 3.0).kind == Habitat::Kind::empty);
  }
}

TEST_CASE("parallel_decomposition") {
  const auto t = right_triangle();
  const auto slices = parallel_decomposition(t, 3);
  REQUIRE(slices.size() == 3);
  // Mid-levels of [12/5, 4].
  const double expected[] = {8.0 / 3.0, 16.0 / 5.0, 56.0 / 15.0};
  for (int i = 0; i < 3; ++i) {
    CHECK(slices[i].level == doctest::Approx(expected[i]).epsilon(1e-14));
    REQUIRE(slices[i].kind == Habitat::Kind::segment);
  }
  for (const auto& a : slices)
    for (const auto& b : slices) {
      const Vec2 da = (a.second - a.first) / distance(a.first, a.second);
      const Vec2 db = (b.second - b.first) / distance(b.first, b.second);
      CHECK(std::abs(cross(da, db)) <= 1e-9);
    }

  const auto eq = parallel_decomposition(equilateral(2), 5);
  REQUIRE(eq.size() == 1);
  CHECK(eq[0].kind == Habitat::Kind::everywhere);

  const auto one = parallel_decomposition(t, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].level == doctest::Approx(3.2));

  CHECK_THROWS_AS(parallel_decomposition(t, 0), DegenerateInput);
}

TEST_CASE("infer_constancy") {
  SUBCASE("equilateral") {
    const auto e = equilateral(4, {10, -2});
    const auto v = infer_constancy(e, {Point2{12, -1.5}, Point2{11, -1}, Point2{12, 0}});
    CHECK(v.constant);
    CHECK(v.value == doctest::Approx(2 * kSqrt3));
  }
  SUBCASE("right triangle: (2x + y + 12) / 5 = 3, 3.3, 2.9") {
    const auto v = infer_constancy(right_triangle(), {Point2{1, 1}, Point2{2, 0.5}, Point2{1, 0.5}});
    CHECK_FALSE(v.constant);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(infer_constancy(right_triangle(), {Point2{1, 1}, Point2{1.5, 1}, Point2{2, 1}}),
                    CollinearSamples);
    CHECK_THROWS_AS(infer_constancy(right_triangle(), {Point2{1, 1}, Point2{5, 5}, Point2{1, 0.5}}),
                    PointOutside);
  }
}

TEST_CASE("reconstruct_equilateral_from_base") {
  SUBCASE("three reachable points on a base of length 4") {
    const auto t = reconstruct_equilateral_from_base({-2, 0}, {2, 0}, {Point2{-2, 0}, Point2{0.5, 1.0 / 3.0}, Point2{2, 0}});
    CHECK(distance(t.vertex(2), {0, 2 * kSqrt3}) < 1e-9);
    CHECK(contains(t, {0.5, 1.0 / 3.0}) == Containment::inside);
  }
  SUBCASE("unit base, witnesses above or below") {
    const auto up = reconstruct_equilateral_from_base({0, 0}, {1, 0}, {Point2{0.4, 0.2}, Point2{0.5, 0.3}, Point2{0.6, 0.2}});
    CHECK(distance(up.vertex(2), {0.5, kSqrt3 / 2}) < 1e-12);
    const auto down =
        reconstruct_equilateral_from_base({0, 0}, {1, 0}, {Point2{0.4, -0.2}, Point2{0.5, -0.3}, Point2{0.6, -0.2}});
    bool found = false;
    for (const auto& v : down.polygon().vertices()) found |= distance(v, {0.5, -kSqrt3 / 2}) < 1e-12;
    CHECK(found);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(reconstruct_equilateral_from_base({0, 0}, {1, 0}, {Point2{0.2, 0.1}, Point2{0.5, 0.1}, Point2{0.8, 0.1}}),
                    CollinearSamples);
    CHECK_THROWS_AS(reconstruct_equilateral_from_base({0, 0}, {1, 0}, {Point2{0.4, 0.2}, Point2{0.5, 5}, Point2{0.6, 0.2}}),
                    WitnessOutside);
    CHECK_THROWS_AS(reconstruct_equilateral_from_base({0, 0}, {0, 0}, {Point2{0.4, 0.2}, Point2{0.5, 5}, Point2{0.6, 0.2}}),
                    DegenerateInput);
  }
}

TEST_CASE("property: functional equals the direct distance sum inside") {
  oracle::Generator gen(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto v = gen.convex_polygon(gen.integer(3, 8));
    const auto poly = make_polygon(v);
    const auto f = distance_sum_functional(poly);

    Vec2 normals;
    for (const auto& s : poly.sides()) normals = normals + s.normal();
    CHECK(norm(f.gradient + normals) == 0.0);

    for (int i = 0; i < 10; ++i) {
      const auto p = gen.interior_point(v);
      const double direct = oracle::distance_sum(v, p);
      CHECK(std::abs(f.value(p) - direct) <= 1e-12 * direct);
    }

    const auto r = value_range(poly);
    double lo = 1e300, hi = -1e300;
    for (const auto& p : v) {
      lo = std::min(lo, oracle::distance_sum(v, p));
      hi = std::max(hi, oracle::distance_sum(v, p));
    }
    CHECK(r.min == doctest::Approx(lo).epsilon(1e-12));
    CHECK(r.max == doctest::Approx(hi).epsilon(1e-12));

    for (double c : {r.min - 1e-3, r.min + 0.3 * (r.max - r.min), r.max + 1e-3}) {
      const auto h = level_segment(poly, c);
      const bool in_range = c >= r.min - kEpsVal && c <= r.max + kEpsVal;
      CHECK((h.kind != Habitat::Kind::empty) == in_range);
      if (h.kind == Habitat::Kind::segment) {
        CHECK(std::abs(f.value(h.first) - c) <= 1e-9);
        CHECK(std::abs(f.value(h.second) - c) <= 1e-9);
      }
    }
  }
}

TEST_CASE("property: triangles have a zero gradient iff equilateral") {
  oracle::Generator gen(22);
  for (int trial = 0; trial < 300; ++trial) {
    const bool eq = trial % 3 == 0;
    const auto v = eq ? gen.equilateral(gen.uniform(0.5, 5)) : gen.triangle();
    const auto t = Triangle::make(v[0], v[1], v[2]);
    const auto f = distance_sum_functional(t);
    CHECK((norm(f.gradient) <= 1e-9) == is_equilateral(t));

    const std::array<Point2, 3> samples{gen.interior_point(v), gen.interior_point(v), gen.interior_point(v)};
    if (0.5 * std::abs(cross(samples[1] - samples[0], samples[2] - samples[0])) <= kEpsGeom) continue;
    const auto verdict = infer_constancy(t, samples);
    if (verdict.constant) CHECK(is_equilateral(t, 1e-6));
    CHECK(verdict.constant == eq);
  }
}
