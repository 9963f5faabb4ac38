#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "cyclogon/affine/affine_regular.hpp"
#include "cyclogon/geom/kernel.hpp"
#include "cyclogon/geom/random.hpp"

namespace {

using cyclogon::Error;
using cyclogon::ErrorCode;
using namespace cyclogon::geom;
using Pt = Point<double>;

constexpr double kPi = std::numbers::pi;

// Regular pentagon with unit sides, counterclockwise.
PolygonPath<double> unit_side_pentagon() {
  const double r = 1 / (2 * std::sin(kPi / 5));
  std::vector<Pt> v;
  for (int i = 0; i < 5; ++i) v.emplace_back(r * std::cos(2 * kPi * i / 5), r * std::sin(2 * kPi * i / 5));
  return PolygonPath<double>(v);
}

PolygonPath<double> regular(int n, double radius = 1) {
  std::vector<Pt> v;
  for (int i = 0; i < n; ++i) v.emplace_back(radius * std::cos(2 * kPi * i / n), radius * std::sin(2 * kPi * i / n));
  return PolygonPath<double>(v);
}

// Determinant form written out independently of oriented_area.
double tri(Pt a, Pt b, Pt c) { return 0.5 * ((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y)); }

TEST(OrientedArea, HalfDeterminantAndAntisymmetry) {
  const Pt a{0, 0}, b{4, 0}, c{0, 3};
  EXPECT_DOUBLE_EQ(oriented_area(a, b, c), 6.0);
  EXPECT_DOUBLE_EQ(oriented_area(b, a, c), -6.0);
  EXPECT_DOUBLE_EQ(oriented_area(a, c, b), -6.0);
  EXPECT_DOUBLE_EQ(oriented_area(c, a, b), 6.0);
}

TEST(PolygonArea, ShoelaceSignFollowsOrientation) {
  const PolygonPath<double> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  EXPECT_DOUBLE_EQ(polygon_area(sq), 1.0);
  const PolygonPath<double> cw{{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  EXPECT_DOUBLE_EQ(polygon_area(cw), -1.0);
  EXPECT_NEAR(polygon_area(unit_side_pentagon()), 0.25 * std::sqrt(25 + 10 * std::sqrt(5.0)), 1e-14);
}

TEST(VertexTriangleAreas, RegularUnitPentagon) {
  // Two unit sides with the interior angle of 108 degrees between them.
  const double expected = 0.5 * std::sin(3 * kPi / 5);
  const auto t = vertex_triangle_areas(unit_side_pentagon());
  ASSERT_EQ(t.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(t[i], expected, 1e-15);
  EXPECT_NEAR(expected, 0.475528, 1e-6);
}

TEST(VertexTriangleAreas, IndicesWrapAround) {
  ConfigGenerator gen(7);
  const auto path = gen.convex_polygon(6);
  const auto t = vertex_triangle_areas(path);
  for (long i = 0; i < 6; ++i)
    EXPECT_DOUBLE_EQ(t[static_cast<std::size_t>(i)], tri(path.at_cyclic(i - 1), path.at_cyclic(i), path.at_cyclic(i + 1)));
}

TEST(Gauss, VanishesForArbitraryFivePoints) {
  ConfigGenerator gen(11);
  for (int k = 0; k < 500; ++k) {
    const auto pts = gen.points_in_square(5);
    const double scale = configuration_scale<double>(pts);
    EXPECT_LE(std::abs(gauss_residual(PolygonPath<double>(pts))), 1e-10 * scale * scale);
  }
}

TEST(Gauss, RequiresFiveVertices) {
  EXPECT_THROW(gauss_residual(regular(6)), Error);
}

TEST(GaussRoots, AreaAndAreaMinusStar) {
  ConfigGenerator gen(3);
  for (int k = 0; k < 200; ++k) {
    const auto path = gen.convex_polygon(5);
    const double a = polygon_area(path);
    // Star area by the shoelace of the reordered path, not the centroid fan.
    const double a_star = polygon_area(PolygonPath<double>({path[0], path[2], path[4], path[1], path[3]}));
    const auto r = gauss_roots(vertex_triangle_areas(path));
    EXPECT_NEAR(r.root_hi, a, 1e-9 * a);
    EXPECT_NEAR(r.root_lo, a - a_star, 1e-9 * a);
  }
}

TEST(GaussRoots, EqualVertexAreasGiveGoldenMultiple) {
  const auto t = vertex_triangle_areas(unit_side_pentagon());
  const auto r = gauss_roots(t);
  const double phi = (1 + std::sqrt(5.0)) / 2;
  EXPECT_NEAR(r.root_hi / t[0], std::sqrt(5.0) * phi, 1e-12);
  EXPECT_NEAR(r.root_hi / t[0], 3.6180339887, 1e-10);
}

TEST(Monge, HandComputedIntegerPoints) {
  const std::vector<Pt> p{{0, 0}, {3, 1}, {2, 4}, {-1, 3}, {-2, -1}};
  const double lhs = tri(p[0], p[1], p[2]) * tri(p[0], p[3], p[4]) + tri(p[0], p[1], p[4]) * tri(p[0], p[2], p[3]);
  const double rhs = tri(p[0], p[1], p[3]) * tri(p[0], p[2], p[4]);
  EXPECT_DOUBLE_EQ(lhs, rhs);
  EXPECT_DOUBLE_EQ(monge_residual<double>(p), 0.0);
}

TEST(Monge, VanishesForRandomPoints) {
  ConfigGenerator gen(5);
  for (int k = 0; k < 500; ++k) {
    const auto pts = gen.points_in_square(5);
    const double scale = configuration_scale<double>(pts);
    EXPECT_LE(std::abs(monge_residual<double>(pts)), 1e-10 * scale * scale);
  }
}

TEST(StarPentagon, FanAgreesWithShoelaceOfStarPath) {
  ConfigGenerator gen(9);
  for (int k = 0; k < 100; ++k) {
    const auto path = gen.convex_polygon(5);
    EXPECT_NEAR(star_pentagon_area(path), polygon_area(star_path(path)), 1e-13);
  }
  // Regular pentagram of circumradius 1 is positively oriented.
  EXPECT_GT(star_pentagon_area(regular(5)), 0);
}

TEST(GeneralizedGauss, AllFourVanish) {
  ConfigGenerator gen(13);
  for (int k = 0; k < 500; ++k) {
    const auto pts = gen.points_in_square(5);
    const double scale = configuration_scale<double>(pts);
    for (double r : generalized_gauss_residuals<double>(pts)) EXPECT_LE(std::abs(r), 1e-10 * scale * scale);
  }
}

TEST(PtolemyCircumradius, VanishesOnConvexPentagons) {
  ConfigGenerator gen(17);
  for (int k = 0; k < 200; ++k) {
    const auto path = gen.convex_polygon(5);
    EXPECT_LE(std::abs(ptolemy_circumradius_residual(path.vertices())), 1e-9);
  }
}

TEST(PtolemyCircumradius, CollinearTripleThrows) {
  const std::vector<Pt> p{{0, 0}, {1, 0}, {2, 0}, {1, 1}, {0, 1}};
  try {
    ptolemy_circumradius_residual<double>(p);
    FAIL() << "expected DegenerateTriangle";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateTriangle);
  }
}

TEST(OrientedCircumradius, RightTriangle) {
  // Hypotenuse 5 is a diameter.
  EXPECT_NEAR(oriented_circumradius<double>({0, 0}, {4, 0}, {0, 3}), 2.5, 1e-15);
  EXPECT_NEAR(oriented_circumradius<double>({0, 0}, {0, 3}, {4, 0}), -2.5, 1e-15);
}

TEST(BorderQuadrilateral, VanishesForRandomPoints) {
  ConfigGenerator gen(19);
  for (int k = 0; k < 300; ++k) {
    const auto pts = gen.points_in_square(5);
    const double scale = configuration_scale<double>(pts);
    EXPECT_LE(std::abs(border_quadrilateral_residual(PolygonPath<double>(pts))), 1e-10 * scale * scale);
  }
}

TEST(HexagonAreaQuadratic, RegularAndRandomConvex) {
  const auto hex = regular(6);
  EXPECT_NEAR(hexagon_theorem41_residual(hex).value, 0.0, 1e-13);
  ConfigGenerator gen(23);
  for (int k = 0; k < 300; ++k) {
    const auto path = gen.convex_polygon(6);
    const double scale = configuration_scale(path.vertices());
    EXPECT_LE(std::abs(hexagon_theorem41_residual(path).value), 1e-9 * scale * scale * scale);
  }
}

TEST(HexagonAreaQuadratic, AffineRegularHexagonIsLinearCase) {
  // (013) = 2 (1) makes p - (1) = (1), not zero; the degenerate flag stays off.
  const auto r = hexagon_theorem41_residual(regular(6));
  EXPECT_FALSE(r.leading_degenerate);
  EXPECT_GT(r.leading, 0);
}

TEST(AffineHexagonArea, ClosedFormAgainstConstruction) {
  EXPECT_DOUBLE_EQ(affine_hexagon_area(1.0, 3.0), 6.5);
  EXPECT_DOUBLE_EQ(affine_hexagon_area(1.0, 2.0), 6.0);
  for (double lambda : {1.5, 2.0, 3.0, 4.25}) {
    for (double k : {0.5, 1.0, 2.0}) {
      const auto path = cyclogon::affine::equal_vertex_area_hexagon(lambda, k);
      for (double t : vertex_triangle_areas(path)) EXPECT_NEAR(t, k, 1e-12);
      EXPECT_NEAR(oriented_area(path[0], path[1], path[3]), lambda * k, 1e-12);
      EXPECT_NEAR(polygon_area(path), affine_hexagon_area(k, lambda), 1e-12);
    }
  }
}

TEST(AffineHexagonArea, LambdaOneIsSingular) {
  try {
    affine_hexagon_area(1.0, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SingularLambda);
  }
}

TEST(HexagonAreaIdentity, RegularAndRandom) {
  EXPECT_NEAR(hexagon_identity45_residual(regular(6)), 0.0, 1e-14);
  ConfigGenerator gen(29);
  for (int k = 0; k < 500; ++k) {
    const auto pts = gen.points_in_square(6);
    const double scale = configuration_scale<double>(pts);
    EXPECT_LE(std::abs(hexagon_identity45_residual(PolygonPath<double>(pts))), 1e-12 * scale * scale);
  }
}

TEST(Prouhet, VanishesForRandomPoints) {
  ConfigGenerator gen(31);
  for (int k = 0; k < 500; ++k) {
    const auto pts = gen.points_in_square(6);
    const double s = configuration_scale<double>(pts);
    EXPECT_LE(std::abs(prouhet_residual<double>(pts)), 1e-10 * s * s * s);
  }
}

TEST(Prouhet, RequiresSixPoints) {
  const std::vector<Pt> five(5, Pt{0, 0});
  EXPECT_THROW(prouhet_residual<double>(five), Error);
}

TEST(ExtendedPrecision, KernelIsGeneric) {
  const PolygonPath<long double> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  EXPECT_EQ(polygon_area(sq), 1.0L);
  ConfigGenerator gen(37);
  const auto pts = gen.points_in_square(5);
  std::vector<Point<long double>> w;
  for (const auto& p : pts) w.emplace_back(p.x, p.y);
  EXPECT_LE(std::abs(gauss_residual(PolygonPath<long double>(w))), 1e-15L);
}

}  // namespace
