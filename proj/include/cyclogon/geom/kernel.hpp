#pragma once

// Area identities for plane pentagons and hexagons evaluated on explicit
// point configurations. All triangle areas are oriented (counterclockwise
// positive); the identities hold for oriented areas of arbitrary points.

#include <array>
#include <cmath>
#include <concepts>
#include <span>
#include <utility>
#include <vector>

#include "cyclogon/core/error.hpp"
#include "cyclogon/geom/point.hpp"

namespace cyclogon::geom {

template <std::floating_point Real>
Real oriented_area(Point<Real> p, Point<Real> q, Point<Real> r) {
  return Real(0.5) * cross(q - p, r - p);
}

/// Signed shoelace area, positive for counterclockwise paths.
template <std::floating_point Real>
Real polygon_area(const PolygonPath<Real>& path) {
  Real twice = 0;
  for (std::size_t i = 0; i < path.size(); ++i) twice += cross(path[i], path.at_cyclic(static_cast<long>(i) + 1));
  return twice / 2;
}

/// t[i] is the oriented area of the vertex triangle (i-1, i, i+1).
template <std::floating_point Real>
struct VertexTriangleAreas {
  std::vector<Real> t;

  std::size_t size() const noexcept { return t.size(); }
  Real operator[](std::size_t i) const noexcept { return t[i]; }
  auto begin() const noexcept { return t.begin(); }
  auto end() const noexcept { return t.end(); }
};

template <std::floating_point Real>
struct CyclicSymmetricSums {
  Real c1{};
  Real c2{};
};

template <std::floating_point Real>
VertexTriangleAreas<Real> vertex_triangle_areas(const PolygonPath<Real>& path) {
  VertexTriangleAreas<Real> out;
  out.t.reserve(path.size());
  for (long i = 0; i < static_cast<long>(path.size()); ++i)
    out.t.push_back(oriented_area(path.at_cyclic(i - 1), path.at_cyclic(i), path.at_cyclic(i + 1)));
  return out;
}

template <std::floating_point Real>
CyclicSymmetricSums<Real> cyclic_sums(const VertexTriangleAreas<Real>& t) {
  CyclicSymmetricSums<Real> s;
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    s.c1 += t[i];
    s.c2 += t[i] * t[(i + 1) % n];
  }
  return s;
}

namespace detail {
template <std::floating_point Real>
void require_size(const PolygonPath<Real>& path, std::size_t n, const char* what) {
  require_count<Real>(path.vertices(), n, what);
}
}  // namespace detail

/// A^2 - c1 A + c2 for a five-vertex path.
template <std::floating_point Real>
Real gauss_residual(const PolygonPath<Real>& path) {
  detail::require_size(path, 5, "gauss_residual");
  const Real area = polygon_area(path);
  const auto s = cyclic_sums(vertex_triangle_areas(path));
  return area * area - s.c1 * area + s.c2;
}

template <std::floating_point Real>
struct GaussRoots {
  Real root_hi{};
  Real root_lo{};
};

/// Both roots of x^2 - c1 x + c2 = 0, descending. A discriminant that is
/// negative by less than tol * c1^2 is treated as zero.
template <std::floating_point Real>
GaussRoots<Real> gauss_roots(const VertexTriangleAreas<Real>& t, Real tol = Real(1e-12)) {
  if (t.size() != 5) throw Error(ErrorCode::InvalidArgument, "gauss_roots expects 5 vertex areas");
  const auto s = cyclic_sums(t);
  Real disc = s.c1 * s.c1 - 4 * s.c2;
  if (disc < 0) {
    if (disc < -tol * std::max(s.c1 * s.c1, std::abs(s.c2)))
      throw Error(ErrorCode::ComplexRoots, "vertex triangle areas give a negative discriminant");
    disc = 0;
  }
  const Real root = std::sqrt(disc);
  // Avoid cancellation in the smaller root.
  const Real big = s.c1 >= 0 ? (s.c1 + root) / 2 : (s.c1 - root) / 2;
  const Real small = big != 0 ? s.c2 / big : Real(0);
  return big >= small ? GaussRoots<Real>{big, small} : GaussRoots<Real>{small, big};
}

/// (012)(034) + (014)(023) - (013)(024) with the first point as the common vertex.
template <std::floating_point Real>
Real monge_residual(std::span<const Point<Real>> pts) {
  require_count(pts, 5, "monge_residual");
  auto t = [&](int i, int j, int k) { return oriented_area(pts[i], pts[j], pts[k]); };
  return t(0, 1, 2) * t(0, 3, 4) + t(0, 1, 4) * t(0, 2, 3) - t(0, 1, 3) * t(0, 2, 4);
}

/// Oriented area of the star pentagon 0,2,4,1,3 as the fan sum
/// t02 + t24 + t41 + t13 + t30 with t_ij = (O P_i P_j) and O the centroid.
template <std::floating_point Real>
Real star_pentagon_area(const PolygonPath<Real>& path) {
  detail::require_size(path, 5, "star_pentagon_area");
  Point<Real> o{0, 0};
  for (std::size_t i = 0; i < 5; ++i) o = o + path[i];
  o = Real(0.2) * o;
  auto t = [&](int i, int j) { return oriented_area(o, path[i], path[j]); };
  return t(0, 2) + t(2, 4) + t(4, 1) + t(1, 3) + t(3, 0);
}

template <std::floating_point Real>
PolygonPath<Real> star_path(const PolygonPath<Real>& path) {
  detail::require_size(path, 5, "star_path");
  return PolygonPath<Real>({path[0], path[2], path[4], path[1], path[3]});
}

/// The four generalized Gauss residuals for five points in path order:
/// A^2 - c1 A + c2, A'^2 - c1^2 + 4 c2, A^2 - c1'^2 + 4 c2', A'^2 - c1' A' + c2',
/// where primed sums come from the vertex triangles of the star path.
template <std::floating_point Real>
std::array<Real, 4> generalized_gauss_residuals(std::span<const Point<Real>> pts) {
  require_count(pts, 5, "generalized_gauss_residuals");
  const PolygonPath<Real> path(std::vector<Point<Real>>(pts.begin(), pts.end()));
  const Real a = polygon_area(path);
  const Real a_star = star_pentagon_area(path);
  const auto s = cyclic_sums(vertex_triangle_areas(path));
  const auto sp = cyclic_sums(vertex_triangle_areas(star_path(path)));
  return {a * a - s.c1 * a + s.c2, a_star * a_star - s.c1 * s.c1 + 4 * s.c2,
          a * a - sp.c1 * sp.c1 + 4 * sp.c2, a_star * a_star - sp.c1 * a_star + sp.c2};
}

/// Oriented circumradius abc / (4 * oriented area); its sign follows the
/// orientation of (p, q, r).
template <std::floating_point Real>
Real oriented_circumradius(Point<Real> p, Point<Real> q, Point<Real> r, Real tol = Real(1e-14)) {
  const Real a = distance(q, r), b = distance(p, r), c = distance(p, q);
  const Real area = oriented_area(p, q, r);
  const Real longest = std::max({a, b, c});
  if (std::abs(area) <= tol * longest * longest)
    throw Error(ErrorCode::DegenerateTriangle, "triangle with (near) zero area has no circumradius");
  return a * b * c / (4 * area);
}

/// |12|/R012 * |34|/R034 + |14|/R014 * |23|/R023 - |13|/R013 * |24|/R024
/// with oriented circumradii. The terms are dimensionless.
template <std::floating_point Real>
Real ptolemy_circumradius_residual(std::span<const Point<Real>> pts) {
  require_count(pts, 5, "ptolemy_circumradius_residual");
  auto ratio = [&](int i, int j) { return distance(pts[i], pts[j]) / oriented_circumradius(pts[0], pts[i], pts[j]); };
  return ratio(1, 2) * ratio(3, 4) + ratio(1, 4) * ratio(2, 3) - ratio(1, 3) * ratio(2, 4);
}

/// A^2 - C1 A + C2 with C1, C2 the cyclic sums of the border quadrilateral
/// areas, each measured directly by the shoelace formula.
template <std::floating_point Real>
Real border_quadrilateral_residual(const PolygonPath<Real>& path) {
  detail::require_size(path, 5, "border_quadrilateral_residual");
  std::array<Real, 5> quad{};
  for (long i = 0; i < 5; ++i) {
    quad[static_cast<std::size_t>(i)] = polygon_area(PolygonPath<Real>(
        {path.at_cyclic(i + 1), path.at_cyclic(i + 2), path.at_cyclic(i + 3), path.at_cyclic(i + 4)}));
  }
  Real c1 = 0, c2 = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    c1 += quad[i];
    c2 += quad[i] * quad[(i + 1) % 5];
  }
  const Real a = polygon_area(path);
  return a * a - c1 * a + c2;
}

template <std::floating_point Real>
struct HexagonResidual {
  Real value{};
  /// p - (1), the coefficient of A^2; the equation is linear when it vanishes.
  Real leading{};
  bool leading_degenerate{};
};

/// Quadratic relation between the hexagon area, its vertex triangle areas
/// and p = (013), reported raw.
template <std::floating_point Real>
HexagonResidual<Real> hexagon_theorem41_residual(const PolygonPath<Real>& path, Real tol = Real(1e-12)) {
  detail::require_size(path, 6, "hexagon_theorem41_residual");
  const auto t = vertex_triangle_areas(path);
  const Real v0 = t[0], v1 = t[1], v2 = t[2], v3 = t[3], v4 = t[4], v5 = t[5];
  const Real p = oriented_area(path[0], path[1], path[3]);
  const Real a = polygon_area(path);
  const Real quad = p - v1;
  const Real lin = v1 * v4 + 2 * v1 * v2 + v1 * v5 - p * p + v1 * p + v0 * v1 - v2 * p - v3 * p - v5 * p -
                   v4 * p - v0 * v2 - v0 * p;
  const Real cst = -v1 * v2 * v5 - v1 * v2 * p - v1 * v2 * v4 - v1 * v4 * v5 - v1 * v2 * v2 + v2 * v3 * p +
                   v3 * p * p - v0 * v1 * v5 + v0 * v2 * v2 + v4 * v5 * p - v0 * v1 * v2 + v0 * v2 * v5 +
                   v0 * p * p - v0 * v1 * p + 2 * v0 * v2 * p + v0 * v5 * p + v3 * v4 * p;
  const Real scale = configuration_scale(path.vertices());
  return {quad * a * a + lin * a + cst, quad, std::abs(quad) <= tol * scale};
}

/// Area of an equal-vertex-area hexagon with (013) = lambda * k.
template <std::floating_point Real>
Real affine_hexagon_area(Real k, Real lambda, Real tol = Real(1e-12)) {
  if (std::abs(lambda - 1) < tol)
    throw Error(ErrorCode::SingularLambda, "lambda = 1 makes the hexagon relation linear and singular");
  return (lambda * lambda + 2 * lambda - 2) / (lambda - 1) * k;
}

/// A^2 - [sum (i)] A + [(1)+(3)+(5)][(0)+(2)+(4)] - (135)(024).
template <std::floating_point Real>
Real hexagon_identity45_residual(const PolygonPath<Real>& path) {
  detail::require_size(path, 6, "hexagon_identity45_residual");
  const auto t = vertex_triangle_areas(path);
  const Real a = polygon_area(path);
  const Real odd = t[1] + t[3] + t[5], even = t[0] + t[2] + t[4];
  const Real t135 = oriented_area(path[1], path[3], path[5]);
  const Real t024 = oriented_area(path[0], path[2], path[4]);
  return a * a - (odd + even) * a + odd * even - t135 * t024;
}

/// (013)(024)(035) + (015)(023)(034) - (013)(025)(034) - (014)(023)(035).
template <std::floating_point Real>
Real prouhet_residual(std::span<const Point<Real>> pts) {
  require_count(pts, 6, "prouhet_residual");
  auto t = [&](int j, int k) { return oriented_area(pts[0], pts[j], pts[k]); };
  return t(1, 3) * t(2, 4) * t(3, 5) + t(1, 5) * t(2, 3) * t(3, 4) - t(1, 3) * t(2, 5) * t(3, 4) -
         t(1, 4) * t(2, 3) * t(3, 5);
}

}  // namespace cyclogon::geom
