#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>

#include "cyclogon/core/error.hpp"
#include "cyclogon/geom/kernel.hpp"

namespace cyclogon::affine {

using geom::Point;
using geom::PolygonPath;

template <std::floating_point Real>
class AffineMap {
 public:
  using Matrix = std::array<std::array<Real, 2>, 2>;

  AffineMap(Matrix linear, Point<Real> translation = {}, Real tol = Real(1e-12))
      : linear_(linear), translation_(translation) {
    if (std::abs(determinant()) < tol) throw Error(ErrorCode::SingularMap, "affine map with (near) zero determinant");
  }

  static AffineMap identity() { return AffineMap({{{1, 0}, {0, 1}}}); }

  Real determinant() const { return linear_[0][0] * linear_[1][1] - linear_[0][1] * linear_[1][0]; }
  const Matrix& linear() const noexcept { return linear_; }
  Point<Real> translation() const noexcept { return translation_; }

  Point<Real> operator()(Point<Real> p) const {
    return {linear_[0][0] * p.x + linear_[0][1] * p.y + translation_.x,
            linear_[1][0] * p.x + linear_[1][1] * p.y + translation_.y};
  }

  PolygonPath<Real> operator()(const PolygonPath<Real>& path) const {
    std::vector<Point<Real>> out;
    out.reserve(path.size());
    for (const auto& v : path.vertices()) out.push_back((*this)(v));
    return PolygonPath<Real>(std::move(out));
  }

 private:
  Matrix linear_;
  Point<Real> translation_;
};

enum class RegularityKind { AffineRegular, StarAffineRegular, NotRegular };

constexpr std::string_view to_string(RegularityKind k) noexcept {
  switch (k) {
    case RegularityKind::AffineRegular: return "AffineRegular";
    case RegularityKind::StarAffineRegular: return "StarAffineRegular";
    case RegularityKind::NotRegular: return "NotRegular";
  }
  return "Unknown";
}

template <std::floating_point Real>
struct RegularityVerdict {
  RegularityKind kind = RegularityKind::NotRegular;
  /// Mean diagonal/side ratio for pentagons; NaN for hexagons.
  Real diagonal_side_ratio = std::numeric_limits<Real>::quiet_NaN();
  /// Named defects measured by the test (all zero for an exact regular input).
  std::vector<std::pair<std::string, Real>> residuals;
};

template <std::floating_point Real>
inline constexpr Real kGoldenRatio = std::numbers::phi_v<Real>;

/// Image under `map` of the regular n-gon inscribed in the unit circle,
/// counterclockwise, first vertex at angle 0.
template <std::floating_point Real>
PolygonPath<Real> affine_image_regular(int n, const AffineMap<Real>& map) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "regular polygon needs n >= 3");
  std::vector<Point<Real>> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const Real angle = 2 * std::numbers::pi_v<Real> * k / n;
    pts.push_back(map(Point<Real>(std::cos(angle), std::sin(angle))));
  }
  return PolygonPath<Real>(std::move(pts));
}

namespace detail {

/// Vertex triangle areas made positive; throws NonConvex on mixed signs.
template <std::floating_point Real>
std::vector<Real> consistent_vertex_areas(const PolygonPath<Real>& path, Real tol) {
  auto t = geom::vertex_triangle_areas(path).t;
  const Real scale = geom::configuration_scale(path.vertices());
  const bool any_pos = std::any_of(t.begin(), t.end(), [&](Real v) { return v > tol * scale; });
  const bool any_neg = std::any_of(t.begin(), t.end(), [&](Real v) { return v < -tol * scale; });
  if (any_pos && any_neg) throw Error(ErrorCode::NonConvex, "vertex triangles have mixed orientation");
  if (!any_pos && !any_neg) throw Error(ErrorCode::NonConvex, "vertex triangles are degenerate");
  if (any_neg)
    for (auto& v : t) v = -v;
  return t;
}

template <std::floating_point Real>
Real relative_spread(std::span<const Real> values) {
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return *hi / *lo - 1;
}

/// Total turning of a closed path in units of full turns.
template <std::floating_point Real>
Real turning_number(std::span<const Point<Real>> pts) {
  const std::size_t n = pts.size();
  Real total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto u = pts[(i + 1) % n] - pts[i];
    const auto v = pts[(i + 2) % n] - pts[(i + 1) % n];
    total += std::atan2(geom::cross(u, v), u.x * v.x + u.y * v.y);
  }
  return total / (2 * std::numbers::pi_v<Real>);
}

}  // namespace detail

/// Equal vertex triangle areas plus all diagonal/side ratios equal to the
/// golden ratio. Side a_i is opposite vertex i; diagonal d_i is the one
/// parallel to it, joining the neighbours of vertex i.
template <std::floating_point Real>
RegularityVerdict<Real> is_affine_regular_pentagon(const PolygonPath<Real>& path, Real tol = Real(1e-9)) {
  geom::require_count<Real>(path.vertices(), 5, "is_affine_regular_pentagon");
  const auto t = detail::consistent_vertex_areas(path, tol);
  const Real spread = detail::relative_spread<Real>(t);
  RegularityVerdict<Real> verdict;
  Real ratio_sum = 0, worst_ratio = 0;
  for (long i = 0; i < 5; ++i) {
    const Real side = geom::distance(path.at_cyclic(i + 2), path.at_cyclic(i + 3));
    const Real diag = geom::distance(path.at_cyclic(i - 1), path.at_cyclic(i + 1));
    const Real ratio = diag / side;
    ratio_sum += ratio;
    worst_ratio = std::max(worst_ratio, std::abs(ratio - kGoldenRatio<Real>));
  }
  verdict.diagonal_side_ratio = ratio_sum / 5;
  verdict.residuals = {{"area_spread", spread}, {"ratio_deviation", worst_ratio}};
  verdict.kind = (spread <= tol && worst_ratio <= tol) ? RegularityKind::AffineRegular : RegularityKind::NotRegular;
  return verdict;
}

/// Checks AB||EC, BC||AD, CD||BE, DE||CA, EA||DB with a relative angular
/// tolerance; when all hold, the turning number separates the convex
/// pentagon (one turn) from the pentagram (two turns).
template <std::floating_point Real>
RegularityVerdict<Real> parallel_classification(std::span<const Point<Real>> pts, Real tol = Real(1e-9)) {
  geom::require_count(pts, 5, "parallel_classification");
  const Real scale = geom::configuration_scale(pts);
  if (scale <= 0) throw Error(ErrorCode::DegenerateInput, "all points coincide");
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      if (geom::squared_distance(pts[i], pts[j]) <= tol * tol * scale)
        throw Error(ErrorCode::DegenerateInput, "repeated point");
  bool collinear = true;
  for (std::size_t k = 2; k < 5; ++k)
    if (std::abs(geom::oriented_area(pts[0], pts[1], pts[k])) > tol * scale) collinear = false;
  if (collinear) throw Error(ErrorCode::DegenerateInput, "all points collinear");

  constexpr std::array<std::array<int, 4>, 5> pairs = {{
      {0, 1, 4, 2},  // AB || EC
      {1, 2, 0, 3},  // BC || AD
      {2, 3, 1, 4},  // CD || BE
      {3, 4, 2, 0},  // DE || CA
      {4, 0, 3, 1},  // EA || DB
  }};
  RegularityVerdict<Real> verdict;
  Real worst = 0;
  for (const auto& pr : pairs) {
    const auto u = pts[pr[1]] - pts[pr[0]];
    const auto v = pts[pr[3]] - pts[pr[2]];
    const Real rel = std::abs(geom::cross(u, v)) / (std::hypot(u.x, u.y) * std::hypot(v.x, v.y));
    worst = std::max(worst, rel);
  }
  Real ratio_sum = 0;
  for (long i = 0; i < 5; ++i) {
    auto at = [&](long k) { return pts[static_cast<std::size_t>(((k % 5) + 5) % 5)]; };
    ratio_sum += geom::distance(at(i - 1), at(i + 1)) / geom::distance(at(i + 2), at(i + 3));
  }
  verdict.diagonal_side_ratio = ratio_sum / 5;
  const Real turns = detail::turning_number(pts);
  verdict.residuals = {{"parallel_defect", worst}, {"turning_number", turns}};
  if (worst > tol) return verdict;
  const Real winding = std::abs(turns);
  verdict.kind = std::abs(winding - 2) < std::abs(winding - 1) ? RegularityKind::StarAffineRegular
                                                               : RegularityKind::AffineRegular;
  return verdict;
}

/// Equal vertex triangle areas and (013) twice that area, with central
/// symmetry (common midpoint of the three main diagonals) checked as well.
template <std::floating_point Real>
RegularityVerdict<Real> is_affine_regular_hexagon(const PolygonPath<Real>& path, Real tol = Real(1e-9)) {
  geom::require_count<Real>(path.vertices(), 6, "is_affine_regular_hexagon");
  const auto t = detail::consistent_vertex_areas(path, tol);
  const Real spread = detail::relative_spread<Real>(t);
  Real mean = 0;
  for (Real v : t) mean += v;
  mean /= 6;
  const Real t013 = std::abs(geom::oriented_area(path[0], path[1], path[3]));
  const Real double_defect = std::abs(t013 / (2 * mean) - 1);
  const auto c0 = Real(0.5) * (path[0] + path[3]);
  const auto c1 = Real(0.5) * (path[1] + path[4]);
  const auto c2 = Real(0.5) * (path[2] + path[5]);
  const Real diameter = std::sqrt(geom::configuration_scale(path.vertices()));
  const Real symmetry_defect =
      std::max(geom::distance(c0, c1), geom::distance(c0, c2)) / diameter;
  RegularityVerdict<Real> verdict;
  verdict.residuals = {{"area_spread", spread}, {"double_area_defect", double_defect}, {"symmetry_defect", symmetry_defect}};
  const bool regular = spread <= tol && double_defect <= tol;
  if (regular && symmetry_defect > tol)
    throw Error(ErrorCode::FormMismatch, "area criteria hold but the hexagon is not centrally symmetric");
  verdict.kind = regular ? RegularityKind::AffineRegular : RegularityKind::NotRegular;
  return verdict;
}

/// Convex hexagon with all six vertex triangle areas equal to k and
/// (013) = lambda * k, for lambda > 1. Closed-form member of the one-parameter
/// family; lambda = 2 is the affine-regular hexagon.
template <std::floating_point Real>
PolygonPath<Real> equal_vertex_area_hexagon(Real lambda, Real k = 1) {
  if (!(lambda > 1)) throw Error(ErrorCode::SingularLambda, "equal vertex area hexagon family needs lambda > 1");
  if (!(k > 0)) throw Error(ErrorCode::InvalidArgument, "vertex area must be positive");
  // Unit-base normalization: v0 = (0,0), v1 = (1,0), v2 and v5 at height 1,
  // v3 and v4 at height lambda; every vertex triangle then has area 1/2.
  const Real x3 = lambda / 2;
  const Real x4 = x3 - 1 / (lambda - 1);
  const Real x5 = (x4 - 1) / lambda;
  const Real sy = 2 * k;
  return PolygonPath<Real>({Point<Real>(0, 0), Point<Real>(1, 0), Point<Real>(Real(1.5), sy),
                            Point<Real>(x3, lambda * sy), Point<Real>(x4, lambda * sy), Point<Real>(x5, sy)});
}

}  // namespace cyclogon::affine
