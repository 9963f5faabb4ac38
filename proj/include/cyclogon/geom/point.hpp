#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cyclogon/core/error.hpp"

namespace cyclogon::geom {

template <std::floating_point Real>
struct Point {
  Real x{};
  Real y{};

  constexpr Point() = default;
  Point(Real px, Real py) : x(px), y(py) {
    if (!std::isfinite(x) || !std::isfinite(y))
      throw Error(ErrorCode::InvalidArgument, "point coordinates must be finite");
  }

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(Real s, Point a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const Point&, const Point&) = default;
};

template <std::floating_point Real>
Real cross(Point<Real> a, Point<Real> b) {
  return a.x * b.y - a.y * b.x;
}

template <std::floating_point Real>
Real distance(Point<Real> a, Point<Real> b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

template <std::floating_point Real>
Real squared_distance(Point<Real> a, Point<Real> b) {
  const Real dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

/// Ordered vertex sequence of a closed plane polygon; length fixed at construction.
template <std::floating_point Real>
class PolygonPath {
 public:
  explicit PolygonPath(std::vector<Point<Real>> vertices) : v_(std::move(vertices)) {
    if (v_.size() < 3) throw Error(ErrorCode::InvalidArgument, "a polygon path needs at least 3 vertices");
  }
  PolygonPath(std::initializer_list<Point<Real>> vertices) : PolygonPath(std::vector<Point<Real>>(vertices)) {}

  std::size_t size() const noexcept { return v_.size(); }
  const Point<Real>& operator[](std::size_t i) const noexcept { return v_[i]; }
  /// Cyclic access; any integer index is reduced mod n.
  const Point<Real>& at_cyclic(long i) const noexcept {
    const long n = static_cast<long>(v_.size());
    return v_[static_cast<std::size_t>(((i % n) + n) % n)];
  }
  std::span<const Point<Real>> vertices() const noexcept { return v_; }

  /// +1 counterclockwise, -1 clockwise, 0 when the shoelace sum vanishes.
  int orientation() const {
    Real twice = 0;
    for (std::size_t i = 0; i < v_.size(); ++i) twice += cross(v_[i], v_[(i + 1) % v_.size()]);
    return (twice > 0) - (twice < 0);
  }

 private:
  std::vector<Point<Real>> v_;
};

/// Largest squared pairwise distance; the natural length^2 unit for residual tolerances.
template <std::floating_point Real>
Real configuration_scale(std::span<const Point<Real>> pts) {
  Real best = 0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, squared_distance(pts[i], pts[j]));
  return best;
}

template <std::floating_point Real>
void require_count(std::span<const Point<Real>> pts, std::size_t n, const char* what) {
  if (pts.size() != n)
    throw Error(ErrorCode::InvalidArgument,
                std::string(what) + " expects " + std::to_string(n) + " points, got " + std::to_string(pts.size()));
}

}  // namespace cyclogon::geom
