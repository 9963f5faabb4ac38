#pragma once

// Numeric oracle for cyclic polygons given by side lengths.
//
// Labeling for pentagons: a_i is the side opposite vertex i, so edge
// (i, i+1) has length a_{i+3 mod 5}; diagonal d_i = |v_{i-1} v_{i+1}| is
// disjoint from a_i.

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "cyclogon/core/error.hpp"
#include "cyclogon/geom/kernel.hpp"
#include "cyclogon/geom/point.hpp"

namespace cyclogon::cyclic {

template <std::floating_point Real>
struct SideLengths5 {
  std::array<Real, 5> a{};

  SideLengths5() = default;
  explicit SideLengths5(std::array<Real, 5> sides, bool allow_zero = false) : a(sides) {
    Real sum = 0, top = 0;
    for (Real x : a) {
      if (!(x > 0 || (allow_zero && x == 0)))
        throw Error(ErrorCode::InvalidArgument, "side lengths must be positive");
      sum += x;
      top = std::max(top, x);
    }
    if (!(2 * top < sum)) throw Error(ErrorCode::NoConvexCyclicPolygon, "longest side must be shorter than the rest together");
  }
  Real operator[](std::size_t i) const noexcept { return a[i]; }
};

template <class Real>
struct DerivedParams {
  Real p{}, P{}, q{}, Q{}, S{};
};

template <class Real>
struct ElemSym {
  std::array<Real, 5> e{};  ///< e[k-1] = e_k
  Real operator()(int k) const { return e[static_cast<std::size_t>(k - 1)]; }
};

/// e_1..e_5 of the five values: coefficients of prod(t + x_i).
template <class Real>
ElemSym<Real> elem_values(const std::array<Real, 5>& x) {
  std::array<Real, 6> c{};
  c[0] = Real(1);
  for (const auto& xi : x)
    for (std::size_t k = 5; k >= 1; --k) c[k] = c[k] + c[k - 1] * xi;
  ElemSym<Real> out;
  for (std::size_t k = 0; k < 5; ++k) out.e[k] = c[k + 1];
  return out;
}

template <class Real>
DerivedParams<Real> derived_params(const std::array<Real, 5>& a) {
  DerivedParams<Real> d;
  d.p = a[2] * a[3];
  d.P = a[0] * a[1] * a[4];
  d.q = a[2] * a[2] + a[3] * a[3];
  d.Q = a[0] * a[0] + a[1] * a[1] + a[4] * a[4];
  const Real u = a[0] * a[1], v = a[0] * a[4], w = a[1] * a[4];
  d.S = u * u + v * v + w * w;
  return d;
}

/// e-values from the invariants through q+Q = e1, S+p^2+qQ = e2,
/// qS+p^2Q+P^2 = e3, p^2S+P^2q = e4, (pP)^2 = e5.
template <class Real>
ElemSym<Real> elem_from_params(const DerivedParams<Real>& d) {
  const Real p2 = d.p * d.p, P2 = d.P * d.P;
  return {{d.q + d.Q, d.S + p2 + d.q * d.Q, d.q * d.S + p2 * d.Q + P2, p2 * d.S + P2 * d.q, p2 * P2}};
}

template <class Real>
ElemSym<Real> elem_sym(const std::array<Real, 5>& a) {
  std::array<Real, 5> x{};
  for (std::size_t i = 0; i < 5; ++i) x[i] = a[i] * a[i];
  return elem_values(x);
}

template <std::floating_point Real>
struct CircumradiusResult {
  Real R{};
  bool center_inside{};
};

namespace detail {
template <std::floating_point Real>
Real half_angle(Real a, Real R) {
  return std::asin(std::min(Real(1), a / (2 * R)));
}
}  // namespace detail

/// Circumradius of the convex cyclic polygon with the given sides, by
/// bisection on the central-angle sum. The center lies inside unless the
/// longest side subtends more than half the circle.
template <std::floating_point Real>
CircumradiusResult<Real> solve_circumradius(std::span<const Real> sides) {
  if (sides.size() < 3) throw Error(ErrorCode::InvalidArgument, "need at least 3 sides");
  Real sum = 0, top = 0;
  std::size_t imax = 0;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    if (!(sides[i] > 0)) throw Error(ErrorCode::NoConvexCyclicPolygon, "side lengths must be positive");
    sum += sides[i];
    if (sides[i] > top) {
      top = sides[i];
      imax = i;
    }
  }
  if (!(2 * top < sum)) throw Error(ErrorCode::NoConvexCyclicPolygon, "longest side must be shorter than the rest together");

  const Real pi = std::numbers::pi_v<Real>;
  auto inside = [&](Real R) {
    Real s = 0;
    for (Real a : sides) s += 2 * detail::half_angle(a, R);
    return s - 2 * pi;
  };
  auto outside = [&](Real R) {
    Real s = 0;
    for (std::size_t i = 0; i < sides.size(); ++i)
      if (i != imax) s += 2 * detail::half_angle(sides[i], R);
    return s - 2 * detail::half_angle(top, R);
  };

  const Real lo0 = top / 2 * (1 + std::numeric_limits<Real>::epsilon() * 5);
  const bool center_inside = inside(top / 2) >= 0;
  Real lo = lo0, hi = top / 2 + sum;
  // inside() decreases in R; outside() goes from negative to positive.
  auto sign_hi = [&](Real R) { return center_inside ? inside(R) < 0 : outside(R) > 0; };
  for (int k = 0; k < 64 && !sign_hi(hi); ++k) hi *= 2;
  if (!sign_hi(hi)) throw Error(ErrorCode::NoConvexCyclicPolygon, "no bracket for the circumradius");
  for (int it = 0; it < 200 && hi - lo > std::numeric_limits<Real>::epsilon() * hi; ++it) {
    const Real mid = lo + (hi - lo) / 2;
    if (sign_hi(mid))
      hi = mid;
    else
      lo = mid;
  }
  return {lo + (hi - lo) / 2, center_inside};
}

template <std::floating_point Real>
struct CyclicPentagonSolution {
  Real R{};
  Real A{};
  std::array<Real, 5> d{};      ///< d_i disjoint from a_i
  std::array<Real, 5> theta{};  ///< central angle of side a_i
  bool center_inside{};
  std::array<geom::Point<Real>, 5> vertices{};

  geom::PolygonPath<Real> path() const { return geom::PolygonPath<Real>(std::vector(vertices.begin(), vertices.end())); }
};

/// Places the vertices counterclockwise on the circumcircle, vertex 0 at angle 0.
template <std::floating_point Real>
CyclicPentagonSolution<Real> construct_cyclic_pentagon(const SideLengths5<Real>& sides) {
  const auto rc = solve_circumradius<Real>(std::span<const Real>(sides.a));
  CyclicPentagonSolution<Real> sol;
  sol.R = rc.R;
  sol.center_inside = rc.center_inside;
  const std::size_t imax = static_cast<std::size_t>(std::max_element(sides.a.begin(), sides.a.end()) - sides.a.begin());
  // The longest side's angle comes from closure: its asin is ill-conditioned
  // when that side is close to a diameter.
  Real rest = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    if (i == imax) continue;
    sol.theta[i] = 2 * detail::half_angle(sides[i], rc.R);
    rest += sol.theta[i];
  }
  sol.theta[imax] = 2 * std::numbers::pi_v<Real> - rest;
  Real angle = 0;
  for (std::size_t v = 0; v < 5; ++v) {
    sol.vertices[v] = geom::Point<Real>(rc.R * std::cos(angle), rc.R * std::sin(angle));
    angle += sol.theta[(v + 3) % 5];  // edge (v, v+1) is side a_{v+3}
  }
  const auto path = sol.path();
  sol.A = geom::polygon_area(path);
  for (long i = 0; i < 5; ++i)
    sol.d[static_cast<std::size_t>(i)] = geom::distance(path.at_cyclic(i - 1), path.at_cyclic(i + 1));
  return sol;
}

}  // namespace cyclogon::cyclic
