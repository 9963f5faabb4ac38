#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>

#include "cyclogon/core/error.hpp"

namespace cyclogon::cyclic {

/// Triangle area from side lengths via (4 area)^2 = 2[(ab)^2+(bc)^2+(ca)^2] - (a^4+b^4+c^4).
/// Slightly negative values (flat triangles up to rounding) clamp to zero.
template <std::floating_point Real>
Real heron_area(Real a, Real b, Real c, Real tol = Real(1e-12)) {
  if (!(a >= 0 && b >= 0 && c >= 0)) throw Error(ErrorCode::NotATriangle, "side lengths must be nonnegative");
  // Kahan's ordering avoids the cancellation of the textbook formula.
  Real s[3] = {a, b, c};
  std::sort(s, s + 3, [](Real x, Real y) { return x > y; });
  const Real x = s[0], y = s[1], z = s[2];
  const Real h2 = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
  const Real scale = x * x * x * x;
  if (h2 < 0) {
    if (h2 < -tol * scale) throw Error(ErrorCode::NotATriangle, "side lengths violate the triangle inequality");
    return 0;
  }
  return std::sqrt(h2) / 4;
}

template <std::floating_point Real>
struct QuadMetrics {
  Real e{}, f{}, g{};  ///< diagonals; ef = ac+bd, fg = ab+cd, eg = ad+bc
  Real A{};
  Real R{};
  Real s{};
};

/// Diagonals, area and circumradius of the cyclic quadrilateral with sides
/// a, b, c, d in order. Zero sides are allowed; d = 0 gives the triangle a, b, c.
template <std::floating_point Real>
QuadMetrics<Real> quad_metrics(Real a, Real b, Real c, Real d) {
  const Real sides[4] = {a, b, c, d};
  const Real sum = a + b + c + d;
  for (Real x : sides) {
    if (!(x >= 0)) throw Error(ErrorCode::NoCyclicQuad, "side lengths must be nonnegative");
    if (!(2 * x < sum)) throw Error(ErrorCode::NoCyclicQuad, "each side must be shorter than the other three together");
  }
  QuadMetrics<Real> m;
  m.s = sum / 2;
  const Real ab_cd = a * b + c * d, ac_bd = a * c + b * d, ad_bc = a * d + b * c;
  m.e = std::sqrt(ad_bc * ac_bd / ab_cd);
  m.f = std::sqrt(ab_cd * ac_bd / ad_bc);
  m.g = std::sqrt(ab_cd * ad_bc / ac_bd);
  m.A = std::sqrt((m.s - a) * (m.s - b) * (m.s - c) * (m.s - d));
  if (!(m.A > 0)) throw Error(ErrorCode::NoCyclicQuad, "degenerate quadrilateral");
  m.R = std::sqrt(ab_cd * ac_bd * ad_bc) / (4 * m.A);
  return m;
}

}  // namespace cyclogon::cyclic
