#pragma once

// The cyclic-pentagon relations as polynomials in the diagonal X = d0, the
// side invariants p, q, P, Q, S and one auxiliary quantity each:
// W = 4AR, R2 = R^2, Y = (4A)^2. Every function returns the expression that
// vanishes on a cyclic pentagon.

#include "cyclogon/poly/multipoly.hpp"

namespace cyclogon::cyclic::relations {

using poly::MultiPoly;
using poly::Var;
using poly::var;

namespace detail {
struct Symbols {
  MultiPoly X = var(Var::X), W = var(Var::W), T = var(Var::R2), Y = var(Var::Y);
  MultiPoly p = var(Var::p), q = var(Var::q), P = var(Var::P), Q = var(Var::Q), S = var(Var::S);
};
inline const Symbols& sym() {
  static const Symbols s;
  return s;
}
}  // namespace detail

/// (a0 X + a1 a4)(a1 X + a0 a4)(a4 X + a0 a1) = P X^3 + S X^2 + P Q X + P^2.
inline const MultiPoly& quad_product() {
  static const MultiPoly k = [] {
    const auto& s = detail::sym();
    return s.P * pow(s.X, 3) + s.S * s.X * s.X + s.P * s.Q * s.X + s.P * s.P;
  }();
  return k;
}

/// Triangle part: 4p^2 - (X^2 - q)^2, the squared quadruple area of triangle 401.
inline const MultiPoly& heron_part() {
  static const MultiPoly h = [] {
    const auto& s = detail::sym();
    return 4 * s.p * s.p - pow(s.X * s.X - s.q, 2);
  }();
  return h;
}

/// Quadrilateral part: 4(S + 2PX) - (X^2 - Q)^2.
inline const MultiPoly& brahmagupta_part() {
  static const MultiPoly b = [] {
    const auto& s = detail::sym();
    return 4 * (s.S + 2 * s.P * s.X) - pow(s.X * s.X - s.Q, 2);
  }();
  return b;
}

/// Degree 7 diagonal equation (X^2 - q)^2 K - p^2 (X^3 - QX - 2P)^2.
inline const MultiPoly& diagonal_septic() {
  static const MultiPoly f = [] {
    const auto& s = detail::sym();
    return pow(s.X * s.X - s.q, 2) * quad_product() - s.p * s.p * pow(pow(s.X, 3) - s.Q * s.X - 2 * s.P, 2);
  }();
  return f;
}

/// Cubic (W - pX)^2 - K.
inline const MultiPoly& cubic_w() {
  static const MultiPoly f = [] {
    const auto& s = detail::sym();
    return pow(s.W - s.p * s.X, 2) - quad_product();
  }();
  return f;
}

/// Quadratic (X^2 - q) W - p[(Q - q) X + 2P].
inline const MultiPoly& quadratic_w() {
  static const MultiPoly f = [] {
    const auto& s = detail::sym();
    return (s.X * s.X - s.q) * s.W - s.p * ((s.Q - s.q) * s.X + 2 * s.P);
  }();
  return f;
}

/// Quartic [4p^2 - (X^2 - q)^2] R^2 - p^2 X^2.
inline const MultiPoly& quartic_triangle() {
  static const MultiPoly f = [] {
    const auto& s = detail::sym();
    return heron_part() * s.T - s.p * s.p * s.X * s.X;
  }();
  return f;
}

/// Quartic [4(S + 2PX) - (X^2 - Q)^2] R^2 - K.
inline const MultiPoly& quartic_quadrilateral() {
  static const MultiPoly f = [] {
    const auto& s = detail::sym();
    return brahmagupta_part() * s.T - quad_product();
  }();
  return f;
}

/// [Y - (H^2 + B^2)]^2 - 4 H^2 B^2 with H^2, B^2 the two parts above.
inline const MultiPoly& area_in_x() {
  static const MultiPoly f = [] {
    const auto& s = detail::sym();
    return pow(s.Y - heron_part() - brahmagupta_part(), 2) - 4 * heron_part() * brahmagupta_part();
  }();
  return f;
}

/// Y X^2 (X^2 - q)^2 - [(Q - q)X + 2P]^2 [4p^2 - (X^2 - q)^2]: the quadratic
/// solved for W = 4AR, squared, divided by R^2 from the triangle quartic.
inline const MultiPoly& area_closed_form() {
  static const MultiPoly f = [] {
    const auto& s = detail::sym();
    return s.Y * s.X * s.X * pow(s.X * s.X - s.q, 2) - pow((s.Q - s.q) * s.X + 2 * s.P, 2) * heron_part();
  }();
  return f;
}

}  // namespace cyclogon::cyclic::relations
