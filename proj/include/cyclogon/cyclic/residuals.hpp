#pragma once

#include <gmpxx.h>

#include <array>
#include <concepts>
#include <string>

#include "cyclogon/core/error.hpp"
#include "cyclogon/cyclic/pentagon.hpp"
#include "cyclogon/cyclic/relations.hpp"
#include "cyclogon/poly/evaluate.hpp"

namespace cyclogon::cyclic {

using poly::Var;

template <std::floating_point Real>
struct PolyResidual {
  std::string name;
  Real value{};
  Real scale{};
  Real relative{};
};

template <std::floating_point Real>
PolyResidual<Real> make_residual(std::string name, const poly::BalancedValue<Real>& b) {
  return {std::move(name), b.value, b.scale, b.relative()};
}

template <std::floating_point Real>
poly::Assignment<Real> param_assignment(const std::array<Real, 5>& sides) {
  const auto d = derived_params(sides);
  poly::Assignment<Real> as;
  as.set(Var::p, d.p).set(Var::P, d.P).set(Var::q, d.q).set(Var::Q, d.Q).set(Var::S, d.S);
  return as;
}

template <std::floating_point Real>
PolyResidual<Real> diagonal_septic_residual(Real X, const std::array<Real, 5>& sides) {
  auto as = param_assignment(sides);
  as.set(Var::X, X);
  return make_residual("diagonal_septic", poly::evaluate_balanced(relations::diagonal_septic(), as.values()));
}

template <std::floating_point Real>
struct CubicQuadraticQuartic {
  PolyResidual<Real> cubic, quadratic, quartic_triangle, quartic_quadrilateral;
};

/// The cubic and quadratic in X with W = 4AR, and the two quartics with R^2.
template <std::floating_point Real>
CubicQuadraticQuartic<Real> cubic_quadratic_quartic_residuals(Real X, Real R, Real A, const std::array<Real, 5>& sides) {
  auto as = param_assignment(sides);
  as.set(Var::X, X).set(Var::W, 4 * A * R).set(Var::R2, R * R);
  const auto& v = as.values();
  return {make_residual("cubic_4AR", poly::evaluate_balanced(relations::cubic_w(), v)),
          make_residual("quadratic_4AR", poly::evaluate_balanced(relations::quadratic_w(), v)),
          make_residual("quartic_triangle_R2", poly::evaluate_balanced(relations::quartic_triangle(), v)),
          make_residual("quartic_quadrilateral_R2", poly::evaluate_balanced(relations::quartic_quadrilateral(), v))};
}

template <std::floating_point Real>
PolyResidual<Real> area_poly_in_X_residual(Real X, Real A, const std::array<Real, 5>& sides) {
  auto as = param_assignment(sides);
  as.set(Var::X, X).set(Var::Y, 16 * A * A);
  return make_residual("area_in_X", poly::evaluate_balanced(relations::area_in_x(), as.values()));
}

/// Number of inscribed (2k+1)-gons with given sides, by both closed forms:
/// [(2k+1) C(2k,k) - 4^k] / 2 and sum_{i<k} (k-i) C(2k+1, i).
inline mpz_class delta_k(unsigned long k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "delta_k needs k >= 1");
  mpz_class binom, four;
  mpz_bin_uiui(binom.get_mpz_t(), 2 * k, k);
  mpz_ui_pow_ui(four.get_mpz_t(), 4, k);
  const mpz_class first = ((2 * k + 1) * binom - four) / 2;
  mpz_class second = 0;
  for (unsigned long i = 0; i < k; ++i) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), 2 * k + 1, i);
    second += (k - i) * c;
  }
  if (first != second)
    throw Error(ErrorCode::FormMismatch, "closed forms for delta_k disagree at k = " + std::to_string(k));
  return first;
}

}  // namespace cyclogon::cyclic
