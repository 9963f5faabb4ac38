#pragma once

// Numeric evaluation of the derived degree 7 polynomials (coefficients from
// the golden tables), real roots of the area polynomial, and the rational
// area formula through vertex-triangle areas.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cyclogon/core/error.hpp"
#include "cyclogon/cyclic/pentagon.hpp"
#include "cyclogon/cyclic/residuals.hpp"
#include "cyclogon/elim/printed_forms.hpp"
#include "cyclogon/elim/theorem68.hpp"
#include "cyclogon/geom/kernel.hpp"
#include "cyclogon/io/golden.hpp"
#include "cyclogon/poly/evaluate.hpp"
#include "cyclogon/poly/upoly.hpp"

namespace cyclogon::cyclic {

using poly::MultiPoly;

/// Golden polynomial for a target, loaded once per golden directory.
inline const MultiPoly& golden(const std::string& target) {
  static std::mutex mu;
  static std::map<std::string, MultiPoly> cache;
  const std::string key = io::golden_dir().string() + "|" + target;
  std::lock_guard lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, io::load_polynomial(target)).first;
  return it->second;
}

namespace detail {

template <class Real>
poly::Assignment<Real> e_assignment(const ElemSym<Real>& e) {
  poly::Assignment<Real> as;
  for (std::size_t k = 0; k < 5; ++k) as.set(poly::kElemVars[k], e.e[k]);
  return as;
}

template <std::floating_point Real>
poly::BalancedValue<Real> eval_in(const MultiPoly& f, Var main, Real x, const ElemSym<Real>& e) {
  auto as = e_assignment(e);
  as.set(main, x);
  return poly::evaluate_balanced(f, as.values());
}

}  // namespace detail

/// Area polynomial at Y = (4A)^2; value and balanced scale.
template <std::floating_point Real>
poly::BalancedValue<Real> robbins_eval(Real Y, const ElemSym<Real>& e) {
  return detail::eval_in(golden("robbins"), Var::Y, Y, e);
}

/// The printed display evaluated literally, kept as a cross-check.
template <std::floating_point Real>
poly::BalancedValue<Real> robbins_eval_printed(Real Y, const ElemSym<Real>& e) {
  static const MultiPoly printed = elim::printed::robbins_variants().front().poly;
  return detail::eval_in(printed, Var::Y, Y, e);
}

template <std::floating_point Real>
PolyResidual<Real> robbins_residual(Real Y, const ElemSym<Real>& e) {
  return make_residual("robbins", robbins_eval(Y, e));
}

template <std::floating_point Real>
PolyResidual<Real> fourAR_poly_residual(Real Z, const ElemSym<Real>& e) {
  return make_residual("fourAR", detail::eval_in(golden("fourAR"), Var::Z, Z, e));
}

template <std::floating_point Real>
PolyResidual<Real> circumradius_poly_residual(Real R2, const ElemSym<Real>& e) {
  return make_residual("circumradius", detail::eval_in(golden("circumradius"), Var::R2, R2, e));
}

/// C_0 = 1, C_1..C_7: coefficients of Y^7, Y^6, ..., Y^0.
template <std::floating_point Real>
std::array<Real, 8> robbins_coefficients(const ElemSym<Real>& e) {
  const auto coeffs = golden("robbins").coefficients_in(Var::Y);
  if (coeffs.size() != 8) throw Error(ErrorCode::DegreeMismatch, "area polynomial is not of degree 7");
  const auto as = detail::e_assignment(e);
  std::array<Real, 8> out{};
  for (std::size_t t = 0; t < 8; ++t) out[t] = poly::evaluate_balanced(coeffs[7 - t], as.values()).value;
  return out;
}

struct PolyRoot {
  double root = 0;
  int multiplicity = 1;
  bool convex = false;  ///< nearest to the oracle value
};
using RobbinsRoot = PolyRoot;

/// All real roots of f in `main` with multiplicity, the other variables fixed
/// to exact rationals. The root nearest to `oracle` is flagged.
inline std::vector<PolyRoot> real_roots(const MultiPoly& f, Var main, const std::array<mpq_class, poly::kMaxVars>& v,
                                        std::optional<double> oracle = std::nullopt) {
  std::vector<mpq_class> c;
  for (const auto& k : f.coefficients_in(main)) c.push_back(k.evaluate_exact(v));
  while (!c.empty() && c.back() == 0) c.pop_back();
  std::vector<PolyRoot> out;
  if (c.size() < 2) return out;
  const poly::QPoly q(std::move(c));
  for (const auto& [factor, mult] : poly::squarefree_decomposition(q)) {
    if (factor.degree() < 1) continue;
    // Relative width keeps every root at full double precision whatever the
    // scale; the absolute floor only matters for a root at zero.
    const mpq_class width = poly::cauchy_bound(factor) / mpq_class(mpz_class(1) << 200);
    for (const auto& iv : poly::isolate_real_roots(factor, width, mpq_class(1, mpz_class(1) << 60)))
      out.push_back({mpq_class((iv.lo + iv.hi) / 2).get_d(), mult, false});
  }
  std::sort(out.begin(), out.end(), [](const PolyRoot& a, const PolyRoot& b) { return a.root < b.root; });
  if (oracle && !out.empty()) {
    auto best = std::min_element(out.begin(), out.end(), [&](const PolyRoot& a, const PolyRoot& b) {
      return std::abs(a.root - *oracle) < std::abs(b.root - *oracle);
    });
    best->convex = true;
  }
  return out;
}

/// e-values taken exactly from their binary representation.
inline std::array<mpq_class, poly::kMaxVars> exact_values(const ElemSym<double>& e) {
  std::array<mpq_class, poly::kMaxVars> v;
  for (std::size_t k = 0; k < 5; ++k) v[poly::index(poly::kElemVars[k])] = mpq_class(e.e[k]);
  return v;
}

/// p, q, P, Q, S computed exactly from the sides as given.
inline std::array<mpq_class, poly::kMaxVars> exact_param_values(const std::array<double, 5>& sides) {
  std::array<mpq_class, 5> a;
  for (std::size_t i = 0; i < 5; ++i) a[i] = mpq_class(sides[i]);
  const auto d = derived_params(a);
  std::array<mpq_class, poly::kMaxVars> v;
  v[poly::index(Var::p)] = d.p;
  v[poly::index(Var::q)] = d.q;
  v[poly::index(Var::P)] = d.P;
  v[poly::index(Var::Q)] = d.Q;
  v[poly::index(Var::S)] = d.S;
  return v;
}

inline std::vector<PolyRoot> robbins_roots(const ElemSym<double>& e, std::optional<double> oracle_Y = std::nullopt) {
  return real_roots(golden("robbins"), Var::Y, exact_values(e), oracle_Y);
}

namespace detail {

/// Exact value of a binary floating point number (long double split in two doubles).
template <std::floating_point Real>
mpq_class exact(Real x) {
  const double hi = static_cast<double>(x);
  return mpq_class(hi) + mpq_class(static_cast<double>(x - static_cast<Real>(hi)));
}

}  // namespace detail

/// A = N/D from the vertex-triangle areas and the area-polynomial
/// coefficients. N and D are evaluated exactly at the given inputs: in double
/// precision their cancellation costs up to four digits.
template <std::floating_point Real>
Real area_rational_T68(const SideLengths5<Real>& sides, const geom::VertexTriangleAreas<Real>& t, Real tol = Real(1e-12)) {
  static const elim::RationalForm form = elim::theorem68_derived();
  const auto s = geom::cyclic_sums(t);
  std::array<mpq_class, 5> x;
  for (std::size_t i = 0; i < 5; ++i) x[i] = detail::exact(sides[i]) * detail::exact(sides[i]);
  const auto e = elem_values(x);
  std::array<mpq_class, poly::kMaxVars> ev;
  for (std::size_t k = 0; k < 5; ++k) ev[poly::index(poly::kElemVars[k])] = e.e[k];
  const auto coeffs = golden("robbins").coefficients_in(Var::Y);
  if (coeffs.size() != 8) throw Error(ErrorCode::DegreeMismatch, "area polynomial is not of degree 7");
  std::array<mpq_class, poly::kMaxVars> v;
  v[poly::index(Var::c1)] = 4 * detail::exact(s.c1);
  v[poly::index(Var::c2)] = 16 * detail::exact(s.c2);
  for (std::size_t k = 1; k <= 7; ++k) v[poly::index(Var::C1) + k - 1] = coeffs[7 - k].evaluate_exact(ev);
  const mpq_class N = form.N.evaluate_exact(v), D = form.D.evaluate_exact(v);
  if (D == 0 || abs(D) < mpq_class(tol) * abs(N))
    throw Error(ErrorCode::ZeroDenominator, "denominator of the rational area formula vanishes");
  const mpq_class a = N / D;
  return static_cast<Real>(a.get_d()) + static_cast<Real>(mpq_class(a - mpq_class(a.get_d())).get_d());
}

}  // namespace cyclogon::cyclic
