#pragma once

// Area of a cyclic pentagon as N/D: the area relation of the vertex-triangle
// sums, A^2 - c1 A + c2 = 0, reduces the monic area polynomial in Y = (4A)^2
// to a linear equation in L = 4A.
//
// With c1' = 4 c1 and c2' = 16 c2 the side relation is L^2 = c1' L - c2'.
// Reducing Y^k = alpha_k L + beta_k gives sum_t C_t (alpha_{7-t} L + beta_{7-t}) = 0
// (C_0 = 1), hence A = N / D with
//   N = -sum_t C_t beta_{7-t},  D = 4 sum_t C_t alpha_{7-t}.
// Variables: c1 = c1', c2 = c2', C1..C7.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "cyclogon/elim/expr.hpp"
#include "cyclogon/poly/multipoly.hpp"

namespace cyclogon::elim {

struct RationalForm {
  MultiPoly N, D;
};

namespace detail {

inline MultiPoly robbins_coefficient_var(int t) {
  if (t == 0) return MultiPoly(1);
  return poly::var(static_cast<Var>(poly::index(Var::C1) + static_cast<std::size_t>(t - 1)));
}

}  // namespace detail

/// N and D for the side relation L^2 = c1' L + s c2'. The area relation
/// gives s = -1; s = +1 is kept for comparing against other sign readings.
inline RationalForm reduce_robbins_by_side_relation(int s) {
  const MultiPoly c1 = poly::var(Var::c1), c2 = poly::var(Var::c2);
  // Y = L^2 = c1 L + s c2.
  std::array<MultiPoly, 8> alpha, beta;
  alpha[0] = MultiPoly(0);
  beta[0] = MultiPoly(1);
  for (std::size_t k = 0; k < 7; ++k) {
    // (alpha L + beta)(c1 L + s c2) with L^2 = c1 L + s c2.
    alpha[k + 1] = alpha[k] * c1 * c1 + beta[k] * c1 + MultiPoly(s) * alpha[k] * c2;
    beta[k + 1] = MultiPoly(s) * (alpha[k] * c1 * c2 + beta[k] * c2);
  }
  RationalForm out;
  for (int t = 0; t <= 7; ++t) {
    const MultiPoly Ct = detail::robbins_coefficient_var(t);
    out.N -= Ct * beta[static_cast<std::size_t>(7 - t)];
    out.D += Ct * alpha[static_cast<std::size_t>(7 - t)];
  }
  out.D = MultiPoly(4) * out.D;
  return out;
}

inline RationalForm theorem68_derived() { return reduce_robbins_by_side_relation(-1); }

/// The printed N and D, with u = c1'^2 - 2c2' and v = c1'^2 - c2'.
inline RationalForm theorem68_printed() {
  SymbolTable symbols{{"u", parse_expression("{c_1'}^2-2{c_2'}")}, {"v", parse_expression("{c_1'}^2-{c_2'}")}};
  const std::string n =
      "{c_2'}[(v^5-4v^4{c_2'}+2v^3{c_2'}^2+5v^2{c_2'}^3-2v{c_2'}^4-{c_2'}^5)C_1"
      "+v(v^3-3v^2{c_2'}+3{c_2'}^3)C_2"
      "+(v^3-2v^2{c_2'}-v{c_2'}^2+{c_2'}^3)C_3"
      "+(v^2-v{c_2'}-{c_2'}^2)C_4+vC_5"
      "+v^6-5v^5{c_2'}+5v^4{c_2'}^2+6v^3{c_2'}^3-7v^2{c_2'}^4-2v{c_2'}^5+{c_2'}^6+C_6]-C_7";
  const std::string d =
      "c'_1[u(u^2-{c_2'}^2)(u^2-3{c_2'}^2)C_1"
      "+((u^2-{c_2'}^2)^2-u^2{c_2'}^2)C_2"
      "+u(u^2-2{c_2'}^2)C_3"
      "+(u^2-{c_2'}^2)C_4"
      "+uC_5"
      "+C_6"
      "+u^2(u^2-2{c_2'}^2)^2-{c_2'}^2(u^2-{c_2'}^2)^2]";
  return {parse_expression(n, symbols), parse_expression(d, symbols)};
}

/// True when a/b and c/d agree as rational functions up to the factor k.
inline bool proportional(const RationalForm& x, const RationalForm& y, const MultiPoly& k) {
  return x.N * y.D == k * y.N * x.D;
}

}  // namespace cyclogon::elim
