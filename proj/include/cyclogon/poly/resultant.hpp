#pragma once

#include <utility>
#include <vector>

#include "cyclogon/core/error.hpp"
#include "cyclogon/poly/multipoly.hpp"

namespace cyclogon::poly {

/// A polynomial viewed as univariate in one variable with coefficients that
/// are free of it. Index k holds the coefficient of var^k; the top entry is
/// nonzero unless the polynomial is zero.
struct Univariate {
  Var var;
  std::vector<MultiPoly> c;

  Univariate(Var v, const MultiPoly& f) : var(v), c(f.coefficients_in(v)) { trim(); }
  Univariate(Var v, std::vector<MultiPoly> coeffs) : var(v), c(std::move(coeffs)) { trim(); }

  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const MultiPoly& lead() const { return c.back(); }
  MultiPoly to_poly() const { return MultiPoly::from_coefficients(var, c); }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
};

/// Pseudo-remainder lc(g)^(deg f - deg g + 1) * f mod g.
inline Univariate pseudo_remainder(Univariate f, const Univariate& g) {
  if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "pseudo-remainder by zero");
  const int dg = g.degree();
  int steps = f.degree() - dg + 1;
  if (steps <= 0) return f;
  const MultiPoly& lg = g.lead();
  while (!f.is_zero() && f.degree() >= dg) {
    const int shift = f.degree() - dg;
    const MultiPoly lf = f.lead();
    for (auto& coeff : f.c) coeff *= lg;
    for (int k = 0; k <= dg; ++k) f.c[k + shift] -= lf * g.c[k];
    f.trim();
    --steps;
  }
  if (steps > 0) {
    const MultiPoly extra = pow(lg, static_cast<unsigned>(steps));
    for (auto& coeff : f.c) coeff *= extra;
  }
  return f;
}

/// Sylvester matrix of f and g in `v` (deg f + deg g square).
inline std::vector<std::vector<MultiPoly>> sylvester_matrix(const Univariate& f, const Univariate& g) {
  const int m = f.degree(), n = g.degree();
  const int size = m + n;
  std::vector<std::vector<MultiPoly>> mat(size, std::vector<MultiPoly>(size));
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k) mat[row][row + (m - k)] = f.c[k];
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k) mat[n + row][row + (n - k)] = g.c[k];
  return mat;
}

/// Fraction-free (Bareiss) determinant of a square matrix with polynomial entries.
inline MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> mat) {
  const std::size_t n = mat.size();
  if (n == 0) return MultiPoly(1);
  bool negate = false;
  MultiPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (mat[k][k].is_zero()) {
      // Prefer the sparsest nonzero pivot below.
      std::size_t best = n;
      for (std::size_t r = k + 1; r < n; ++r)
        if (!mat[r][k].is_zero() && (best == n || mat[r][k].size() < mat[best][k].size())) best = r;
      if (best == n) return MultiPoly{};
      std::swap(mat[k], mat[best]);
      negate = !negate;
    }
    const MultiPoly& pivot = mat[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly value = pivot * mat[i][j];
        if (!mat[i][k].is_zero() && !mat[k][j].is_zero()) value -= mat[i][k] * mat[k][j];
        mat[i][j] = k == 0 ? std::move(value) : exact_divide(value, prev);
      }
      mat[i][k] = MultiPoly{};
    }
    prev = pivot;
  }
  MultiPoly det = std::move(mat[n - 1][n - 1]);
  return negate ? -det : det;
}

namespace detail {
inline void require_positive_degree(const Univariate& f, const char* which) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, std::string("resultant operand ") + which + " is zero");
}
}  // namespace detail

/// Res_v(f, g) as the Bareiss determinant of the Sylvester matrix.
inline MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, Var v) {
  const Univariate uf(v, f), ug(v, g);
  detail::require_positive_degree(uf, "f");
  detail::require_positive_degree(ug, "g");
  if (uf.degree() == 0 && ug.degree() == 0) return MultiPoly(1);
  if (uf.degree() == 0) return pow(uf.lead(), static_cast<unsigned>(ug.degree()));
  if (ug.degree() == 0) return pow(ug.lead(), static_cast<unsigned>(uf.degree()));
  return bareiss_determinant(sylvester_matrix(uf, ug));
}

/// Res_v(f, g) through the subresultant pseudo-remainder sequence.
inline MultiPoly subresultant_resultant(const MultiPoly& f, const MultiPoly& g, Var v) {
  Univariate a(v, f), b(v, g);
  detail::require_positive_degree(a, "f");
  detail::require_positive_degree(b, "g");
  bool negate = false;
  if (a.degree() < b.degree()) {
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) negate = true;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    MultiPoly r = pow(b.lead(), static_cast<unsigned>(a.degree()));
    return negate ? -r : r;
  }
  MultiPoly gcoef(1), h(1);
  while (true) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) negate = !negate;
    Univariate r = pseudo_remainder(a, b);
    if (r.is_zero()) return MultiPoly{};
    a = std::move(b);
    // b = r / (g * h^delta)
    for (auto& coeff : r.c) {
      coeff = exact_divide(coeff, gcoef);
      for (int k = 0; k < delta; ++k) coeff = exact_divide(coeff, h);
    }
    b = std::move(r);
    gcoef = a.lead();
    // h = g^delta / h^(delta - 1)
    MultiPoly hn = pow(gcoef, static_cast<unsigned>(delta));
    for (int k = 1; k < delta; ++k) hn = exact_divide(hn, h);
    h = std::move(hn);
    if (b.degree() == 0) {
      const int da = a.degree();
      MultiPoly res = pow(b.lead(), static_cast<unsigned>(da));
      for (int k = 1; k < da; ++k) res = exact_divide(res, h);
      return negate ? -res : res;
    }
  }
}

/// Writes f = E(W^2) + W*O(W^2) and returns E(Z)^2 - Z*O(Z)^2, the polynomial
/// whose roots are the squares of the roots of f.
inline MultiPoly even_odd_norm(const MultiPoly& f, Var w, Var z) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "norm of zero polynomial");
  if (f.contains(z) && z != w) throw Error(ErrorCode::InvalidArgument, "target variable already present");
  std::vector<MultiPoly::Term> even, odd;
  for (const auto& t : f.terms()) {
    const unsigned e = t.mono[w];
    Monomial m = t.mono.without(w);
    m = m * Monomial::of(z, e / 2);
    (e % 2 == 0 ? even : odd).push_back({m, t.coeff});
  }
  const MultiPoly E = MultiPoly::from_terms(std::move(even));
  const MultiPoly O = MultiPoly::from_terms(std::move(odd));
  return E * E - var(z) * O * O;
}

}  // namespace cyclogon::poly
