#pragma once

// Recovery of a monic polynomial in a main variable whose coefficients are
// weighted-homogeneous integer polynomials in e1..e5 (weight of e_k is k),
// from its exact values at many integer specializations of the squared sides.

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cyclogon/core/error.hpp"
#include "cyclogon/poly/multipoly.hpp"
#include "cyclogon/poly/upoly.hpp"

namespace cyclogon::elim {

using poly::MultiPoly;
using poly::QPoly;
using poly::Var;

using EExponents = std::array<unsigned, 5>;

/// All e-monomials of the given weight, as exponent vectors (e1..e5).
inline std::vector<EExponents> e_monomials_of_weight(unsigned w) {
  std::vector<EExponents> out;
  for (unsigned i5 = 0; 5 * i5 <= w; ++i5)
    for (unsigned i4 = 0; 5 * i5 + 4 * i4 <= w; ++i4)
      for (unsigned i3 = 0; 5 * i5 + 4 * i4 + 3 * i3 <= w; ++i3)
        for (unsigned i2 = 0; 5 * i5 + 4 * i4 + 3 * i3 + 2 * i2 <= w; ++i2)
          out.push_back({w - 5 * i5 - 4 * i4 - 3 * i3 - 2 * i2, i2, i3, i4, i5});
  return out;
}

struct ESample {
  std::array<mpz_class, 5> e;  ///< exact e1..e5
  QPoly monic;                  ///< monic polynomial in the main variable at this point
};

namespace detail {

inline mpz_class e_power_product(const std::array<mpz_class, 5>& e, const EExponents& a) {
  mpz_class v = 1, t;
  for (std::size_t k = 0; k < 5; ++k) {
    mpz_pow_ui(t.get_mpz_t(), e[k].get_mpz_t(), a[k]);
    v *= t;
  }
  return v;
}

/// Solves the overdetermined integer system rows * x = rhs exactly by
/// fraction-free elimination. Rows beyond the rank must reduce to zero,
/// otherwise the data is not of the assumed form and nullopt is returned.
inline std::optional<std::vector<mpq_class>> solve_exact(std::vector<std::vector<mpz_class>> m, std::size_t n) {
  const std::size_t rows = m.size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n; ++c, ++r) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) return std::nullopt;  // rank deficient: not enough independent samples
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j <= n; ++j) {
        m[i][j] = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
  }
  for (std::size_t i = n; i < rows; ++i)
    if (m[i][n] != 0) return std::nullopt;
  std::vector<mpq_class> x(n);
  for (std::size_t k = n; k-- > 0;) {
    mpq_class acc(m[k][n]);
    for (std::size_t j = k + 1; j < n; ++j) acc -= mpq_class(m[k][j]) * x[j];
    x[k] = acc / mpq_class(m[k][k]);
  }
  return x;
}

}  // namespace detail

/// Number of samples needed to determine every coefficient of a monic
/// degree-`degree` polynomial whose main variable has e-weight `main_weight`.
inline std::size_t samples_needed(unsigned degree, unsigned main_weight) {
  std::size_t best = 0;
  for (unsigned j = 0; j < degree; ++j)
    best = std::max(best, e_monomials_of_weight(main_weight * (degree - j)).size());
  return best;
}

/// Fits every coefficient; returns nullopt when the samples are inconsistent
/// with an integer weighted-homogeneous e-polynomial of the expected weight.
inline std::optional<MultiPoly> interpolate_e_basis(const std::vector<ESample>& samples, Var main, unsigned degree,
                                                    unsigned main_weight) {
  std::vector<MultiPoly::Term> terms;
  terms.push_back({poly::Monomial::of(main, degree), mpz_class(1)});
  for (unsigned j = 0; j < degree; ++j) {
    const auto mons = e_monomials_of_weight(main_weight * (degree - j));
    const std::size_t n = mons.size();
    if (samples.size() < n) return std::nullopt;
    std::vector<std::vector<mpz_class>> m;
    m.reserve(samples.size());
    for (const auto& s : samples) {
      if (s.monic.degree() != static_cast<long>(degree)) return std::nullopt;
      const mpq_class value = s.monic.coeff(j);
      std::vector<mpz_class> row(n + 1);
      const mpz_class den = value.get_den();
      for (std::size_t k = 0; k < n; ++k) row[k] = den * detail::e_power_product(s.e, mons[k]);
      row[n] = value.get_num();
      m.push_back(std::move(row));
    }
    const auto x = detail::solve_exact(std::move(m), n);
    if (!x) return std::nullopt;
    for (std::size_t k = 0; k < n; ++k) {
      if ((*x)[k] == 0) continue;
      if ((*x)[k].get_den() != 1) return std::nullopt;
      poly::Monomial mono = poly::Monomial::of(main, j);
      for (std::size_t i = 0; i < 5; ++i) mono = mono * poly::Monomial::of(poly::kElemVars[i], mons[k][i]);
      terms.push_back({mono, mpz_class((*x)[k].get_num())});
    }
  }
  return MultiPoly::from_terms(std::move(terms));
}

}  // namespace cyclogon::elim
