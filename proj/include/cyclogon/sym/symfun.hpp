#pragma once

// Symmetric polynomials in x0..x4 and their expression through the
// elementary symmetric functions e1..e5.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "cyclogon/core/error.hpp"
#include "cyclogon/poly/multipoly.hpp"
#include "cyclogon/sym/partition.hpp"

namespace cyclogon::sym {

using poly::kElemVars;
using poly::kMaxVars;
using poly::kSquareVars;
using poly::Monomial;
using poly::MultiPoly;
using poly::Var;

/// e_k(x0..x4) as a polynomial in the x variables.
inline const MultiPoly& elementary_in_x(int k) {
  static const std::array<MultiPoly, 6> table = [] {
    std::array<MultiPoly, 6> e;
    e[0] = MultiPoly(1);
    for (Var x : kSquareVars) {
      const MultiPoly xv = poly::var(x);
      for (int j = 5; j >= 1; --j) e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * xv;
    }
    return e;
  }();
  return table[static_cast<std::size_t>(k)];
}

namespace detail {

using Exps = std::array<unsigned, 5>;

inline Exps x_exponents(const Monomial& m) {
  Exps a{};
  for (std::size_t i = 0; i < 5; ++i) a[i] = m[kSquareVars[i]];
  return a;
}

inline Monomial strip_x(Monomial m) {
  for (Var x : kSquareVars) m.set(x, 0);
  return m;
}

/// Memoized expansion of e1^a1 ... e5^a5 in the x variables.
class ElementaryProducts {
 public:
  const MultiPoly& get(const Exps& alpha) {
    auto it = memo_.find(alpha);
    if (it != memo_.end()) return it->second;
    int k = 4;
    while (k >= 0 && alpha[static_cast<std::size_t>(k)] == 0) --k;
    MultiPoly value(1);
    if (k >= 0) {
      Exps lower = alpha;
      --lower[static_cast<std::size_t>(k)];
      value = get(lower) * elementary_in_x(k + 1);
    }
    return memo_.emplace(alpha, std::move(value)).first->second;
  }

 private:
  std::map<Exps, MultiPoly> memo_;
};

/// Random-permutation test in exact arithmetic: f(x) == f(sigma x) for the
/// non-x variables held fixed.
inline bool looks_symmetric(const MultiPoly& f, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  for (int t = 0; t < trials; ++t) {
    std::array<mpq_class, kMaxVars> v;
    for (auto& x : v) {
      x = mpq_class(num(rng), den(rng));
      x.canonicalize();
    }
    std::array<std::size_t, 5> perm;
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    auto w = v;
    for (std::size_t i = 0; i < 5; ++i) w[index(kSquareVars[i])] = v[index(kSquareVars[perm[i]])];
    if (f.evaluate_exact(v) != f.evaluate_exact(w)) return false;
  }
  return true;
}

}  // namespace detail

/// Rewrites a polynomial symmetric in x0..x4 (other variables are carried
/// along as coefficients) in the elementary basis e1..e5, by repeatedly
/// cancelling the lexicographically leading x-monomial. Throws NotSymmetric
/// when the input is not symmetric.
inline MultiPoly to_elementary(const MultiPoly& f) {
  if (!detail::looks_symmetric(f, 0x5EED5EEDull, 8))
    throw Error(ErrorCode::NotSymmetric, "polynomial is not symmetric in x0..x4");
  // Group by the part of each monomial outside the x variables.
  std::map<std::vector<unsigned>, std::pair<Monomial, std::vector<MultiPoly::Term>>> groups;
  for (const auto& t : f.terms()) {
    const Monomial rest = detail::strip_x(t.mono);
    std::vector<unsigned> key(poly::kVarCount);
    for (std::size_t i = 0; i < poly::kVarCount; ++i) key[i] = rest.exponent(i);
    auto& g = groups[key];
    g.first = rest;
    g.second.push_back({t.mono / rest, t.coeff});
  }
  detail::ElementaryProducts products;
  std::vector<MultiPoly::Term> out;
  for (auto& [key, group] : groups) {
    MultiPoly g = MultiPoly::from_terms(std::move(group.second));
    while (!g.is_zero()) {
      const MultiPoly::Term* lead = nullptr;
      detail::Exps best{};
      for (const auto& t : g.terms()) {
        const auto a = detail::x_exponents(t.mono);
        if (!lead || a > best) {
          lead = &t;
          best = a;
        }
      }
      for (std::size_t i = 0; i + 1 < 5; ++i)
        if (best[i] < best[i + 1]) throw Error(ErrorCode::NotSymmetric, "leading monomial is not a partition");
      detail::Exps alpha{};
      for (std::size_t i = 0; i < 5; ++i) alpha[i] = best[i] - (i + 1 < 5 ? best[i + 1] : 0u);
      const mpz_class c = lead->coeff;
      Monomial em = group.first;
      for (std::size_t i = 0; i < 5; ++i) em = em * Monomial::of(kElemVars[i], alpha[i]);
      out.push_back({em, c});
      g -= MultiPoly(c) * products.get(alpha);
    }
  }
  return MultiPoly::from_terms(std::move(out));
}

/// Expands an e-basis polynomial back into the x variables.
inline MultiPoly from_elementary(const MultiPoly& f) {
  std::vector<std::pair<Var, MultiPoly>> subs;
  for (int k = 1; k <= 5; ++k) subs.emplace_back(kElemVars[static_cast<std::size_t>(k - 1)], elementary_in_x(k));
  return f.substitute(subs);
}

/// Exact check that an e-basis polynomial and an x polynomial agree at
/// `points` random rational points (other variables random as well).
inline bool agrees_at_random_points(const MultiPoly& in_x, const MultiPoly& in_e, int points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-50, 50), den(1, 12);
  for (int t = 0; t < points; ++t) {
    std::array<mpq_class, kMaxVars> v;
    for (auto& x : v) {
      x = mpq_class(num(rng), den(rng));
      x.canonicalize();
    }
    std::array<mpq_class, 6> e{1, 0, 0, 0, 0, 0};
    for (Var x : kSquareVars)
      for (std::size_t k = 5; k >= 1; --k) e[k] += e[k - 1] * v[index(x)];
    auto w = v;
    for (std::size_t k = 0; k < 5; ++k) w[index(kElemVars[k])] = e[k + 1];
    if (in_x.evaluate_exact(v) != in_e.evaluate_exact(w)) return false;
  }
  return true;
}

/// Replaces the side invariants by x_i = a_i^2:
/// p^2 -> x2 x3, P^2 -> x0 x1 x4, q -> x2 + x3, Q -> x0 + x1 + x4,
/// S -> x0 x1 + x0 x4 + x1 x4. Odd powers of p or P are not expressible.
inline MultiPoly side_invariants_to_squares(const MultiPoly& f) {
  using poly::var;
  const MultiPoly x0 = var(Var::x0), x1 = var(Var::x1), x2 = var(Var::x2), x3 = var(Var::x3), x4 = var(Var::x4);
  std::vector<MultiPoly::Term> halved;
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    const unsigned ep = m[Var::p], eP = m[Var::P];
    if (ep % 2 != 0 || eP % 2 != 0)
      throw Error(ErrorCode::NotSymmetric, "odd power of p or P cannot be written in squared sides");
    m.set(Var::p, ep / 2);
    m.set(Var::P, eP / 2);
    halved.push_back({m, t.coeff});
  }
  return MultiPoly::from_terms(std::move(halved))
      .substitute({{Var::p, x2 * x3},
                   {Var::P, x0 * x1 * x4},
                   {Var::q, x2 + x3},
                   {Var::Q, x0 + x1 + x4},
                   {Var::S, x0 * x1 + x0 * x4 + x1 * x4}});
}

}  // namespace cyclogon::sym
