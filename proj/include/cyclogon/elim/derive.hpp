#pragma once

// Elimination pipelines for the cyclic pentagon: the diagonal septic, the
// degree 7 equations for (4AR)^2 and R^2, and the area polynomial in (4A)^2.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cyclogon/core/error.hpp"
#include "cyclogon/cyclic/pentagon.hpp"
#include "cyclogon/cyclic/quad.hpp"
#include "cyclogon/cyclic/relations.hpp"
#include "cyclogon/cyclic/sampling.hpp"
#include "cyclogon/elim/canonical.hpp"
#include "cyclogon/elim/interpolate.hpp"
#include "cyclogon/elim/printed_forms.hpp"
#include "cyclogon/poly/evaluate.hpp"
#include "cyclogon/poly/multipoly.hpp"
#include "cyclogon/poly/resultant.hpp"
#include "cyclogon/poly/upoly.hpp"
#include "cyclogon/sym/symfun.hpp"

namespace cyclogon::elim {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VariantReport {
  std::string name;
  std::string reading;
  TermDiff diff;
};

struct DerivationReport {
  std::string target;
  Layout layout;
  MultiPoly poly;
  unsigned degree = 0;
  bool monic = false;
  mpz_class content = 1;                ///< content divided out of the raw eliminant
  std::vector<bool> primitive;          ///< primitive[j]: coefficient of main^j has content 1
  std::vector<std::string> extraneous;  ///< factors removed, with multiplicity
  std::string match_status;
  std::vector<VariantReport> variants;
  std::vector<Check> checks;
  double seconds = 0;

  void check(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  bool all_primitive() const { return std::all_of(primitive.begin(), primitive.end(), [](bool b) { return b; }); }
};

struct DeriveOptions {
  std::uint64_t seed = 20240611;
  std::size_t oracle_samples = 100;
  double tol = 1e-6;
  std::size_t extra_interpolation_samples = 12;
};

// ---------------------------------------------------------------------------
// Shared plumbing

enum class Quantity { Diagonal, FourARSquared, RadiusSquared, AreaSquared };

inline double quantity_value(Quantity q, const cyclic::CyclicPentagonSolution<double>& s) {
  switch (q) {
    case Quantity::Diagonal: return s.d[0];
    case Quantity::FourARSquared: return std::pow(4 * s.A * s.R, 2);
    case Quantity::RadiusSquared: return s.R * s.R;
    case Quantity::AreaSquared: return 16 * s.A * s.A;
  }
  return 0;
}

/// Relative residual (balanced scale) of f at the oracle values of one sample.
inline double oracle_residual(const MultiPoly& f, const Layout& layout, Quantity q, const std::array<double, 5>& sides,
                              const cyclic::CyclicPentagonSolution<double>& sol) {
  poly::Assignment<double> as;
  if (layout.basis.front() == Var::e1) {
    const auto e = cyclic::elem_sym(sides);
    for (std::size_t k = 0; k < 5; ++k) as.set(poly::kElemVars[k], e.e[k]);
  } else {
    const auto d = cyclic::derived_params(sides);
    as.set(Var::p, d.p).set(Var::q, d.q).set(Var::P, d.P).set(Var::Q, d.Q).set(Var::S, d.S);
  }
  as.set(layout.main, quantity_value(q, sol));
  return poly::evaluate_balanced(f, as.values()).relative();
}

inline double max_oracle_residual(const MultiPoly& f, const Layout& layout, Quantity q,
                                  const std::vector<cyclic::OracleSample>& samples) {
  double worst = 0;
  for (const auto& s : samples) worst = std::max(worst, oracle_residual(f, layout, q, s.sides, s.sol));
  return worst;
}

inline std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

/// Coefficient of the highest power of `main`, in canonical order.
inline const MultiPoly::Term& leading_canonical_term(const MultiPoly& f, const Layout& layout) {
  static thread_local std::vector<MultiPoly::Term> keep;
  keep = canonical_terms(f, layout);
  return keep.front();
}

/// Divides out the content, makes the first canonical term positive and
/// fills degree, monic and per-coefficient primitivity.
inline void normalize_into(DerivationReport& r, MultiPoly f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, r.target + ": eliminant vanishes identically");
  r.content = f.content();
  f = f.primitive_part();
  if (leading_canonical_term(f, r.layout).coeff < 0) f = -f;
  r.poly = f;
  r.degree = f.degree(r.layout.main);
  const auto coeffs = f.coefficients_in(r.layout.main);
  r.monic = coeffs.back().is_constant() && coeffs.back().constant_value() == 1;
  r.primitive.clear();
  for (const auto& c : coeffs) r.primitive.push_back(!c.is_zero() && c.content() == 1);
}

inline std::vector<std::pair<std::string, MultiPoly>> invariant_candidates() {
  using poly::var;
  const MultiPoly p = var(Var::p), q = var(Var::q), P = var(Var::P), Q = var(Var::Q), S = var(Var::S);
  return {{"p", p},           {"P", P},         {"q", q},         {"Q", Q},
          {"S", S},           {"q-2p", q - 2 * p}, {"q+2p", q + 2 * p}, {"Q-q", Q - q},
          {"4P^2-q(q-Q)^2", 4 * P * P - q * pow(q - Q, 2)}};
}

/// Divides out candidate factors as long as the quotient still vanishes at
/// every oracle sample.
inline MultiPoly remove_extraneous(MultiPoly f, const std::function<bool(const MultiPoly&)>& vanishes,
                                   std::vector<std::string>& removed) {
  if (!vanishes(f)) throw Error(ErrorCode::ExtraneousFactorUnremovable, "eliminant does not vanish at the oracle values");
  for (const auto& [name, c] : invariant_candidates()) {
    unsigned k = 0;
    while (auto qt = try_divide(f, c)) {
      if (!vanishes(*qt)) break;
      f = std::move(*qt);
      ++k;
    }
    if (k > 0) removed.push_back(name + (k > 1 ? "^" + std::to_string(k) : std::string()));
  }
  return f;
}

/// Invariant form (p, q, P, Q, S) to e-basis, certified by exact evaluation.
inline MultiPoly invariants_to_e_basis(const MultiPoly& f, std::uint64_t seed) {
  MultiPoly in_x;
  try {
    in_x = sym::side_invariants_to_squares(f);
  } catch (const Error& e) {
    throw Error(ErrorCode::ExtraneousFactorUnremovable, std::string("cleaned eliminant is not symmetric: ") + e.what());
  }
  MultiPoly in_e;
  try {
    in_e = sym::to_elementary(in_x);
  } catch (const Error& e) {
    throw Error(ErrorCode::ExtraneousFactorUnremovable, std::string("cleaned eliminant is not symmetric: ") + e.what());
  }
  if (!sym::agrees_at_random_points(in_x, in_e, 20, seed))
    throw Error(ErrorCode::NotSymmetric, "e-basis form disagrees with the squared-side form");
  return in_e;
}

inline MultiPoly set_zero(const MultiPoly& f, Var v) { return f.specialize(v, 0); }

inline void attach_variants(DerivationReport& r, const std::vector<PrintedForm>& forms) {
  for (const auto& f : forms) r.variants.push_back({f.name, f.reading, diff_terms(r.poly, f.poly, r.layout)});
  if (!r.variants.empty()) r.match_status = r.variants.front().diff.status;
}

/// Random cyclic quadrilaterals as pentagons with a vanishing side a4.
struct QuadSample {
  std::array<double, 5> sides{};  ///< a4 = 0
  cyclic::QuadMetrics<double> m;
  double X = 0;  ///< diagonal separating (a2, a3) from (a0, a1)
};

inline std::vector<QuadSample> quad_samples(std::uint64_t seed, std::size_t count) {
  geom::ConfigGenerator gen(seed);
  std::vector<QuadSample> out;
  while (out.size() < count) {
    const auto pts = gen.concyclic_points(4, gen.uniform(0.5, 2.0), 0.15);
    // Sides around the circle: a2, a3, a0, a1; the diagonal pts[0]-pts[2] splits (a2,a3) from (a0,a1).
    QuadSample s;
    s.sides = {geom::distance(pts[2], pts[3]), geom::distance(pts[3], pts[0]), geom::distance(pts[0], pts[1]),
               geom::distance(pts[1], pts[2]), 0.0};
    s.m = cyclic::quad_metrics(s.sides[2], s.sides[3], s.sides[0], s.sides[1]);
    s.X = geom::distance(pts[0], pts[2]);
    out.push_back(s);
  }
  return out;
}

inline double quad_residual(const MultiPoly& f, const Layout& layout, double main_value, const std::array<double, 5>& sides) {
  poly::Assignment<double> as;
  if (layout.basis.front() == Var::e1) {
    const auto e = cyclic::elem_sym(sides);
    for (std::size_t k = 0; k < 5; ++k) as.set(poly::kElemVars[k], e.e[k]);
  } else {
    const auto d = cyclic::derived_params(sides);
    as.set(Var::p, d.p).set(Var::q, d.q).set(Var::P, d.P).set(Var::Q, d.Q).set(Var::S, d.S);
  }
  as.set(layout.main, main_value);
  return poly::evaluate_balanced(f, as.values()).relative();
}

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

// ---------------------------------------------------------------------------
// Diagonal

/// Eliminates R^2 from the two quartics (both linear in R^2) and compares the
/// result with the expanded septic.
inline DerivationReport derive_diagonal(const DeriveOptions& opt = {}) {
  Stopwatch sw;
  DerivationReport r;
  r.target = "diagonal";
  r.layout = invariant_layout(Var::X);
  const MultiPoly raw = poly::resultant(cyclic::relations::quartic_triangle(), cyclic::relations::quartic_quadrilateral(), Var::R2);
  normalize_into(r, raw);

  DerivationReport printed_norm;
  printed_norm.target = "diagonal/printed";
  printed_norm.layout = r.layout;
  normalize_into(printed_norm, printed::diagonal_septic().poly);
  const auto diff = diff_terms(r.poly, printed_norm.poly, r.layout);
  r.variants.push_back({"diagonal/as-printed", printed::diagonal_septic().reading, diff});
  r.match_status = diff.status;
  if (diff.mismatched != 0)
    throw Error(ErrorCode::MismatchWithPaperForm, "eliminant differs from the expanded septic: " + diff.status);

  r.check("degree 7 in X", r.degree == 7, "degree " + std::to_string(r.degree));

  // Unit sides: p = P = 1, q = 2, Q = S = 3; X^2 - X - 1 must divide.
  {
    const MultiPoly u = r.poly.substitute(
        {{Var::p, MultiPoly(1)}, {Var::P, MultiPoly(1)}, {Var::q, MultiPoly(2)}, {Var::Q, MultiPoly(3)}, {Var::S, MultiPoly(3)}});
    const auto cs = u.coefficients_in(Var::X);
    std::vector<mpq_class> v;
    for (const auto& c : cs) v.emplace_back(c.is_zero() ? mpz_class(0) : c.constant_value());
    const poly::QPoly uni(v);
    const poly::QPoly golden(std::vector<mpq_class>{-1, -1, 1});
    r.check("unit sides: X^2-X-1 divides", (uni % golden).is_zero(), uni.to_string("X"));
  }
  // a4 = 0: divisible by the quadrilateral diagonal relation.
  {
    using poly::var;
    const MultiPoly a0 = var(Var::a0), a1 = var(Var::a1), a2 = var(Var::a2), a3 = var(Var::a3), X = var(Var::X);
    const MultiPoly spec = r.poly.substitute({{Var::p, a2 * a3},
                                              {Var::P, MultiPoly(0)},
                                              {Var::q, a2 * a2 + a3 * a3},
                                              {Var::Q, a0 * a0 + a1 * a1},
                                              {Var::S, a0 * a0 * a1 * a1}});
    const MultiPoly quad = X * X * (a2 * a3 + a0 * a1) - (a1 * a2 + a0 * a3) * (a0 * a2 + a1 * a3);
    r.check("a4=0: divisible by quadrilateral diagonal relation", divides(quad, spec));
    double worst = 0;
    for (const auto& s : quad_samples(opt.seed + 1, opt.oracle_samples))
      worst = std::max(worst, quad_residual(r.poly, r.layout, s.X, s.sides));
    r.check("a4=0: quadrilateral diagonal is a root", worst <= opt.tol, "max relative residual " + fmt(worst));
  }
  const auto samples = cyclic::oracle_samples(opt.seed, opt.oracle_samples);
  const double worst = max_oracle_residual(r.poly, r.layout, Quantity::Diagonal, samples);
  r.check("oracle diagonal is a root", worst <= opt.tol, "max relative residual " + fmt(worst));
  r.seconds = sw.seconds();
  return r;
}

// ---------------------------------------------------------------------------
// (4AR)^2 and R^2

namespace detail {

inline void finish_e_polynomial(DerivationReport& r, const MultiPoly& in_e, Quantity q, const DeriveOptions& opt,
                                const std::vector<cyclic::OracleSample>& samples) {
  normalize_into(r, in_e);
  if (r.degree != 7)
    throw Error(ErrorCode::DegreeMismatch, r.target + ": cleaned eliminant has degree " + std::to_string(r.degree));
  r.check("degree 7", r.degree == 7);
  r.check("symmetric in the squared sides", true, "e-basis form agrees exactly with the squared-side form");
  const double worst = max_oracle_residual(r.poly, r.layout, q, samples);
  r.check("oracle value is a root", worst <= opt.tol,
          std::to_string(samples.size()) + " pentagons, max relative residual " + fmt(worst));
}

}  // namespace detail

inline DerivationReport derive_fourAR(const DeriveOptions& opt = {}) {
  Stopwatch sw;
  DerivationReport r;
  r.target = "fourAR";
  r.layout = e_layout(Var::Z);
  const auto samples = cyclic::oracle_samples(opt.seed, opt.oracle_samples);
  const Layout inv = invariant_layout(Var::Z);
  const auto vanishes = [&](const MultiPoly& f) {
    return max_oracle_residual(f, inv, Quantity::FourARSquared, samples) <= opt.tol;
  };

  const MultiPoly in_w = poly::resultant(cyclic::relations::cubic_w(), cyclic::relations::quadratic_w(), Var::X);
  MultiPoly in_z = poly::even_odd_norm(in_w, Var::W, Var::Z);
  const mpz_class raw_content = in_z.content();
  in_z = in_z.primitive_part();
  in_z = remove_extraneous(in_z, vanishes, r.extraneous);
  detail::finish_e_polynomial(r, invariants_to_e_basis(in_z, opt.seed), Quantity::FourARSquared, opt, samples);
  r.content = raw_content * r.content;
  r.check("monic", r.monic);

  const MultiPoly at_e5 = set_zero(r.poly, Var::e5);
  r.check("e5=0: divisible by (Z-e3)^2-e1^2e4", divides(printed::quadrilateral_fourAR().poly, at_e5));
  double worst = 0;
  for (const auto& s : quad_samples(opt.seed + 1, opt.oracle_samples)) {
    const double z = std::pow(4 * s.m.A * s.m.R, 2);
    worst = std::max(worst, quad_residual(r.poly, r.layout, z, s.sides));
  }
  r.check("a4=0: quadrilateral (4AR)^2 is a root", worst <= opt.tol, "max relative residual " + fmt(worst));
  attach_variants(r, printed::fourAR_variants());
  r.seconds = sw.seconds();
  return r;
}

inline DerivationReport derive_circumradius(const DeriveOptions& opt = {}) {
  Stopwatch sw;
  DerivationReport r;
  r.target = "circumradius";
  r.layout = e_layout(Var::R2);
  const auto samples = cyclic::oracle_samples(opt.seed, opt.oracle_samples);
  const Layout inv = invariant_layout(Var::R2);
  const auto vanishes = [&](const MultiPoly& f) {
    return max_oracle_residual(f, inv, Quantity::RadiusSquared, samples) <= opt.tol;
  };

  // The triangle quartic is even in X, so the septic is replaced by the
  // polynomial whose roots are the squared roots, and X^2 by Z.
  const MultiPoly septic_sq = poly::even_odd_norm(cyclic::relations::diagonal_septic(), Var::X, Var::Z);
  const MultiPoly quartic_sq = printed::even_to_square(cyclic::relations::quartic_triangle(), Var::X, Var::Z);
  MultiPoly in_t = poly::resultant(septic_sq, quartic_sq, Var::Z);
  const mpz_class raw_content = in_t.content();
  in_t = in_t.primitive_part();
  in_t = remove_extraneous(in_t, vanishes, r.extraneous);
  detail::finish_e_polynomial(r, invariants_to_e_basis(in_t, opt.seed), Quantity::RadiusSquared, opt, samples);
  r.content = raw_content * r.content;

  {
    const double R = cyclic::solve_circumradius<double>(std::array<double, 5>{1, 1, 1, 1, 1}).R;
    const double res = oracle_residual(r.poly, r.layout, Quantity::RadiusSquared, {1, 1, 1, 1, 1},
                                       cyclic::CyclicPentagonSolution<double>{R, 0, {}, {}, true, {}});
    r.check("unit sides: R^2 is a root", res <= opt.tol, "relative residual " + fmt(res));
  }
  double worst = 0;
  for (const auto& s : quad_samples(opt.seed + 1, opt.oracle_samples))
    worst = std::max(worst, quad_residual(r.poly, r.layout, s.m.R * s.m.R, s.sides));
  r.check("a4=0: quadrilateral R^2 is a root", worst <= opt.tol, "max relative residual " + fmt(worst));
  attach_variants(r, printed::circumradius_variants());
  r.seconds = sw.seconds();
  return r;
}

// ---------------------------------------------------------------------------
// (4A)^2

namespace detail {

struct IntSides {
  std::array<long, 5> a{};

  std::vector<std::pair<Var, MultiPoly>> params() const {
    const mpz_class p = a[2] * a[3], P = mpz_class(a[0]) * a[1] * a[4];
    const mpz_class q = a[2] * a[2] + a[3] * a[3], Q = a[0] * a[0] + a[1] * a[1] + a[4] * a[4];
    const mpz_class S = mpz_class(a[0] * a[1]) * (a[0] * a[1]) + mpz_class(a[0] * a[4]) * (a[0] * a[4]) +
                        mpz_class(a[1] * a[4]) * (a[1] * a[4]);
    return {{Var::p, MultiPoly(p)}, {Var::P, MultiPoly(P)}, {Var::q, MultiPoly(q)}, {Var::Q, MultiPoly(Q)}, {Var::S, MultiPoly(S)}};
  }
  std::array<mpz_class, 5> e() const {
    std::array<mpz_class, 6> c{1, 0, 0, 0, 0, 0};
    for (long ai : a) {
      const mpz_class x = ai * ai;
      for (std::size_t k = 5; k >= 1; --k) c[k] += c[k - 1] * x;
    }
    return {c[1], c[2], c[3], c[4], c[5]};
  }
  IntSides rotated() const { return {{a[1], a[2], a[3], a[4], a[0]}}; }
};

inline poly::QPoly to_qpoly(const MultiPoly& f, Var v) {
  std::vector<mpq_class> c;
  for (const auto& k : f.coefficients_in(v)) {
    if (!k.is_zero() && !k.is_constant()) throw Error(ErrorCode::InvalidArgument, "not univariate");
    c.emplace_back(k.is_zero() ? mpz_class(0) : k.constant_value());
  }
  return poly::QPoly(std::move(c));
}

/// Y-polynomial of the closed-expression route at integer sides.
inline poly::QPoly robbins_route1(const IntSides& s) {
  const auto params = s.params();
  return to_qpoly(poly::resultant(cyclic::relations::diagonal_septic().substitute(params),
                                  cyclic::relations::area_closed_form().substitute(params), Var::X),
                  Var::Y);
}

/// Y-polynomial of the route through the quartic in X and (4A)^2.
inline poly::QPoly robbins_route2_full(const IntSides& s) {
  const auto params = s.params();
  return to_qpoly(poly::resultant(cyclic::relations::area_in_x().substitute(params),
                                  cyclic::relations::diagonal_septic().substitute(params), Var::X),
                  Var::Y);
}

inline std::vector<IntSides> integer_samples(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> side(1, 60);
  std::vector<IntSides> out;
  while (out.size() < count) {
    IntSides s;
    for (auto& x : s.a) x = side(rng);
    out.push_back(s);
  }
  return out;
}

}  // namespace detail

struct RobbinsRoutes {
  std::optional<MultiPoly> route1, route2;
  std::size_t samples = 0;
  long route2_full_degree = -1;
  bool route1_divides_route2 = true;
};

/// Runs both elimination routes on integer specializations and recovers each
/// coefficient of the monic Y-polynomial in the e-basis by exact solving.
inline RobbinsRoutes robbins_by_interpolation(const DeriveOptions& opt) {
  const std::size_t need = samples_needed(7, 2) + opt.extra_interpolation_samples;
  const auto sides = detail::integer_samples(opt.seed ^ 0x9E3779B97F4A7C15ull, need);
  std::vector<ESample> s1, s2;
  RobbinsRoutes out;
  out.samples = need;
  for (const auto& s : sides) {
    const auto e = s.e();
    const poly::QPoly r1 = detail::robbins_route1(s);
    if (r1.degree() == 7) s1.push_back({e, r1.monic()});
    // The Robbins factor is shared by all five choices of diagonal; the
    // cofactor is not, so the gcd over the relabelings isolates it.
    const poly::QPoly full = detail::robbins_route2_full(s);
    out.route2_full_degree = std::max(out.route2_full_degree, full.degree());
    poly::QPoly g = full;
    detail::IntSides cur = s;
    for (int k = 1; k < 5; ++k) {
      cur = cur.rotated();
      g = poly::gcd(g, detail::robbins_route2_full(cur));
    }
    if (g.degree() == 7) s2.push_back({e, g});
    if (r1.degree() == 7 && !(full % r1).is_zero()) out.route1_divides_route2 = false;
  }
  out.route1 = interpolate_e_basis(s1, Var::Y, 7, 2);
  out.route2 = interpolate_e_basis(s2, Var::Y, 7, 2);
  return out;
}

inline DerivationReport derive_robbins(const DeriveOptions& opt = {}) {
  Stopwatch sw;
  DerivationReport r;
  r.target = "robbins";
  r.layout = e_layout(Var::Y);
  const auto routes = robbins_by_interpolation(opt);
  if (!routes.route1)
    throw Error(ErrorCode::ExtraneousFactorUnremovable,
                "closed-expression route: specializations do not fit a monic e-polynomial of degree 7");
  r.extraneous.push_back("Y-free leading coefficient of each specialized resultant");
  normalize_into(r, *routes.route1);
  if (r.degree != 7) throw Error(ErrorCode::DegreeMismatch, "robbins: degree " + std::to_string(r.degree));
  r.check("degree 7", r.degree == 7);
  r.check("monic", r.monic);
  r.check("every coefficient primitive", r.all_primitive());
  r.check("routes agree exactly", routes.route2 && *routes.route2 == r.poly,
          routes.route2 ? (*routes.route2 == r.poly ? "identical" : "differ") : "second route did not fit");
  r.check("closed-expression factor divides the degree 14 eliminant", routes.route1_divides_route2,
          "second-route eliminant degree " + std::to_string(routes.route2_full_degree));
  r.extraneous.push_back("degree " + std::to_string(std::max(0L, routes.route2_full_degree - 7)) +
                         " cofactor of the second-route eliminant (not shared by the relabeled diagonals)");

  const auto samples = cyclic::oracle_samples(opt.seed, opt.oracle_samples);
  const double worst = max_oracle_residual(r.poly, r.layout, Quantity::AreaSquared, samples);
  r.check("oracle (4A)^2 is a root", worst <= opt.tol, std::to_string(samples.size()) + " pentagons, max relative residual " + fmt(worst));
  {
    const double y = 25 + 10 * std::sqrt(5.0);
    cyclic::CyclicPentagonSolution<double> unit;
    unit.A = std::sqrt(y) / 4;
    const double res = oracle_residual(r.poly, r.layout, Quantity::AreaSquared, {1, 1, 1, 1, 1}, unit);
    r.check("unit sides: 25+10*sqrt(5) is a root", res <= opt.tol, "relative residual " + fmt(res));
  }
  r.check("e5=0: Brahmagupta factor divides", divides(printed::brahmagupta_factor().poly, set_zero(r.poly, Var::e5)));
  double wq = 0;
  for (const auto& s : quad_samples(opt.seed + 1, opt.oracle_samples))
    wq = std::max(wq, quad_residual(r.poly, r.layout, 16 * s.m.A * s.m.A, s.sides));
  r.check("a4=0: quadrilateral (4A)^2 is a root", wq <= opt.tol, "max relative residual " + fmt(wq));
  attach_variants(r, printed::robbins_variants());
  r.seconds = sw.seconds();
  return r;
}

inline DerivationReport derive(const std::string& target, const DeriveOptions& opt = {}) {
  if (target == "diagonal") return derive_diagonal(opt);
  if (target == "fourAR") return derive_fourAR(opt);
  if (target == "circumradius") return derive_circumradius(opt);
  if (target == "robbins") return derive_robbins(opt);
  throw Error(ErrorCode::InvalidArgument, "unknown derivation target '" + target + "'");
}

}  // namespace cyclogon::elim
