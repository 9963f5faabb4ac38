#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "cyclogon/cyclic/formulas.hpp"
#include "cyclogon/cyclic/relations.hpp"
#include "cyclogon/cyclic/sampling.hpp"
#include "cyclogon/elim/derive.hpp"
#include "cyclogon/elim/interpolate.hpp"
#include "cyclogon/elim/printed_forms.hpp"
#include "cyclogon/elim/theorem68.hpp"
#include "cyclogon/io/golden.hpp"
#include "cyclogon/sym/symfun.hpp"

namespace {

using namespace cyclogon;
using elim::DerivationReport;
using poly::MultiPoly;
using poly::Var;

MultiPoly P(const char* s) { return MultiPoly::parse(s); }

// Derivations are deterministic and take a few seconds; run each once.
const DerivationReport& report(const std::string& target) {
  static std::map<std::string, DerivationReport> cache;
  auto it = cache.find(target);
  if (it == cache.end()) it = cache.emplace(target, elim::derive(target)).first;
  return it->second;
}

const elim::Check* find_check(const DerivationReport& r, std::string_view needle) {
  for (const auto& c : r.checks)
    if (c.name.find(needle) != std::string::npos) return &c;
  return nullptr;
}

MultiPoly at_e(const MultiPoly& f, std::array<long, 5> e) {
  std::vector<std::pair<Var, MultiPoly>> subs;
  for (std::size_t k = 0; k < 5; ++k) subs.emplace_back(poly::kElemVars[k], MultiPoly(e[k]));
  return f.substitute(subs);
}

// Partitions of n into parts of size at most k.
std::size_t partitions(int n, int k) {
  if (n == 0) return 1;
  if (n < 0 || k == 0) return 0;
  return partitions(n - k, k) + partitions(n, k - 1);
}

// Cyclic-polygon area does not depend on the order of the sides.
double area_of(std::array<double, 5> sides) { return cyclic::construct_cyclic_pentagon(cyclic::SideLengths5<double>(sides)).A; }

TEST(Diagonal, EliminantEqualsExpandedSeptic) {
  const auto& r = report("diagonal");
  ASSERT_TRUE(r.passed());
  // (X^2 - q)^2 (P X^3 + S X^2 + P Q X + P^2) - p^2 (X^3 - Q X - 2P)^2, built term by term.
  const MultiPoly X = poly::var(Var::X), q = poly::var(Var::q), p = poly::var(Var::p), Pv = poly::var(Var::P),
                  Q = poly::var(Var::Q), S = poly::var(Var::S);
  const MultiPoly septic = pow(X * X - q, 2) * (Pv * pow(X, 3) + S * X * X + Pv * Q * X + Pv * Pv) -
                           p * p * pow(pow(X, 3) - Q * X - MultiPoly(2) * Pv, 2);
  EXPECT_EQ(r.poly, septic);
  EXPECT_EQ(r.match_status, "identical");
  EXPECT_EQ(r.degree, 7u);
  EXPECT_FALSE(r.monic);
  EXPECT_EQ(r.poly.coefficients_in(Var::X).back(), Pv);
}

TEST(Diagonal, UnitSidesAndZeroSide) {
  const auto& f = report("diagonal").poly;
  const auto unit = f.substitute({{Var::p, 1}, {Var::q, 2}, {Var::P, 1}, {Var::Q, 3}, {Var::S, 3}});
  EXPECT_TRUE(divides(P("X^2 - X - 1"), unit));
  // a4 = 0 kills P and leaves X^2 [S (X^2 - q)^2 - p^2 (X^2 - Q)^2].
  const auto quad = f.specialize(Var::P, 0);
  EXPECT_EQ(quad, P("X^2") * (P("S") * pow(P("X^2 - q"), 2) - P("p^2") * pow(P("X^2 - Q"), 2)));
  for (const auto& s : elim::quad_samples(501, 50))
    EXPECT_LE(elim::quad_residual(f, elim::invariant_layout(Var::X), s.X, s.sides), 1e-12);
}

TEST(Robbins, MonicPrimitiveAndRoutesAgree) {
  const auto& r = report("robbins");
  ASSERT_TRUE(r.passed());
  EXPECT_TRUE(r.monic);
  EXPECT_TRUE(r.all_primitive());
  EXPECT_EQ(r.degree, 7u);
  ASSERT_NE(find_check(r, "routes agree"), nullptr);
  EXPECT_TRUE(find_check(r, "routes agree")->passed);
  EXPECT_EQ(r.poly.degree(Var::Y), static_cast<unsigned>(cyclic::delta_k(2).get_ui()));
}

TEST(Robbins, UnitPentagonMinimalPolynomialDivides) {
  // 16 A^2 = 25 + 10 sqrt 5 for the unit regular pentagon, a root of Y^2 - 50Y + 125.
  EXPECT_TRUE(divides(P("Y^2 - 50*Y + 125"), at_e(report("robbins").poly, {5, 10, 10, 5, 1})));
}

TEST(Robbins, BrahmaguptaFactorAtZeroSide) {
  const auto spec = report("robbins").poly.specialize(Var::e5, 0);
  const auto b = (pow(P("Y - 4*e2 + e1^2"), 2) - P("64*e4"));
  const auto q = try_divide(spec, b);
  ASSERT_TRUE(q.has_value());
  EXPECT_TRUE(divides(b, *q));  // double root
}

TEST(Robbins, AreaIsSymmetricInTheSides) {
  // Oracle: the area of a permuted pentagon is unchanged, and it is a root.
  std::mt19937_64 rng(503);
  for (const auto& s : cyclic::oracle_samples(505, 30)) {
    auto sides = s.sides;
    std::shuffle(sides.begin(), sides.end(), rng);
    const double a = area_of(sides);
    EXPECT_NEAR(a, s.sol.A, 1e-12 * s.sol.A);
    EXPECT_LE(elim::oracle_residual(report("robbins").poly, report("robbins").layout, elim::Quantity::AreaSquared, sides,
                                    cyclic::construct_cyclic_pentagon(cyclic::SideLengths5<double>(sides))),
              1e-9);
  }
}

TEST(Robbins, SquaredSideFormIsSymmetric) {
  const auto in_x = sym::from_elementary(report("robbins").poly);
  std::array<int, 5> perm{0, 1, 2, 3, 4};
  std::mt19937_64 rng(507);
  for (int t = 0; t < 5; ++t) {
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<Var, MultiPoly>> subs;
    for (std::size_t i = 0; i < 5; ++i)
      subs.emplace_back(poly::kSquareVars[i], poly::var(poly::kSquareVars[static_cast<std::size_t>(perm[i])]));
    EXPECT_EQ(in_x.substitute(subs), in_x);
  }
}

TEST(Robbins, PrintedReadings) {
  const auto& r = report("robbins");
  std::map<std::string, std::string> status;
  for (const auto& v : r.variants) status[v.name] = v.diff.status;
  EXPECT_EQ(status["robbins/as-printed"], "differs in 31 terms");
  EXPECT_EQ(status["robbins/product-reading"], "identical");
  EXPECT_EQ(r.match_status, "differs in 31 terms");
}

TEST(FourAR, MonicDegreeSevenAndReadings) {
  const auto& r = report("fourAR");
  ASSERT_TRUE(r.passed());
  EXPECT_TRUE(r.monic);
  EXPECT_EQ(r.degree, 7u);
  EXPECT_EQ(r.match_status, "differs in 55 terms");
  // e5 = 0 leaves Z^3 [(Z - e3)^2 - e1^2 e4]^2.
  EXPECT_EQ(r.poly.specialize(Var::e5, 0), P("Z^3") * pow(pow(P("Z - e3"), 2) - P("e1^2*e4"), 2));
  for (const auto& s : cyclic::oracle_samples(509, 50))
    EXPECT_LE(elim::oracle_residual(r.poly, r.layout, elim::Quantity::FourARSquared, s.sides, s.sol), 1e-9);
}

TEST(Circumradius, NotMonicAndReadings) {
  const auto& r = report("circumradius");
  ASSERT_TRUE(r.passed());
  EXPECT_FALSE(r.monic);
  EXPECT_EQ(r.degree, 7u);
  EXPECT_EQ(r.match_status, "differs in 5 terms");
  EXPECT_FALSE(r.extraneous.empty());
  for (const auto& s : cyclic::oracle_samples(511, 50))
    EXPECT_LE(elim::oracle_residual(r.poly, r.layout, elim::Quantity::RadiusSquared, s.sides, s.sol), 1e-9);
}

TEST(Golden, StoredFilesMatchFreshDerivations) {
  for (const char* t : {"diagonal", "fourAR", "circumradius", "robbins"}) {
    EXPECT_EQ(io::load_polynomial(t), report(t).poly) << t;
    EXPECT_EQ(cyclic::golden(t), report(t).poly) << t;
  }
}

TEST(Golden, DerivationIsDeterministic) {
  // A different oracle seed changes only the checks, never the polynomial.
  elim::DeriveOptions opt;
  opt.seed = 7;
  opt.oracle_samples = 20;
  EXPECT_EQ(elim::derive("fourAR", opt).poly, report("fourAR").poly);
}

TEST(Derive, UnknownTargetThrows) { EXPECT_THROW(elim::derive("heptagon"), Error); }

TEST(Interpolation, MonomialCountsMatchPartitionCounts) {
  for (unsigned w = 0; w <= 20; ++w) EXPECT_EQ(elim::e_monomials_of_weight(w).size(), partitions(static_cast<int>(w), 5)) << w;
  EXPECT_EQ(elim::samples_needed(7, 2), partitions(14, 5));
  EXPECT_EQ(elim::samples_needed(7, 2), 70u);
}

TEST(RationalAreaForm, PrintedRatioIsFourTimesDerived) {
  const auto derived = elim::theorem68_derived();
  const auto printed = elim::theorem68_printed();
  EXPECT_EQ(printed.N, derived.N);
  EXPECT_EQ(MultiPoly(4) * printed.D, derived.D);
  EXPECT_TRUE(elim::proportional(printed, derived, MultiPoly(4)));
  EXPECT_FALSE(elim::proportional(printed, derived, MultiPoly(1)));
  // The other sign of the side relation does not reproduce the display.
  const auto plus = elim::reduce_robbins_by_side_relation(+1);
  for (long k : {1L, -1L, 4L, -4L}) EXPECT_FALSE(elim::proportional(printed, plus, MultiPoly(k)));
}

TEST(RationalAreaForm, DerivedRatioGivesAreaOnOracle) {
  for (const auto& s : cyclic::oracle_samples(513, 100)) {
    const double a = cyclic::area_rational_T68(cyclic::SideLengths5<double>(s.sides), geom::vertex_triangle_areas(s.sol.path()));
    EXPECT_LE(std::abs(a - s.sol.A) / s.sol.A, 1e-6);
  }
}

TEST(PrintedForms, ParsedDisplaysHaveExpectedShape) {
  EXPECT_EQ(elim::printed::brahmagupta_factor().poly, pow(P("Y - 4*e2 + e1^2"), 2) - P("64*e4"));
  EXPECT_EQ(elim::printed::quadrilateral_fourAR().poly, pow(P("Z - e3"), 2) - P("e1^2*e4"));
  for (const auto& v : elim::printed::robbins_variants()) EXPECT_EQ(v.poly.degree(Var::Y), 7u) << v.name;
  EXPECT_EQ(elim::printed::circumradius_variants().front().poly.degree(Var::R2), 7u);
  EXPECT_EQ(elim::printed::fourAR_variants().front().poly.degree(Var::Z), 7u);
}

TEST(DiffTerms, Statuses) {
  const auto layout = elim::e_layout(Var::Y);
  EXPECT_EQ(elim::diff_terms(P("Y + e1"), P("Y + e1"), layout).status, "identical");
  EXPECT_EQ(elim::diff_terms(P("Y + e1"), P("-Y - e1"), layout).status, "identical up to sign");
  const auto d = elim::diff_terms(P("Y + e1"), P("Y + 2*e1 + e2"), layout);
  EXPECT_EQ(d.mismatched, 2u);
  EXPECT_EQ(d.status, "differs in 2 terms");
}

}  // namespace
