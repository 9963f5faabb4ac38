#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "cyclogon/cyclic/formulas.hpp"
#include "cyclogon/elim/canonical.hpp"
#include "cyclogon/elim/expr.hpp"
#include "cyclogon/poly/multipoly.hpp"
#include "cyclogon/poly/resultant.hpp"
#include "cyclogon/poly/upoly.hpp"

namespace {

using cyclogon::Error;
using cyclogon::ErrorCode;
using namespace cyclogon::poly;

MultiPoly P(const char* s) { return MultiPoly::parse(s); }
QPoly Q(std::vector<mpq_class> c) { return QPoly(std::move(c)); }

// c * prod (v - roots[i]), roots given as polynomials in other variables.
MultiPoly from_roots(Var v, const std::vector<MultiPoly>& roots, const MultiPoly& c = MultiPoly(1)) {
  MultiPoly out = c;
  for (const auto& r : roots) out *= var(v) - r;
  return out;
}

TEST(MultiPoly, Arithmetic) {
  EXPECT_EQ(P("X + 1") * P("X - 1"), P("X^2 - 1"));
  EXPECT_EQ(P("X + 1") - P("X + 1"), MultiPoly{});
  EXPECT_EQ(pow(P("X + p"), 3), P("X^3 + 3*X^2*p + 3*X*p^2 + p^3"));
  EXPECT_EQ(P("2*X^2*q + 4*X*q"), P("+2 X^2 q +4 X q"));
  EXPECT_EQ(P("3*X^2 - p*Q + 1").degree(Var::X), 2u);
  EXPECT_EQ(P("3*X^2 - p*Q + 1").total_degree(), 2u);
}

TEST(MultiPoly, ContentAndPrimitivePart) {
  const auto f = P("6*X^2 + 9*X");
  EXPECT_EQ(f.content(), 3);
  EXPECT_EQ(f.primitive_part(), P("2*X^2 + 3*X"));
  EXPECT_EQ(P("-4*X + 2").content(), 2);
}

TEST(MultiPoly, ExactDivision) {
  EXPECT_EQ(exact_divide(pow(P("X + p"), 3), P("X + p")), pow(P("X + p"), 2));
  EXPECT_TRUE(divides(P("X - q"), P("X^2 - q^2")));
  EXPECT_FALSE(divides(P("X - q"), P("X^2 + q^2")));
  EXPECT_FALSE(try_divide(P("X^2 + 1"), P("X + 1")).has_value());
  try {
    exact_divide(P("X^2 + 1"), P("X + 1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDivisible);
  }
}

TEST(MultiPoly, SubstituteAndEvaluate) {
  const auto f = P("X^2*p + Q");
  EXPECT_EQ(f.substitute(Var::X, P("q + 1")), P("q^2*p + 2*q*p + p + Q"));
  EXPECT_EQ(f.specialize(Var::p, 0), P("Q"));
  std::array<mpq_class, kMaxVars> v;
  v[index(Var::X)] = mpq_class(1, 2);
  v[index(Var::p)] = 4;
  v[index(Var::Q)] = mpq_class(-1, 3);
  EXPECT_EQ(f.evaluate_exact(v), mpq_class(2, 3));
}

TEST(MultiPoly, CoefficientsRoundTrip) {
  const auto f = P("X^3*p - 2*X*q + S");
  const auto c = f.coefficients_in(Var::X);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[0], P("S"));
  EXPECT_EQ(c[1], P("-2*q"));
  EXPECT_EQ(c[2], MultiPoly{});
  EXPECT_EQ(MultiPoly::from_coefficients(Var::X, c), f);
}

TEST(MultiPoly, ParseErrors) {
  EXPECT_THROW(P(""), Error);
  EXPECT_THROW(P("X^"), Error);
  EXPECT_THROW(P("foo + 1"), Error);
  EXPECT_THROW(P("X + "), Error);
}

TEST(Resultant, LinearFactors) {
  EXPECT_EQ(resultant(P("X - p"), P("X - q"), Var::X), P("p - q"));
  EXPECT_EQ(resultant(P("X^2 - 1"), P("X - 1"), Var::X), MultiPoly{});
  EXPECT_EQ(subresultant_resultant(P("X^2 - 1"), P("X - 1"), Var::X), MultiPoly{});
}

TEST(Resultant, RootProductOracle) {
  // Res(f, g) = lf^deg g * lg^deg f * prod (r_i - s_j).
  std::mt19937_64 rng(401);
  std::uniform_int_distribution<int> small(-4, 4), deg(1, 4);
  for (int t = 0; t < 30; ++t) {
    std::vector<MultiPoly> r, s;
    const int m = deg(rng), n = deg(rng);
    for (int i = 0; i < m; ++i) r.push_back(MultiPoly(small(rng)) + MultiPoly(small(rng)) * var(Var::p));
    for (int j = 0; j < n; ++j) s.push_back(MultiPoly(small(rng)) + MultiPoly(small(rng)) * var(Var::q));
    int lf = small(rng), lg = small(rng);
    if (lf == 0) lf = 2;
    if (lg == 0) lg = -3;
    const auto f = from_roots(Var::X, r, MultiPoly(lf));
    const auto g = from_roots(Var::X, s, MultiPoly(lg));
    MultiPoly expected = pow(MultiPoly(lf), static_cast<unsigned>(n)) * pow(MultiPoly(lg), static_cast<unsigned>(m));
    for (const auto& ri : r)
      for (const auto& sj : s) expected *= ri - sj;
    EXPECT_EQ(resultant(f, g, Var::X), expected);
    EXPECT_EQ(subresultant_resultant(f, g, Var::X), expected);
  }
}

TEST(Resultant, BareissAgreesWithSubresultantOnDenseInputs) {
  std::mt19937_64 rng(403);
  std::uniform_int_distribution<int> coef(-6, 6), e(0, 2);
  for (int t = 0; t < 20; ++t) {
    auto random_poly = [&](unsigned d) {
      MultiPoly f = var(Var::X, d) * MultiPoly(coef(rng) == 0 ? 1 : 2);
      for (unsigned k = 0; k < d; ++k)
        f += MultiPoly(coef(rng)) * var(Var::X, k) * var(Var::p, static_cast<unsigned>(e(rng))) * var(Var::q, static_cast<unsigned>(e(rng)));
      return f;
    };
    const auto f = random_poly(3 + static_cast<unsigned>(t % 3));
    const auto g = random_poly(2 + static_cast<unsigned>(t % 2));
    EXPECT_EQ(resultant(f, g, Var::X), subresultant_resultant(f, g, Var::X));
    // Swapping arguments multiplies by (-1)^(deg f deg g).
    const int sign = (f.degree(Var::X) * g.degree(Var::X)) % 2 ? -1 : 1;
    EXPECT_EQ(resultant(g, f, Var::X), MultiPoly(sign) * resultant(f, g, Var::X));
  }
}

TEST(Resultant, ZeroOperandThrows) {
  try {
    resultant(MultiPoly{}, P("X"), Var::X);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroPolynomial);
  }
}

TEST(Sylvester, SizeAndDeterminant) {
  const Univariate f(Var::X, P("X^2 + 3*X + 2")), g(Var::X, P("X - 5"));
  const auto m = sylvester_matrix(f, g);
  EXPECT_EQ(m.size(), 3u);
  // f(5) = 42
  EXPECT_EQ(bareiss_determinant(m), MultiPoly(42));
}

TEST(EvenOddNorm, SmallCases) {
  EXPECT_EQ(even_odd_norm(P("W^2 - 2"), Var::W, Var::Z), P("Z^2 - 4*Z + 4"));
  EXPECT_EQ(even_odd_norm(P("W - 3"), Var::W, Var::Z), P("9 - Z"));
}

TEST(EvenOddNorm, RootsAreSquares) {
  // norm(Z) = (-1)^n prod (Z - r_i^2) for monic f of degree n.
  std::mt19937_64 rng(405);
  std::uniform_int_distribution<int> small(-5, 5), deg(1, 5);
  for (int t = 0; t < 20; ++t) {
    std::vector<MultiPoly> r, sq;
    const int n = deg(rng);
    for (int i = 0; i < n; ++i) {
      r.push_back(MultiPoly(small(rng)) + var(Var::p));
      sq.push_back(r.back() * r.back());
    }
    const auto expected = MultiPoly(n % 2 ? -1 : 1) * from_roots(Var::Z, sq);
    EXPECT_EQ(even_odd_norm(from_roots(Var::W, r), Var::W, Var::Z), expected);
  }
}

TEST(QPolyTest, GcdAndSquareFree) {
  const QPoly x = Q({0, 1});
  const QPoly a = Q({-1, 1}), b = Q({2, 1});  // X - 1, X + 2
  const QPoly f = a * a * a * b * x;
  EXPECT_EQ(gcd(f, a * b), a * b);
  EXPECT_EQ(gcd(QPoly(), QPoly()), QPoly());
  const auto sf = squarefree_decomposition(f);
  ASSERT_EQ(sf.size(), 2u);
  EXPECT_EQ(sf[0].first, b * x);
  EXPECT_EQ(sf[0].second, 1);
  EXPECT_EQ(sf[1].first, a);
  EXPECT_EQ(sf[1].second, 3);
}

TEST(QPolyTest, SturmCountsAndIsolation) {
  // (X^2 - 2)(X - 3)(X + 1/2)
  const QPoly f = Q({-2, 0, 1}) * Q({-3, 1}) * Q({mpq_class(1, 2), 1});
  const auto chain = sturm_chain(f);
  EXPECT_EQ(count_roots(chain, -10, 10), 4);
  EXPECT_EQ(count_roots(chain, 0, 2), 1);
  EXPECT_EQ(count_roots(chain, -mpq_class(1, 2), 0), 0);  // lo is exclusive
  EXPECT_EQ(count_roots(chain, -1, -mpq_class(1, 2)), 1);
  const auto roots = isolate_real_roots(f, mpq_class(1, 1000000));
  ASSERT_EQ(roots.size(), 4u);
  const double expected[] = {-std::sqrt(2.0), -0.5, std::sqrt(2.0), 3.0};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_LE(roots[i].lo, roots[i].hi);
    EXPECT_NEAR(mpq_class((roots[i].lo + roots[i].hi) / 2).get_d(), expected[i], 1e-6);
  }
  EXPECT_LE(mpq_class(cauchy_bound(f)).get_d(), 1 + 6.0);
  EXPECT_GE(cauchy_bound(f), 3);
}

TEST(QPolyTest, RelativeRefinementIsScaleFree) {
  // Same roots at two scales must refine to the same relative accuracy.
  const QPoly f = Q({-2, 0, 1}) * Q({-7, 1});
  const QPoly g = Q({-2 * mpq_class(1000000) * 1000000, 0, 1}) * Q({-7000000, 1});
  const mpq_class rel(1, mpz_class(1) << 60);
  const auto rf = isolate_real_roots(f, 0, rel), rg = isolate_real_roots(g, 0, rel);
  ASSERT_EQ(rf.size(), rg.size());
  for (std::size_t i = 0; i < rf.size(); ++i)
    EXPECT_DOUBLE_EQ(mpq_class((rg[i].lo + rg[i].hi) / 2).get_d(), 1e6 * mpq_class((rf[i].lo + rf[i].hi) / 2).get_d());
}

TEST(Expression, DisplayNotation) {
  using cyclogon::elim::parse_expression;
  EXPECT_EQ(parse_expression("(Y-4e_2+e_1^2)^2-64e_4"), P("Y^2 - 8*Y*e2 + 2*Y*e1^2 + 16*e2^2 - 8*e2*e1^2 + e1^4 - 64*e4"));
  EXPECT_EQ(parse_expression("e_{52^21^4}"), P("e5*e2^2*e1^4"));
  EXPECT_EQ(parse_expression("2^73^3Y^2e_5"), P("3456*Y^2*e5"));
  EXPECT_EQ(parse_expression("[a+b]\\{c\\}", {{"a", P("p")}, {"b", P("q")}, {"c", P("S")}}), P("p*S + q*S"));
  EXPECT_THROW(parse_expression("(Y"), Error);
  EXPECT_THROW(parse_expression("k_1"), Error);
}

TEST(Canonical, RoundTripOfStoredPolynomials) {
  using namespace cyclogon::elim;
  for (const char* name : {"robbins", "fourAR", "circumradius"}) {
    const auto& f = cyclogon::cyclic::golden(name);
    const auto layout = e_layout(f.contains(Var::Y) ? Var::Y : f.contains(Var::Z) ? Var::Z : Var::R2);
    const auto text = to_canonical_text(f, layout, "header line\nsecond");
    EXPECT_EQ(text.rfind("# header line\n# second\n", 0), 0u);
    EXPECT_EQ(from_canonical_text(text, layout), f);
    EXPECT_EQ(to_canonical_text(from_canonical_text(text, layout), layout, "header line\nsecond"), text);
  }
  const auto& d = cyclogon::cyclic::golden("diagonal");
  EXPECT_EQ(from_canonical_text(to_canonical_text(d, invariant_layout(Var::X)), invariant_layout(Var::X)), d);
}

TEST(Canonical, RejectsMalformedLines) {
  using namespace cyclogon::elim;
  const auto layout = e_layout(Var::Y);
  EXPECT_THROW(from_canonical_text("1 Y^1 e1^0 e2^0 e3^0 e4^0 e5^0\n", layout), Error);
  EXPECT_THROW(from_canonical_text("+1 Y^1 e1^0\n", layout), Error);
  EXPECT_THROW(to_canonical_text(P("X"), layout), Error);
}

}  // namespace
