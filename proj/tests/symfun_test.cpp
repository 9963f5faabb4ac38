#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <random>

#include "cyclogon/cyclic/pentagon.hpp"
#include "cyclogon/cyclic/relations.hpp"
#include "cyclogon/poly/multipoly.hpp"
#include "cyclogon/sym/partition.hpp"
#include "cyclogon/sym/symfun.hpp"

namespace {

using cyclogon::Error;
using cyclogon::ErrorCode;
using cyclogon::poly::MultiPoly;
using cyclogon::poly::Var;
using namespace cyclogon::sym;

MultiPoly P(const char* s) { return MultiPoly::parse(s); }

// Brute-force e_k over all k-subsets; independent of the product expansion.
template <class T>
std::array<T, 5> subset_sums(const std::array<T, 5>& x) {
  std::array<T, 5> e{};
  for (unsigned mask = 1; mask < 32; ++mask) {
    T prod(1);
    int k = 0;
    for (unsigned i = 0; i < 5; ++i)
      if (mask & (1u << i)) {
        prod *= x[i];
        ++k;
      }
    e[static_cast<std::size_t>(k - 1)] += prod;
  }
  return e;
}

TEST(ElemValues, KnownVectors) {
  using cyclogon::cyclic::elem_values;
  EXPECT_EQ(elem_values(std::array<double, 5>{1, 1, 1, 1, 1}).e, (std::array<double, 5>{5, 10, 10, 5, 1}));
  EXPECT_EQ(elem_values(std::array<double, 5>{1, 0, 0, 0, 0}).e, (std::array<double, 5>{1, 0, 0, 0, 0}));
  EXPECT_EQ(elem_values(std::array<double, 5>{1, 2, 3, 4, 5}).e, (std::array<double, 5>{15, 85, 225, 274, 120}));
}

TEST(ElemValues, VietaOnRandomRationals) {
  std::mt19937_64 rng(301);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  for (int t = 0; t < 200; ++t) {
    std::array<mpq_class, 5> x;
    for (auto& v : x) {
      v = mpq_class(num(rng), den(rng));
      v.canonicalize();
    }
    EXPECT_EQ(cyclogon::cyclic::elem_values(x).e, subset_sums(x));
  }
}

TEST(Partition, ParseAndPrint) {
  const auto p = Partition::parse("52^21^4");
  EXPECT_EQ(p.parts(), (std::vector<int>{5, 2, 2, 1, 1, 1, 1}));
  EXPECT_EQ(p.weight(), 13);
  EXPECT_EQ(p.to_string(), "52^21^4");
  EXPECT_EQ(Partition::parse("1^{12}").parts().size(), 12u);
  EXPECT_EQ(Partition::parse("1^{12}").to_string(), "1^{12}");
  EXPECT_TRUE(Partition::parse("").empty());
  EXPECT_EQ(Partition({1, 3, 2}).parts(), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(Partition::from_multiplicities({2, 0, 1, 0, 0}), Partition({3, 1, 1}));
}

TEST(Partition, Conjugate) {
  EXPECT_EQ(Partition({3, 1}).conjugate(), (std::vector<int>{2, 1, 1}));
  EXPECT_EQ(Partition({2, 2}).conjugate(), (std::vector<int>{2, 2}));
  EXPECT_TRUE(Partition().conjugate().empty());
}

TEST(Partition, RejectsLargeParts) {
  try {
    Partition({6, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PartTooLarge);
  }
  EXPECT_THROW(Partition::parse("7"), Error);
  EXPECT_THROW(Partition::parse("3^"), Error);
  EXPECT_THROW(Partition::parse("3x"), Error);
}

TEST(ELambda, ProductsOfElementaryValues) {
  const std::array<long, 5> e{5, 10, 10, 5, 1};
  EXPECT_EQ(e_lambda(Partition({3, 2, 1}), e), 500);
  EXPECT_EQ(e_lambda(Partition({1, 1, 1}), e), 125);
  EXPECT_EQ(e_lambda(Partition(), e), 1);
  EXPECT_EQ(e_lambda(Partition({5, 4, 2}), e), 50);
}

TEST(ToElementary, PowerSumsAndMonomialSums) {
  EXPECT_EQ(to_elementary(P("x0^2 + x1^2 + x2^2 + x3^2 + x4^2")), P("e1^2 - 2*e2"));
  EXPECT_EQ(to_elementary(P("x0*x1*x2*x3*x4")), P("e5"));
  EXPECT_EQ(to_elementary(P("x0 + x1 + x2 + x3 + x4")), P("e1"));
  // m_{22} = sum over pairs of x_i^2 x_j^2
  MultiPoly m22;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      m22 += cyclogon::poly::var(cyclogon::poly::kSquareVars[static_cast<std::size_t>(i)], 2) *
             cyclogon::poly::var(cyclogon::poly::kSquareVars[static_cast<std::size_t>(j)], 2);
  EXPECT_EQ(to_elementary(m22), P("e2^2 - 2*e1*e3 + 2*e4"));
}

TEST(ToElementary, CarriesOtherVariablesAsCoefficients) {
  EXPECT_EQ(to_elementary(P("Y^2 + 3*Y*x0 + 3*Y*x1 + 3*Y*x2 + 3*Y*x3 + 3*Y*x4")), P("Y^2 + 3*Y*e1"));
}

TEST(ToElementary, RejectsNonSymmetric) {
  for (const char* s : {"x0", "x0^2 + x1", "x0*x1 + x2"}) {
    try {
      to_elementary(P(s));
      FAIL() << s;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotSymmetric);
    }
  }
}

// Random symmetric input: symmetrize a random polynomial over all 120 permutations.
MultiPoly symmetrize(const MultiPoly& f) {
  std::array<int, 5> perm{0, 1, 2, 3, 4};
  MultiPoly out;
  do {
    std::vector<std::pair<Var, MultiPoly>> subs;
    for (std::size_t i = 0; i < 5; ++i)
      subs.emplace_back(cyclogon::poly::kSquareVars[i], cyclogon::poly::var(cyclogon::poly::kSquareVars[static_cast<std::size_t>(perm[i])]));
    out += f.substitute(subs);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

TEST(ToElementary, RoundTripAndEvaluationOnRandomSymmetric) {
  std::mt19937_64 rng(303);
  std::uniform_int_distribution<int> coef(-5, 5), expo(0, 3);
  for (int t = 0; t < 10; ++t) {
    MultiPoly f;
    for (int k = 0; k < 3; ++k) {
      MultiPoly term(coef(rng));
      for (Var v : cyclogon::poly::kSquareVars) term *= cyclogon::poly::var(v, static_cast<unsigned>(expo(rng)));
      f += term;
    }
    const MultiPoly s = symmetrize(f);
    const MultiPoly e = to_elementary(s);
    EXPECT_EQ(from_elementary(e), s);
    EXPECT_TRUE(agrees_at_random_points(s, e, 20, 305 + static_cast<unsigned>(t)));
  }
}

TEST(ToElementary, TriangularityMonomialLeadsWithConjugate) {
  // m_lambda written in e has e_{lambda'} with coefficient 1 and nothing
  // dominating it.
  for (const auto& lambda : {Partition({2, 1}), Partition({3}), Partition({2, 2, 1}), Partition({3, 1, 1})}) {
    MultiPoly mono(1);
    for (std::size_t i = 0; i < lambda.parts().size(); ++i)
      mono *= cyclogon::poly::var(cyclogon::poly::kSquareVars[i], static_cast<unsigned>(lambda.parts()[i]));
    // symmetrize overcounts by the stabilizer; divide by the content.
    const MultiPoly m = symmetrize(mono).primitive_part();
    const MultiPoly e = to_elementary(m);
    cyclogon::poly::Monomial lead;
    for (int k : lambda.conjugate()) lead = lead * cyclogon::poly::Monomial::of(cyclogon::poly::kElemVars[static_cast<std::size_t>(k - 1)], 1);
    const auto it = std::find_if(e.terms().begin(), e.terms().end(), [&](const auto& t) { return t.mono == lead; });
    ASSERT_NE(it, e.terms().end()) << lambda.to_string();
    EXPECT_EQ(it->coeff, 1);
  }
}

TEST(SideInvariants, InvariantRelationsInElementaryBasis) {
  // q + Q = e1 and (pP)^2 = e5 once sides are replaced by their squares.
  EXPECT_EQ(to_elementary(side_invariants_to_squares(P("q + Q"))), P("e1"));
  EXPECT_EQ(to_elementary(side_invariants_to_squares(P("p^2*P^2"))), P("e5"));
  EXPECT_EQ(to_elementary(side_invariants_to_squares(P("S + p^2 + q*Q"))), P("e2"));
  EXPECT_EQ(to_elementary(side_invariants_to_squares(P("q*S + p^2*Q + P^2"))), P("e3"));
  EXPECT_EQ(to_elementary(side_invariants_to_squares(P("p^2*S + P^2*q"))), P("e4"));
}

TEST(SideInvariants, OddPowersRejected) {
  EXPECT_THROW(side_invariants_to_squares(P("p*q")), Error);
}

TEST(SideInvariants, QuadrilateralProductIsNotSymmetric) {
  // P X^3 + ... has odd P, so the septic itself must be used, not this factor.
  EXPECT_THROW(side_invariants_to_squares(cyclogon::cyclic::relations::quad_product()), Error);
}

TEST(ElementaryInX, Definitions) {
  EXPECT_EQ(elementary_in_x(1), P("x0 + x1 + x2 + x3 + x4"));
  EXPECT_EQ(elementary_in_x(5), P("x0*x1*x2*x3*x4"));
  EXPECT_EQ(elementary_in_x(2).size(), 10u);
  EXPECT_EQ(elementary_in_x(3).size(), 10u);
}

}  // namespace
