#include <gtest/gtest.h>

#include <dunkl_forge/calculus.hpp>
#include <dunkl_forge/errors.hpp>

#include "fixtures.hpp"

using namespace dforge;
using namespace fixtures;

TEST(QuantumGerm, Cases) {
  const auto t = s3();
  const auto S = transpositions(t);
  EXPECT_EQ(quantum_germ(t, S, S[0]), GermVector::basis(S[0]));
  const GermVector ge = quantum_germ(t, S, t.identity());
  for (auto s : S) EXPECT_EQ(ge[s], Scalar(-1));
  EXPECT_TRUE(quantum_germ(t, S, el(t, "(1,2,3)")).is_zero());
  GermVector total = ge;
  for (auto s : S) total += quantum_germ(t, S, s);
  EXPECT_TRUE(total.is_zero());
}

TEST(Differential, Z2) {
  GroupSpec spec;
  spec.degree = 2;
  spec.permutations = {{1, 0}};
  const auto t = build_group(spec);
  const Element sigma{1};
  const SubsetS S(t, {sigma});
  const GammaElement d = differential_delta(t, S, sigma);
  EXPECT_EQ(d.coefficient(t.identity(), sigma), Scalar(1));
  EXPECT_EQ(d.coefficient(sigma, sigma), Scalar(-1));
  EXPECT_EQ(d.terms().size(), 2U);
}

TEST(Differential, SumOverGroupVanishes) {
  const auto t = s3();
  const auto S = transpositions(t);
  GammaElement total;
  for (auto g : t.elements()) total += differential_delta(t, S, g);
  EXPECT_TRUE(total.is_zero());
}

TEST(Differential, InnerDerivationMatches) {
  for (const auto& t : {s3(), q8(), b2()}) {
    std::vector<Element> all;
    for (auto g : t.elements())
      if (g != t.identity()) all.push_back(g);
    const SubsetS S(t, all);
    for (auto g : t.elements()) EXPECT_EQ(differential_delta(t, S, g), inner_derivation(t, S, g));
  }
}

TEST(CircAction, Rules) {
  const auto t = s3();
  const auto S = transpositions(t);
  const GermVector g = GermVector::basis(S[0]);
  EXPECT_TRUE(circ_action(g, FunctionOnG::delta(S[1])).is_zero());
  EXPECT_EQ(circ_action(g, FunctionOnG::delta(S[0])), g);
  EXPECT_EQ(circ_action(g, FunctionOnG::one(t)), g);
}

TEST(RightModule, ShiftRule) {
  const auto t = s3();
  const auto S = transpositions(t);
  const Element s = S[0];
  GammaElement x;
  x.add(t.identity(), GermVector::basis(s));
  const GammaElement y = right_module_action(t, x, FunctionOnG::delta(s));
  EXPECT_EQ(y, x);
  EXPECT_EQ(right_module_action(t, x, FunctionOnG::one(t)), x);
}

TEST(AdCoaction, Cases) {
  const auto t = s3();
  for (const auto& term : ad_coaction(t, t.identity())) EXPECT_EQ(term.conjugated, t.identity());
  const auto q = q8();
  for (const auto& term : ad_coaction(q, minus_one(q))) EXPECT_EQ(term.conjugated, minus_one(q));
  const auto S = transpositions(t);
  for (const auto& term : ad_coaction(t, el(t, "(1,2)"))) EXPECT_TRUE(S.contains(term.conjugated));
}

TEST(BraidSigma, Examples) {
  const auto t = s3();
  const auto S = transpositions(t);
  const auto [a, b] = braid_sigma(t, S, el(t, "(1,2)"), el(t, "(1,3)"));
  EXPECT_EQ(t.label(a), "(2,3)");
  EXPECT_EQ(t.label(b), "(1,2)");
  EXPECT_EQ(braid_sigma(t, S, S[1], S[1]), std::make_pair(S[1], S[1]));
  EXPECT_THROW(braid_sigma(t, S, t.identity(), S[0]), NotInS);
}

TEST(GammaTilde, Dimensions) {
  const auto t = s3();
  EXPECT_EQ(gamma_tilde_dim2(t, transpositions(t)), 4U);
  const auto q = q8();
  EXPECT_EQ(gamma_tilde_dim2(q, SubsetS(q, {minus_one(q)})), 0U);
  // B2: the two sign flips commute, sigma is the plain flip there
  const auto b = b2();
  const auto d1 = b.find_matrix(Matrix(2, 2, {-1, 0, 0, 1})).value();
  const auto d2 = b.find_matrix(Matrix(2, 2, {1, 0, 0, -1})).value();
  EXPECT_EQ(gamma_tilde_dim2(b, SubsetS(b, {d1, d2})), 1U);
}
