#include <gtest/gtest.h>

#include <complex>
#include <random>

#include <dunkl_forge/dunkl.hpp>
#include <dunkl_forge/errors.hpp>

#include "fixtures.hpp"

using namespace dforge;
using namespace fixtures;

namespace {

DunklConfig reflection_config(GroupTable table, DunklMode mode, const std::vector<Scalar>& per_class) {
  auto g = std::make_shared<const GroupTable>(std::move(table));
  const auto refl = complex_reflections(*g);
  SubsetS S(*g, refl);
  return make_config(g, S, per_class, mode);
}

std::vector<Scalar> class_nu(const GroupTable& t, std::vector<Scalar> values) {
  // values are handed out to classes in order; non-reflection classes get 0
  const auto classes = conjugacy_classes(t);
  const auto refl = complex_reflections(t);
  std::vector<Scalar> out;
  std::size_t next = 0;
  for (const auto& c : classes) {
    const bool is_refl = std::find(refl.begin(), refl.end(), c.front()) != refl.end();
    out.push_back(is_refl ? values.at(next++ % values.size()) : Scalar());
  }
  return out;
}

DunklConfig z2_config(const Scalar& nu) {
  GroupSpec spec;
  spec.kind = GroupKind::Matrix;
  spec.degree = 1;
  spec.matrices = {Matrix(1, 1, {-1})};
  auto g = std::make_shared<const GroupTable>(build_group(spec));
  return DunklConfig{g, SubsetS(*g, {Element{1}}), {{Element{1}, LinearForm({Scalar(1)}), nu}}, DunklMode::Real};
}

}  // namespace

TEST(Dunkl, RankOneExamples) {
  const Scalar nu = Scalar::rational(2, 7);
  const auto cfg = z2_config(nu);
  EXPECT_TRUE(validate_config(cfg).passed());
  const MultiPoly x = MultiPoly::variable(1, 0);
  EXPECT_EQ(dunkl_apply(cfg, 0, x), MultiPoly::constant(1, Scalar(1) + Scalar(2) * nu));
  EXPECT_EQ(dunkl_apply(cfg, 0, x * x), x * Scalar(2));
  EXPECT_TRUE(commutator_check(cfg).passed());
}

TEST(Dunkl, GradientExamples) {
  const auto cfg = reflection_config(a2(), DunklMode::Real, class_nu(a2(), {Scalar::rational(1, 2)}));
  EXPECT_TRUE(validate_config(cfg).passed());
  for (const auto& c : dunkl_gradient(cfg, MultiPoly::constant(3, 5))) EXPECT_TRUE(c.is_zero());
  // p = x1: transpositions touching coordinate 1 contribute nu to D1 and -nu to the other coordinate
  const auto grad = dunkl_gradient(cfg, MultiPoly::variable(3, 0));
  EXPECT_EQ(grad[0], MultiPoly::constant(3, Scalar(1) + Scalar(2) * Scalar::rational(1, 2)));
  EXPECT_EQ(grad[1], MultiPoly::constant(3, -Scalar::rational(1, 2)));
  EXPECT_EQ(grad[2], MultiPoly::constant(3, -Scalar::rational(1, 2)));
}

TEST(Dunkl, ZeroMultiplicityIsGradient) {
  const auto cfg = zero_multiplicity(reflection_config(b2(), DunklMode::Real, class_nu(b2(), {Scalar(3)})));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    MultiPoly p(2);
    for (int t = 0; t < 4; ++t) p.add_term({static_cast<std::uint8_t>(rng() % 5), static_cast<std::uint8_t>(rng() % 5)}, Scalar(static_cast<long>(rng() % 9) - 4));
    for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(dunkl_apply(cfg, j, p), p.partial_derivative(j));
  }
}

TEST(Dunkl, DegreeDropsByOne) {
  const auto cfg = reflection_config(b2(), DunklMode::Real, class_nu(b2(), {Scalar(1), Scalar::rational(1, 3)}));
  for (const auto& e : monomials_up_to(2, 5)) {
    const auto p = MultiPoly::monomial(e);
    for (std::size_t j = 0; j < 2; ++j) {
      const auto d = dunkl_apply(cfg, j, p);
      if (!d.is_zero()) {
        EXPECT_TRUE(d.is_homogeneous());
        EXPECT_EQ(d.total_degree(), p.total_degree() - 1);
      }
    }
  }
}

TEST(Dunkl, CommutatorsVanishReal) {
  for (const auto& nus : {std::vector<Scalar>{Scalar::rational(1, 2)}, std::vector<Scalar>{Scalar::rational(-3, 5)}}) {
    EXPECT_TRUE(commutator_check(reflection_config(a2(), DunklMode::Real, class_nu(a2(), nus))).passed());
  }
  const auto cfg = reflection_config(b2(), DunklMode::Real, class_nu(b2(), {Scalar(1), Scalar::rational(1, 3)}));
  EXPECT_TRUE(commutator_check(cfg).passed());
  EXPECT_TRUE(equivariance_check(cfg, 3).passed());
}

TEST(Dunkl, CommutatorsVanishComplex) {
  auto g = reflection_config(g312(), DunklMode::Complex,
                             class_nu(g312(), {Scalar::rational(1, 2), Scalar::gaussian(0, 1), Scalar::rational(2, 3)}));
  EXPECT_TRUE(validate_config(g).passed());
  CommutatorOptions opts;
  opts.degree = 5;
  EXPECT_TRUE(commutator_check(g, opts).passed()) << commutator_check(g, opts).checks[0].witness;
  EXPECT_TRUE(equivariance_check(g, 3).passed());
  g.holomorphic = true;
  EXPECT_TRUE(commutator_check(g, opts).passed());
  const auto z = reflection_config(z4(), DunklMode::Complex, class_nu(z4(), {Scalar(1), Scalar(2), Scalar(3)}));
  EXPECT_TRUE(validate_config(z).passed());
  EXPECT_TRUE(commutator_check(z, opts).passed());
}

TEST(Dunkl, FloatOracleAtRandomPoints) {
  // D1 D2 p and D2 D1 p evaluated numerically agree at 20 points.
  const auto cfg = reflection_config(a2(), DunklMode::Real, class_nu(a2(), {Scalar::rational(1, 2)}));
  std::mt19937_64 rng(3);
  std::normal_distribution<double> nd;
  for (const auto& e : monomials_up_to(3, 4)) {
    const auto p = MultiPoly::monomial(e);
    const auto a = dunkl_apply(cfg, 0, dunkl_apply(cfg, 1, p));
    const auto b = dunkl_apply(cfg, 1, dunkl_apply(cfg, 0, p));
    for (int k = 0; k < 20; ++k) {
      std::vector<Scalar> pt;
      for (int i = 0; i < 3; ++i) pt.push_back(Scalar::from_complex({nd(rng), 0.0}));
      EXPECT_NEAR(std::abs((a.evaluate(pt) - b.evaluate(pt)).to_complex()), 0.0, 1e-9);
    }
  }
}

TEST(Dunkl, NonClassConstantMultiplicityFails) {
  auto cfg = reflection_config(b2(), DunklMode::Real, class_nu(b2(), {Scalar(1), Scalar(2)}));
  cfg.data[0].multiplicity = Scalar(5);
  EXPECT_FALSE(validate_config(cfg).passed());
  const auto rep = commutator_check(cfg);
  EXPECT_FALSE(rep.passed());
  EXPECT_FALSE(rep.checks[0].witness.empty());
}

TEST(Dunkl, WrongRootIsNotDivisible) {
  auto cfg = z2_config(Scalar(1));
  GroupSpec spec;
  spec.kind = GroupKind::Matrix;
  spec.degree = 2;
  spec.matrices = {Matrix(2, 2, {-1, 0, 0, 1})};
  auto g = std::make_shared<const GroupTable>(build_group(spec));
  DunklConfig bad{g, SubsetS(*g, {Element{1}}), {{Element{1}, LinearForm({Scalar(0), Scalar(1)}), Scalar(1)}}};
  EXPECT_FALSE(validate_config(bad).passed());
  EXPECT_THROW(dunkl_apply(bad, 1, MultiPoly::variable(2, 0)), NotDivisible);
  EXPECT_THROW(commutator_check(cfg, {.degree = 9}), BudgetExceeded);
}
