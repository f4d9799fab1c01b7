#include <gtest/gtest.h>

#include <random>

#include <dunkl_forge/errors.hpp>
#include <dunkl_forge/poly.hpp>

using namespace dforge;

namespace {

MultiPoly random_sparse(std::mt19937_64& rng, std::size_t n, int max_deg, int terms) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> coef(-5, 5);
  MultiPoly p(n);
  for (int t = 0; t < terms; ++t) {
    Exponent e(n);
    for (auto& v : e) v = static_cast<std::uint8_t>(deg(rng));
    p.add_term(e, Scalar::rational(coef(rng), 1 + static_cast<long>(rng() % 3)));
  }
  return p;
}

}  // namespace

TEST(Scalar, RationalArithmetic) {
  const Scalar a = Scalar::rational(3, 4);
  const Scalar b = Scalar::rational(-1, 6);
  EXPECT_EQ((a + b).to_string(), "7/12");
  EXPECT_EQ((a * b).to_string(), "-1/8");
  EXPECT_EQ((a / b).to_string(), "-9/2");
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Scalar, GaussianInverse) {
  const Scalar z = Scalar::gaussian(1, 2);
  EXPECT_TRUE((z * z.inverse()).is_one());
  EXPECT_EQ(z.conj(), Scalar::gaussian(1, -2));
  EXPECT_EQ(Scalar::gaussian(0, 1) * Scalar::gaussian(0, 1), Scalar(-1));
}

TEST(Scalar, CyclotomicIdentities) {
  for (int m : {2, 3, 5, 7, 11, 13}) {
    const Scalar z = Scalar::zeta(m);
    Scalar power(1);
    Scalar sum;
    for (int k = 0; k < m; ++k) {
      sum += power;
      power *= z;
    }
    EXPECT_TRUE(power.is_one()) << "m=" << m;
    EXPECT_TRUE(sum.is_zero()) << "m=" << m;
  }
  // zeta_12^3 = i once both sit in Q(zeta_12)
  EXPECT_EQ(Scalar::zeta(12, 3), Scalar::gaussian(0, 1));
  EXPECT_EQ(Scalar::zeta(3).conj(), Scalar::zeta(3, 2));
}

TEST(Scalar, FieldAxiomsSpotCheck) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<mpq_class> ca, cb, cc;
    for (int k = 0; k < 6; ++k) {
      ca.emplace_back(d(rng));
      cb.emplace_back(d(rng));
      cc.emplace_back(d(rng));
    }
    const Scalar a = Scalar::cyclotomic(9, ca);
    const Scalar b = Scalar::cyclotomic(9, cb);
    const Scalar c = Scalar::cyclotomic(9, cc);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
  }
}

TEST(Scalar, FloatMode) {
  const Scalar f = Scalar::from_complex({0.5, 0.25});
  EXPECT_TRUE(f.is_float());
  EXPECT_TRUE((f + Scalar(1)).is_float());
  EXPECT_EQ(f * Scalar(2), Scalar::from_complex({1.0, 0.5}));
}

TEST(MultiPoly, DerivativeAndEvaluate) {
  const MultiPoly x1 = MultiPoly::variable(2, 0);
  const MultiPoly x2 = MultiPoly::variable(2, 1);
  EXPECT_EQ((x1 * x1 * x2).partial_derivative(0), x1 * x2 * Scalar(2));
  const MultiPoly p = x1 * x2 + MultiPoly::constant(2, 1);
  EXPECT_EQ(p.evaluate({Scalar(2), Scalar(3)}), Scalar(7));
}

TEST(MultiPoly, LeibnizOnRandomPairs) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiPoly p = random_sparse(rng, 3, 4, 5);
    const MultiPoly q = random_sparse(rng, 3, 4, 5);
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ((p * q).partial_derivative(j), p.partial_derivative(j) * q + p * q.partial_derivative(j));
    }
  }
}

TEST(MultiPoly, EvaluateIsRingHomomorphism) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly p = random_sparse(rng, 2, 3, 4);
    const MultiPoly q = random_sparse(rng, 2, 3, 4);
    const std::vector<Scalar> pt{Scalar::gaussian(1, static_cast<long>(rng() % 5)), Scalar::zeta(3)};
    EXPECT_EQ((p * q).evaluate(pt), p.evaluate(pt) * q.evaluate(pt));
    EXPECT_EQ((p + q).evaluate(pt), p.evaluate(pt) + q.evaluate(pt));
  }
}

TEST(MultiPoly, DimensionMismatch) {
  EXPECT_THROW(MultiPoly::variable(2, 0) + MultiPoly::variable(3, 0), DimensionMismatch);
}

TEST(ActByMatrix, IdentityAndSwap) {
  const MultiPoly x1 = MultiPoly::variable(2, 0);
  const MultiPoly x2 = MultiPoly::variable(2, 1);
  const MultiPoly p = x1 * x2 * x2;
  EXPECT_EQ(act_by_matrix(p, Matrix::identity(2)), p);
  EXPECT_EQ(act_by_matrix(p, Matrix(2, 2, {0, 1, 1, 0})), x2 * x1 * x1);
}

TEST(ActByMatrix, ConjugateFlag) {
  const Scalar i = Scalar::gaussian(0, 1);
  const MultiPoly x = MultiPoly::variable(1, 0);
  const Matrix g(1, 1, {i});
  EXPECT_EQ(act_by_matrix(x, g, false), x * i);
  EXPECT_EQ(act_by_matrix(x, g, true), x * (-i));
}

TEST(ActByMatrix, OrderLaw) {
  // (p_g)_h = p_{gh} with p_g(x) = p(x g)
  std::vector<Matrix> s3;
  const std::vector<std::vector<int>> perms{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  for (const auto& p : perms) {
    Matrix m(3, 3);
    for (int i = 0; i < 3; ++i) m(i, p[i]) = Scalar(1);
    s3.push_back(m);
  }
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const MultiPoly p = random_sparse(rng, 3, 3, 4);
    for (const auto& g : s3) {
      for (const auto& h : s3) {
        EXPECT_EQ(act_by_matrix(act_by_matrix(p, g), h), act_by_matrix(p, h * g));
      }
    }
  }
}

TEST(DivideByLinear, Examples) {
  const MultiPoly x1 = MultiPoly::variable(2, 0);
  const MultiPoly x2 = MultiPoly::variable(2, 1);
  EXPECT_EQ(divide_by_linear(x1 * x1 - x2 * x2, LinearForm({Scalar(1), Scalar(-1)})), x1 + x2);
  const MultiPoly x = MultiPoly::variable(1, 0);
  const MultiPoly diff = x - act_by_matrix(x, Matrix(1, 1, {-1}));
  EXPECT_EQ(divide_by_linear(diff, LinearForm({Scalar(1)})), MultiPoly::constant(1, 2));
  EXPECT_THROW(divide_by_linear(x + MultiPoly::constant(1, 1), LinearForm({Scalar(1)})), NotDivisible);
}

TEST(DivideByLinear, ReflectionDifferencesUpToDegreeEight) {
  // B2 reflections with their roots
  const std::vector<std::pair<Matrix, LinearForm>> data{
      {Matrix(2, 2, {-1, 0, 0, 1}), LinearForm({Scalar(1), Scalar(0)})},
      {Matrix(2, 2, {1, 0, 0, -1}), LinearForm({Scalar(0), Scalar(1)})},
      {Matrix(2, 2, {0, 1, 1, 0}), LinearForm({Scalar(1), Scalar(-1)})},
      {Matrix(2, 2, {0, -1, -1, 0}), LinearForm({Scalar(1), Scalar(1)})},
  };
  for (const auto& e : monomials_up_to(2, 8)) {
    const MultiPoly p = MultiPoly::monomial(e);
    for (const auto& [s, alpha] : data) {
      EXPECT_NO_THROW(divide_by_linear(p - act_by_matrix(p, s), alpha));
    }
  }
}

TEST(Monomials, Count) {
  EXPECT_EQ(monomials_up_to(3, 6).size(), 84U);  // C(9,3)
  EXPECT_EQ(monomials_up_to(2, 0).size(), 1U);
}
