#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "tensorval/symtensor.hpp"

using namespace tensorval;

namespace {

SymTensor random_tensor(int dim, int rank, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  SymTensor t(dim, rank);
  for (auto& c : t.coefficients()) c = u(gen);
  return t;
}

std::vector<double> random_vector(int dim, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(dim);
  for (auto& x : v) x = u(gen);
  return v;
}

}  // namespace

TEST(MultiIndex, DegreeAndOrder) {
  const MultiIndex a({2, 0, 1});
  EXPECT_EQ(a.degree(), 3);
  EXPECT_LT(MultiIndex({0, 2}), MultiIndex({1, 1}));
  EXPECT_LT(MultiIndex({1, 1}), MultiIndex({2, 0}));
}

TEST(SymTensor, MonomialsHaveRankDegreeInLexOrder) {
  const SymTensor t(3, 4);
  EXPECT_EQ(t.size(), monomial_count(3, 4));
  EXPECT_EQ(t.size(), 15);
  for (std::size_t i = 0; i < t.monomials().size(); ++i) {
    EXPECT_EQ(t.monomials()[i].degree(), 4);
    if (i) {
      EXPECT_LT(t.monomials()[i - 1], t.monomials()[i]);
    }
  }
}

TEST(SymTensor, RankZeroIsScalar) {
  const SymTensor t = SymTensor::scalar(2, 3.5);
  EXPECT_EQ(t.size(), 1);
  EXPECT_DOUBLE_EQ(t.value(), 3.5);
}

TEST(TensorPower, AxisVector) {
  const std::vector<double> v{1.0, 0.0};
  const SymTensor t = tensor_power(v, 3);
  EXPECT_DOUBLE_EQ(t.coefficient(MultiIndex({3, 0})), 1.0);
  EXPECT_DOUBLE_EQ(t.max_abs(), 1.0);
}

TEST(TensorPower, BinomialExpansion) {
  const std::vector<double> v{1.0, 1.0};
  const SymTensor t = tensor_power(v, 2);
  EXPECT_DOUBLE_EQ(t.coefficient(MultiIndex({2, 0})), 1.0);
  EXPECT_DOUBLE_EQ(t.coefficient(MultiIndex({1, 1})), 2.0);
  EXPECT_DOUBLE_EQ(t.coefficient(MultiIndex({0, 2})), 1.0);
}

TEST(TensorPower, ZerothPowerIsOne) {
  const std::vector<double> v{2.0, 0.0, 0.0};
  const SymTensor t = tensor_power(v, 0);
  EXPECT_EQ(t.rank(), 0);
  EXPECT_DOUBLE_EQ(t.value(), 1.0);
}

TEST(SymProduct, MetricSquared) {
  const SymTensor q = SymTensor::metric(2);
  const SymTensor qq = sym_product(q, q);
  EXPECT_DOUBLE_EQ(qq.coefficient(MultiIndex({4, 0})), 1.0);
  EXPECT_DOUBLE_EQ(qq.coefficient(MultiIndex({2, 2})), 2.0);
  EXPECT_DOUBLE_EQ(qq.coefficient(MultiIndex({0, 4})), 1.0);
  EXPECT_DOUBLE_EQ(qq.coefficient(MultiIndex({3, 1})), 0.0);
}

TEST(SymProduct, AxisSquares) {
  const std::vector<double> e1{1, 0}, e2{0, 1};
  const SymTensor p = sym_product(tensor_power(e1, 2), tensor_power(e2, 2));
  EXPECT_DOUBLE_EQ(p.coefficient(MultiIndex({2, 2})), 1.0);
  EXPECT_DOUBLE_EQ(p.max_abs(), 1.0);
}

TEST(SymProduct, ScalarOneIsIdentity) {
  std::mt19937_64 gen(3);
  const SymTensor a = random_tensor(3, 3, gen);
  EXPECT_EQ(sym_product(a, SymTensor::scalar(3, 1.0)), a);
}

TEST(SymProduct, MatchesPointwiseProductOfPolynomials) {
  std::mt19937_64 gen(4);
  for (int dim = 1; dim <= 4; ++dim) {
    for (int trial = 0; trial < 10; ++trial) {
      const SymTensor a = random_tensor(dim, 2, gen), b = random_tensor(dim, 3, gen);
      const SymTensor ab = sym_product(a, b);
      const auto x = random_vector(dim, gen);
      EXPECT_NEAR(ab.evaluate(x), a.evaluate(x) * b.evaluate(x), 1e-12);
      EXPECT_TRUE(approx_equal(ab, sym_product(b, a)));
    }
  }
}

TEST(MetricOfSubspace, Examples) {
  const std::vector<std::vector<double>> e1{{1.0, 0.0}};
  const SymTensor a = metric_of_subspace(2, e1);
  EXPECT_DOUBLE_EQ(a.coefficient(MultiIndex({2, 0})), 1.0);
  EXPECT_DOUBLE_EQ(a.max_abs(), 1.0);

  const std::vector<std::vector<double>> full{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_TRUE(approx_equal(metric_of_subspace(3, full), SymTensor::metric(3)));

  const double h = 1.0 / std::sqrt(2.0);
  const std::vector<std::vector<double>> diag{{h, h}};
  const SymTensor d = metric_of_subspace(2, diag);
  EXPECT_NEAR(d.coefficient(MultiIndex({2, 0})), 0.5, 1e-15);
  EXPECT_NEAR(d.coefficient(MultiIndex({1, 1})), 1.0, 1e-15);
  EXPECT_NEAR(d.coefficient(MultiIndex({0, 2})), 0.5, 1e-15);
}

TEST(MetricOfSubspace, RejectsNonOrthonormalBasis) {
  const std::vector<std::vector<double>> bad{{1.0, 0.0}, {1.0, 1.0}};
  EXPECT_THROW(metric_of_subspace(2, bad), std::invalid_argument);
}

TEST(MetricOfSubspace, EqualsSumOfSquaredProjections) {
  std::mt19937_64 gen(5);
  // Orthonormal pair from Gram-Schmidt.
  auto a = random_vector(3, gen), b = random_vector(3, gen);
  auto dot = [](const std::vector<double>& x, const std::vector<double>& y) {
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
  };
  const double na = std::sqrt(dot(a, a));
  for (auto& x : a) x /= na;
  const double ab = dot(a, b);
  for (int i = 0; i < 3; ++i) b[i] -= ab * a[i];
  const double nb = std::sqrt(dot(b, b));
  for (auto& x : b) x /= nb;
  const std::vector<std::vector<double>> basis{a, b};
  const SymTensor m = metric_of_subspace(3, basis);
  const auto x = random_vector(3, gen);
  EXPECT_NEAR(m.evaluate(x), dot(a, x) * dot(a, x) + dot(b, x) * dot(b, x), 1e-14);
}

TEST(Apply, Examples) {
  const SymTensor q = SymTensor::metric(2);
  const std::vector<std::vector<double>> e12{{1, 0}, {0, 1}};
  EXPECT_DOUBLE_EQ(tensorval::apply(q, e12), 0.0);
  const std::vector<std::vector<double>> vv{{3, 4}, {3, 4}};
  EXPECT_DOUBLE_EQ(tensorval::apply(q, vv), 25.0);
  const std::vector<double> v{1, 2};
  EXPECT_DOUBLE_EQ(tensorval::apply(tensor_power(v, 2), e12), 2.0);
}

TEST(Apply, DiagonalEqualsEvaluation) {
  std::mt19937_64 gen(6);
  for (int dim = 1; dim <= 4; ++dim) {
    const SymTensor t = random_tensor(dim, 4, gen);
    const auto v = random_vector(dim, gen);
    const std::vector<std::vector<double>> args(4, v);
    EXPECT_NEAR(tensorval::apply(t, args), t.evaluate(v), 1e-12);
  }
}

TEST(Apply, SymmetricInItsArguments) {
  std::mt19937_64 gen(7);
  const SymTensor t = random_tensor(3, 3, gen);
  std::vector<std::vector<double>> args{random_vector(3, gen), random_vector(3, gen), random_vector(3, gen)};
  const double base = tensorval::apply(t, args);
  std::swap(args[0], args[2]);
  EXPECT_NEAR(tensorval::apply(t, args), base, 1e-13);
  std::swap(args[0], args[1]);
  EXPECT_NEAR(tensorval::apply(t, args), base, 1e-13);
}

TEST(Component, SymmetricAndConsistentWithApply) {
  std::mt19937_64 gen(8);
  const SymTensor t = random_tensor(3, 3, gen);
  const std::vector<int> idx{0, 2, 1}, perm{2, 1, 0};
  EXPECT_DOUBLE_EQ(t.component(idx), t.component(perm));
  const std::vector<std::vector<double>> basis_args{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
  EXPECT_NEAR(t.component(idx), tensorval::apply(t, basis_args), 1e-14);
}

TEST(Combine, Examples) {
  std::mt19937_64 gen(9);
  const SymTensor a = random_tensor(2, 3, gen);
  const std::vector<std::pair<double, SymTensor>> cancel{{1.0, a}, {-1.0, a}};
  EXPECT_TRUE(combine(cancel).is_zero());
  const SymTensor q = SymTensor::metric(2);
  const std::vector<std::pair<double, SymTensor>> twice{{2.0, q}};
  EXPECT_DOUBLE_EQ(combine(twice).coefficient(MultiIndex({2, 0})), 2.0);
  EXPECT_DOUBLE_EQ(combine(twice).coefficient(MultiIndex({0, 2})), 2.0);
  const std::vector<std::pair<double, SymTensor>> halves{{0.5, q}, {0.5, q}};
  EXPECT_EQ(combine(halves), q);
}

TEST(Combine, RejectsMixedShapes) {
  const std::vector<std::pair<double, SymTensor>> mixed{{1.0, SymTensor(2, 1)}, {1.0, SymTensor(2, 2)}};
  EXPECT_THROW(combine(mixed), std::invalid_argument);
}

TEST(Pullback, SubstitutesFrameCoordinates) {
  std::mt19937_64 gen(10);
  const SymTensor local = random_tensor(2, 3, gen);
  const std::vector<std::vector<double>> frame{random_vector(3, gen), random_vector(3, gen)};
  const SymTensor g = pullback(local, frame, 3);
  const auto x = random_vector(3, gen);
  const std::vector<double> y{frame[0][0] * x[0] + frame[0][1] * x[1] + frame[0][2] * x[2],
                              frame[1][0] * x[0] + frame[1][1] * x[1] + frame[1][2] * x[2]};
  EXPECT_NEAR(g.evaluate(x), local.evaluate(y), 1e-13);
}
