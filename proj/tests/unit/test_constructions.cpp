#include <gtest/gtest.h>

#include "framekit/constructions.hpp"
#include "framekit/outer.hpp"
#include "support.hpp"

using namespace framekit;

TEST(Eij, RealBasis) {
  const Frame<double> one = eij_basis(1);
  EXPECT_EQ(one.size(), 1);
  EXPECT_EQ(one.matrix()(0, 0), 1.0);

  const Frame<double> two = eij_basis(2);
  ASSERT_EQ(two.size(), 3);
  const double r2 = 1.0 / std::sqrt(2.0);
  MatrixXd want(2, 3);
  want << 1, 0, r2, 0, 1, r2;
  EXPECT_LE((two.matrix() - want).norm(), 1e-15);

  for (Index n = 1; n <= 5; ++n) {
    const auto os = induce(eij_basis(n));
    EXPECT_EQ(os.rank, n * (n + 1) / 2);
    EXPECT_TRUE(eij_basis(n).is_unit_norm());
  }
}

TEST(Eij, ComplexBasis) {
  EXPECT_EQ(complex_eij_basis(1).size(), 1);
  const Frame<cdouble> two = complex_eij_basis(2);
  ASSERT_EQ(two.size(), 4);
  EXPECT_EQ(induce(two).rank, 4);
  const Matrix<cdouble> outer = two.vector(3) * two.vector(3).adjoint();
  EXPECT_NEAR(outer(0, 1).imag(), -0.5, 1e-15);
  EXPECT_NEAR(outer(1, 0).imag(), 0.5, 1e-15);
  for (Index n = 1; n <= 4; ++n) EXPECT_EQ(induce(complex_eij_basis(n)).rank, n * n);
}

TEST(Simplex, Geometry) {
  const Frame<double> one = simplex(1);
  ASSERT_EQ(one.size(), 2);
  EXPECT_NEAR(one.matrix()(0, 0) * one.matrix()(0, 1), -1.0, 1e-15);

  for (Index n = 2; n <= 6; ++n) {
    const Frame<double> s = simplex(n);
    ASSERT_EQ(s.dim(), n);
    ASSERT_EQ(s.size(), n + 1);
    EXPECT_TRUE(s.is_unit_norm());
    const MatrixXd g = gram(s);
    for (Index i = 0; i <= n; ++i)
      for (Index j = 0; j <= n; ++j)
        if (i != j) EXPECT_NEAR(g(i, j), -1.0 / static_cast<double>(n), 1e-12);
    const BoundsReport b = frame_bounds(s);
    EXPECT_TRUE(b.tight);
    EXPECT_NEAR(b.upper, static_cast<double>(n + 1) / static_cast<double>(n), 1e-12);
  }
}

TEST(Biangular, TableAgainstNumpy) {
  for (const auto& c : fk_test::oracles()["biangular"]) {
    const Index n = c["n"].get<Index>();
    const auto os = induce(biangular(n));
    const VectorXd l = hermitian_eig(os.gram_op).eigenvalues;
    EXPECT_NEAR(std::max(l(l.size() - 1), 0.0), c["lower"].get<double>(), 1e-9) << "n=" << n;
    EXPECT_NEAR(l(0), c["upper"].get<double>(), 1e-9) << "n=" << n;
    EXPECT_EQ(is_independent(os), n != 3) << "n=" << n;
  }
}

TEST(Biangular, ExactTableValues) {
  EXPECT_NEAR(outer_riesz_bounds(induce(biangular(2))).lower, 0.75, 1e-12);
  EXPECT_NEAR(outer_riesz_bounds(induce(biangular(4))).lower, 5.0 / 36.0, 1e-12);
  EXPECT_NEAR(outer_riesz_bounds(induce(biangular(5))).lower, 3.0 / 8.0, 1e-12);
  EXPECT_NEAR(outer_riesz_bounds(induce(biangular(6))).lower, 63.0 / 100.0, 1e-12);
  for (Index n = 2; n <= 7; ++n) {
    EXPECT_TRUE(frame_bounds(biangular(n)).tight);
    EXPECT_TRUE(biangular(n).is_unit_norm());
  }
  EXPECT_THROW(biangular(1), error);
}

TEST(EpsilonPair, VectorsAndDomain) {
  const Frame<double> f = epsilon_pair(0.25);
  EXPECT_EQ(f.vector(0), (VectorXd(2) << 0, 1).finished());
  EXPECT_NEAR(f.vector(0).dot(f.vector(1)), 0.5, 1e-15);
  EXPECT_TRUE(f.is_unit_norm());
  EXPECT_THROW(epsilon_pair(0.0), error);
  EXPECT_THROW(epsilon_pair(1.0), error);
}

TEST(RandomUnit, Deterministic) {
  EXPECT_EQ(random_unit<double>(2, 3, 42), random_unit<double>(2, 3, 42));
  EXPECT_FALSE(random_unit<double>(2, 3, 42) == random_unit<double>(2, 3, 43));
  EXPECT_TRUE(random_unit<cdouble>(4, 9, 5).is_unit_norm());
  EXPECT_THROW(random_unit<double>(2, 0, 1), error);
}

TEST(RandomUnit, GenericIndependenceUpToAmbientDimension) {
  long dependent = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const Index n = 2 + static_cast<Index>(seed % 3);
    const Index m = 1 + static_cast<Index>(seed % static_cast<std::uint64_t>(n * (n + 1) / 2));
    if (!is_independent(induce(random_unit<double>(n, m, seed)))) ++dependent;
  }
  EXPECT_EQ(dependent, 0);
}

TEST(Build, SpecsAndNames) {
  for (ConstructionKind k : {ConstructionKind::orthonormal, ConstructionKind::eij, ConstructionKind::complex_eij,
                             ConstructionKind::simplex, ConstructionKind::biangular, ConstructionKind::epsilon_pair,
                             ConstructionKind::random_unit})
    EXPECT_EQ(parse_construction_kind(to_string(k)), k);
  EXPECT_FALSE(parse_construction_kind("nonsense").has_value());

  ConstructionSpec spec;
  spec.kind = ConstructionKind::random_unit;
  spec.n = 3;
  spec.m = 5;
  spec.seed = 7;
  spec.field = Field::complex;
  const AnyFrame f = build(spec);
  ASSERT_TRUE(std::holds_alternative<Frame<cdouble>>(f));
  EXPECT_EQ(std::get<Frame<cdouble>>(f), random_unit<cdouble>(3, 5, 7));

  spec.kind = ConstructionKind::simplex;
  spec.n = 0;
  EXPECT_THROW(build(spec), error);
  spec.kind = ConstructionKind::epsilon_pair;
  spec.eps = 1.5;
  EXPECT_THROW(build(spec), error);
}
