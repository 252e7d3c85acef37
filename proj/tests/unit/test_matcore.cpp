#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "framekit/matcore.hpp"
#include "framekit/random.hpp"
#include "support.hpp"

using namespace framekit;
using fk_test::oracles;

namespace {

template <class S>
Matrix<S> random_self_adjoint(SplitMix64& rng, Index n) {
  Matrix<S> a(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) a(i, j) = rng.normal_scalar<S>();
  return (a + a.adjoint()) / 2.0;
}

}  // namespace

TEST(SplitMix64, KnownAnswers) {
  SplitMix64 a(1234567);
  EXPECT_EQ(a.next(), 6457827717110365317ULL);
  EXPECT_EQ(a.next(), 3203168211198807973ULL);
  EXPECT_EQ(a.next(), 9817491932198370423ULL);
  SplitMix64 zero(0);
  EXPECT_EQ(zero.next(), 0xe220a8397b1dcdafULL);
}

TEST(HermitianEig, SmallCases) {
  const auto id = hermitian_eig<double>(MatrixXd::Identity(2, 2));
  EXPECT_DOUBLE_EQ(id.eigenvalues(0), 1.0);
  EXPECT_DOUBLE_EQ(id.eigenvalues(1), 1.0);

  MatrixXd d(2, 2);
  d << 1, 0, 0, 3;
  const auto dd = hermitian_eig(d);
  EXPECT_DOUBLE_EQ(dd.eigenvalues(0), 3.0);
  EXPECT_NEAR(std::abs(dd.eigenvectors(1, 0)), 1.0, 1e-15);

  MatrixXd c(2, 2);
  c << 1, 0.5, 0.5, 1;
  const auto cc = hermitian_eig(c);
  EXPECT_NEAR(cc.eigenvalues(0), 1.5, 1e-14);
  EXPECT_NEAR(cc.eigenvalues(1), 0.5, 1e-14);
}

TEST(HermitianEig, FrozenNumpySpectra) {
  for (const auto& c : oracles()["hermitian"]) {
    const VectorXd want = fk_test::vector_from(c["eigenvalues"]);
    VectorXd got;
    if (c["field"] == "real")
      got = hermitian_eig(fk_test::matrix_from<double>(c["matrix"])).eigenvalues;
    else
      got = hermitian_eig(fk_test::matrix_from<cdouble>(c["matrix"])).eigenvalues;
    EXPECT_LE((got - want).cwiseAbs().maxCoeff(), 1e-12) << "n=" << c["n"] << " " << c["field"];
  }
}

template <class S>
void reconstruction_property() {
  SplitMix64 rng(11);
  for (Index n = 1; n <= 12; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const Matrix<S> a = random_self_adjoint<S>(rng, n);
      const auto e = hermitian_eig(a);
      const Matrix<S> v = e.eigenvectors;
      const Matrix<S> back = v * e.eigenvalues.template cast<S>().asDiagonal() * v.adjoint();
      EXPECT_LE((a - back).norm(), 1e-10 * a.norm());
      EXPECT_LE((v.adjoint() * v - Matrix<S>::Identity(n, n)).norm(), 1e-10 * static_cast<double>(n));
      for (Index k = 1; k < n; ++k) EXPECT_GE(e.eigenvalues(k - 1), e.eigenvalues(k));
      Eigen::SelfAdjointEigenSolver<Matrix<S>> ref(a);
      EXPECT_LE((fk_test::sorted_desc(ref.eigenvalues()) - e.eigenvalues).cwiseAbs().maxCoeff(), 1e-11 * (1.0 + a.norm()));
    }
  }
}

TEST(HermitianEig, ReconstructionReal) { reconstruction_property<double>(); }
TEST(HermitianEig, ReconstructionComplex) { reconstruction_property<cdouble>(); }

TEST(HermitianEig, RejectsNonSelfAdjoint) {
  MatrixXd a(2, 2);
  a << 1, 2, 0, 1;
  EXPECT_THROW(hermitian_eig(a), error);
  EXPECT_THROW(hermitian_eig<double>(MatrixXd::Zero(2, 3)), error);
}

TEST(HermitianEig, PhaseConvention) {
  SplitMix64 rng(12);
  const auto e = hermitian_eig(random_self_adjoint<cdouble>(rng, 5));
  for (Index k = 0; k < 5; ++k) {
    for (Index i = 0; i < 5; ++i) {
      if (std::abs(e.eigenvectors(i, k)) > 1e-10) {
        EXPECT_EQ(e.eigenvectors(i, k).imag(), 0.0);
        EXPECT_GT(e.eigenvectors(i, k).real(), 0.0);
        break;
      }
    }
  }
}

TEST(NumericalRank, Basics) {
  EXPECT_EQ(numerical_rank<double>(MatrixXd::Identity(3, 3)), 3);
  EXPECT_EQ(numerical_rank<double>(MatrixXd::Zero(2, 2)), 0);
  const double r = 1.0 / std::sqrt(2.0);
  MatrixXd stacked(4, 3);
  VectorXd a(2), b(2), c(2);
  a << 1, 0;
  b << 0, 1;
  c << r, r;
  stacked << vectorize_outer(a), vectorize_outer(b), vectorize_outer(c);
  EXPECT_EQ(numerical_rank(stacked), 3);
}

TEST(NumericalRank, FrozenExactRanks) {
  for (const auto& c : oracles()["integer_rank"]) {
    const MatrixXd m = fk_test::matrix_from<double>(c["matrix"]);
    EXPECT_EQ(numerical_rank(m), c["rank"].get<Index>()) << c["matrix"].dump();
  }
}

TEST(NumericalRank, ExplicitTolerance) {
  VectorXd d(3);
  d << 1.0, 1e-6, 1e-12;
  const MatrixXd m = d.asDiagonal();
  EXPECT_EQ(numerical_rank(m), 3);
  EXPECT_EQ(numerical_rank(m, 1e-9), 2);
  EXPECT_EQ(numerical_rank(m, 1e-3), 1);
}

TEST(SingularValues, RectangularViaDilation) {
  MatrixXd a(3, 2);
  a << 3, 0, 0, 2, 0, 0;
  const VectorXd s = singular_values(a);
  ASSERT_EQ(s.size(), 2);
  EXPECT_NEAR(s(0), 3.0, 1e-14);
  EXPECT_NEAR(s(1), 2.0, 1e-14);
}

TEST(Hadamard, Examples) {
  MatrixXd a(2, 2), b(2, 2), want(2, 2);
  a << 1, 2, 3, 4;
  b << 5, 6, 7, 8;
  want << 5, 12, 21, 32;
  EXPECT_EQ(MatrixXd(hadamard(a, b)), want);
  EXPECT_EQ(MatrixXd(hadamard(a, MatrixXd::Ones(2, 2))), a);

  Matrix<cdouble> g(2, 2);
  g << 1.0, cdouble(0, 0.5), cdouble(0, -0.5), 1.0;
  const Matrix<cdouble> h = hadamard(g, g.conjugate());
  EXPECT_NEAR(h(0, 1).real(), 0.25, 1e-15);
  EXPECT_EQ(h(0, 1).imag(), 0.0);
}

TEST(Hadamard, EigenvalueEnvelope) {
  SplitMix64 rng(13);
  for (int rep = 0; rep < 50; ++rep) {
    const Index n = 1 + static_cast<Index>(rng.next() % 6);
    MatrixXd x(n, n);
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) x(i, j) = rng.normal();
    const MatrixXd a = x * x.transpose();
    const MatrixXd b = random_self_adjoint<double>(rng, n);
    const VectorXd lb = hermitian_eig(b).eigenvalues;
    const VectorXd lab = hermitian_eig(MatrixXd(hadamard(a, b))).eigenvalues;
    const double lo = std::min(a.diagonal().minCoeff() * lb(n - 1), a.diagonal().maxCoeff() * lb(n - 1));
    const double hi = std::max(a.diagonal().maxCoeff() * lb(0), a.diagonal().minCoeff() * lb(0));
    EXPECT_GE(lab(n - 1), lo - 1e-10 * (1.0 + a.norm() * b.norm()));
    EXPECT_LE(lab(0), hi + 1e-10 * (1.0 + a.norm() * b.norm()));
  }
}

TEST(Kronecker, ExamplesAndSpectrum) {
  EXPECT_EQ(MatrixXd(kronecker(MatrixXd::Identity(2, 2), MatrixXd::Identity(2, 2))), MatrixXd::Identity(4, 4));
  VectorXd p(2), q(2), want(4);
  p << 2, 3;
  q << 5, 7;
  want << 10, 14, 15, 21;
  const MatrixXd k = kronecker(MatrixXd(p.asDiagonal()), MatrixXd(q.asDiagonal()));
  EXPECT_EQ(VectorXd(k.diagonal()), want);

  SplitMix64 rng(14);
  for (int rep = 0; rep < 20; ++rep) {
    const Matrix<cdouble> a = random_self_adjoint<cdouble>(rng, 2);
    const Matrix<cdouble> b = random_self_adjoint<cdouble>(rng, 3);
    const VectorXd la = hermitian_eig(a).eigenvalues, lb = hermitian_eig(b).eigenvalues;
    VectorXd products(6);
    for (Index i = 0; i < 2; ++i)
      for (Index j = 0; j < 3; ++j) products(i * 3 + j) = la(i) * lb(j);
    const VectorXd got = hermitian_eig(Matrix<cdouble>(kronecker(a, b))).eigenvalues;
    EXPECT_LE((got - fk_test::sorted_desc(products)).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(FrobeniusIp, Examples) {
  EXPECT_DOUBLE_EQ(frobenius_ip(MatrixXd::Identity(2, 2), MatrixXd::Identity(2, 2)), 2.0);
  VectorXd e1(2), e2(2), s(2);
  e1 << 1, 0;
  e2 << 0, 1;
  s << 1, 1;
  s /= std::sqrt(2.0);
  EXPECT_DOUBLE_EQ(frobenius_ip(MatrixXd(e1 * e1.transpose()), MatrixXd(e2 * e2.transpose())), 0.0);
  EXPECT_NEAR(frobenius_ip(MatrixXd(e1 * e1.transpose()), MatrixXd(s * s.transpose())), 0.5, 1e-15);
}

TEST(VectorizeOuter, Examples) {
  VectorXd e1(2), s(2);
  e1 << 1, 0;
  s << 1, 1;
  s /= std::sqrt(2.0);
  EXPECT_EQ(vectorize_outer(e1), (VectorXd(4) << 1, 0, 0, 0).finished());
  EXPECT_LE((vectorize_outer(s) - VectorXd::Constant(4, 0.5)).norm(), 1e-15);

  Vector<cdouble> phi(2);
  phi << 1.0, cdouble(0, 1);
  phi /= std::sqrt(2.0);
  Vector<cdouble> want(4);
  want << 0.5, cdouble(0, -0.5), cdouble(0, 0.5), 0.5;
  EXPECT_LE((vectorize_outer(phi) - want).norm(), 1e-15);
}

TEST(SylvesterDet, Examples) {
  const MatrixXd ones = MatrixXd::Ones(3, 1);
  const auto [l, r] = sylvester_det_check<double>(ones, ones.transpose());
  EXPECT_NEAR(l, 4.0, 1e-12);
  EXPECT_NEAR(r, 4.0, 1e-12);
  const auto [z1, z2] = sylvester_det_check<double>(MatrixXd::Zero(2, 3), MatrixXd::Zero(3, 2));
  EXPECT_EQ(z1, 1.0);
  EXPECT_EQ(z2, 1.0);

  SplitMix64 rng(15);
  for (int rep = 0; rep < 50; ++rep) {
    Matrix<cdouble> s(3, 2), t(2, 3);
    for (Index i = 0; i < 6; ++i) s.data()[i] = rng.normal_scalar<cdouble>(), t.data()[i] = rng.normal_scalar<cdouble>();
    const auto [a, b] = sylvester_det_check(s, t);
    EXPECT_LE(std::abs(a - b), 1e-10 * std::max(1.0, std::abs(a)));
  }
  EXPECT_THROW(sylvester_det_check<double>(MatrixXd::Zero(2, 3), MatrixXd::Zero(2, 3)), error);
}

TEST(RankTolerance, EnvironmentOverride) {
  EXPECT_DOUBLE_EQ(default_rank_tol(3, 2, 10.0), 3.0 * std::numeric_limits<double>::epsilon() * 10.0);
  setenv("FRAMEKIT_TOL", "0.25", 1);
  EXPECT_DOUBLE_EQ(default_rank_tol(3, 2, 10.0), 0.25);
  VectorXd d(2);
  d << 1.0, 0.2;
  EXPECT_EQ(numerical_rank(MatrixXd(d.asDiagonal())), 1);
  unsetenv("FRAMEKIT_TOL");
  EXPECT_EQ(numerical_rank(MatrixXd(d.asDiagonal())), 2);
}
