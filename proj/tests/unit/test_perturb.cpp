#include <gtest/gtest.h>

#include "framekit/constructions.hpp"
#include "framekit/perturb.hpp"
#include "framekit/random.hpp"
#include "support.hpp"

using namespace framekit;

namespace {

const double r2 = 1.0 / std::sqrt(2.0);

template <class S>
double total_movement(const Frame<S>& a, const Frame<S>& b) {
  double sum = 0.0;
  for (Index i = 0; i < a.size(); ++i) sum += (a.vector(i) - b.vector(i)).norm();
  return sum;
}

}  // namespace

TEST(PerturbedRieszBounds, Examples) {
  const auto [a, b] = perturbed_riesz_bounds(1.0, 1.0, 0.0);
  EXPECT_DOUBLE_EQ(a, 1.0);
  EXPECT_DOUBLE_EQ(b, 1.0);
  const auto [c, d] = perturbed_riesz_bounds(1.0, 4.0, 0.25);
  EXPECT_NEAR(c, 0.25, 1e-15);
  EXPECT_NEAR(d, 6.25, 1e-15);
  EXPECT_THROW(perturbed_riesz_bounds(1.0, 2.0, 1.0), error);
  EXPECT_THROW(perturbed_riesz_bounds(2.0, 1.0, 0.1), error);
  EXPECT_THROW(perturbed_riesz_bounds(0.0, 1.0, 0.1), error);
}

TEST(PerturbedRieszBounds, EnvelopeHolds) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Frame<double> f = random_unit<double>(4, 3, seed);
    const BoundsReport b = riesz_bounds(f);
    SplitMix64 rng(seed);
    MatrixXd delta(4, 3);
    for (Index i = 0; i < delta.size(); ++i) delta.data()[i] = rng.normal();
    const double eps_sq = 0.8 * b.lower;
    delta *= std::sqrt(eps_sq) / delta.norm();
    const BoundsReport p = riesz_bounds(Frame<double>(MatrixXd(f.matrix() + delta)));
    const auto [lo, hi] = perturbed_riesz_bounds(b.lower, b.upper, eps_sq);
    EXPECT_GE(p.lower, lo - 1e-9);
    EXPECT_LE(p.upper, hi + 1e-9);
  }
}

TEST(OuterDistance, Examples) {
  VectorXd e1(2), e2(2), s(2);
  e1 << 1, 0;
  e2 << 0, 1;
  s << r2, r2;
  EXPECT_NEAR(outer_distance(e1, e1), 0.0, 1e-15);
  EXPECT_NEAR(outer_distance(e1, e2), 2.0, 1e-15);
  EXPECT_NEAR(outer_distance(e1, s), 1.0, 1e-15);
  EXPECT_NEAR(2.0 * (e1 - s).squaredNorm(), 2.0 * (2.0 - std::sqrt(2.0)), 1e-15);
  EXPECT_THROW(outer_distance(VectorXd(2.0 * e1), s), error);
}

TEST(OuterDistance, ClosedFormMatchesDirect) {
  SplitMix64 rng(41);
  for (int rep = 0; rep < 300; ++rep) {
    const Vector<cdouble> a = rng.unit_vector<cdouble>(3), b = rng.unit_vector<cdouble>(3);
    const double direct = (Matrix<cdouble>(a * a.adjoint()) - Matrix<cdouble>(b * b.adjoint())).squaredNorm();
    EXPECT_NEAR(outer_distance(a, b), direct, 1e-12);
    EXPECT_LE(outer_distance(a, b), 2.0 * (a - b).squaredNorm() + 1e-12);
  }
}

TEST(IndependenceRadius, Examples) {
  EXPECT_NEAR(independence_radius(induce(orthonormal<double>(3))).radius, 0.5, 1e-14);
  const IndependenceRadius e = independence_radius(induce(epsilon_pair(0.25)));
  EXPECT_NEAR(e.radius, 0.375, 1e-14);
  EXPECT_NEAR(e.lower_at(0.0), 0.75, 1e-14);
  EXPECT_NEAR(e.upper_at(0.0), 1.25, 1e-14);
  EXPECT_THROW(independence_radius(induce(biangular(3))), error);
}

TEST(RescaleInvariance, Examples) {
  EXPECT_TRUE(rescale_invariance_check(eij_basis(3), MatrixXd(MatrixXd::Identity(3, 3))));
  const MatrixXd squash = (VectorXd(3) << 1, 1e-3, 1e-3).finished().asDiagonal();
  EXPECT_TRUE(rescale_invariance_check(eij_basis(3), squash));
  SplitMix64 rng(42);
  for (int rep = 0; rep < 30; ++rep) {
    Matrix<cdouble> s(3, 3);
    for (Index i = 0; i < 9; ++i) s.data()[i] = rng.normal_scalar<cdouble>();
    EXPECT_TRUE(rescale_invariance_check(random_unit<cdouble>(3, 1 + rep % 9, static_cast<std::uint64_t>(rep)), s));
  }
  EXPECT_THROW(rescale_invariance_check(eij_basis(2), MatrixXd(MatrixXd::Zero(2, 2))), error);
}

TEST(NearbyBasis, Examples) {
  VectorXd e1(2);
  e1 << 1, 0;
  const Frame<double> b = nearby_independent_basis(e1, 0.5);
  ASSERT_EQ(b.size(), 3);
  EXPECT_TRUE(b.is_unit_norm());
  EXPECT_EQ(induce(b).rank, 3);
  for (Index i = 0; i < 3; ++i) EXPECT_LT((b.vector(i) - e1).squaredNorm(), 0.5);

  Vector<cdouble> psi(2);
  psi << r2, cdouble(0, r2);
  const Frame<cdouble> c = nearby_independent_basis(psi, 0.3);
  ASSERT_EQ(c.size(), 4);
  EXPECT_EQ(induce(c).rank, 4);
  for (Index i = 0; i < 4; ++i) EXPECT_LT((c.vector(i) - psi).squaredNorm(), 0.3);

  const Frame<double> wide = nearby_independent_basis(e1, 4.0);
  EXPECT_EQ(induce(wide).rank, 3);
}

TEST(NearbyBasis, SmallBudgets) {
  SplitMix64 rng(43);
  for (double eps : {1e-2, 1e-4, 1e-6}) {
    const VectorXd psi = rng.unit_vector<double>(3);
    const Frame<double> b = nearby_independent_basis(psi, eps);
    EXPECT_EQ(b.size(), 6);
    for (Index i = 0; i < 6; ++i) EXPECT_LT((b.vector(i) - psi).squaredNorm(), eps);
  }
}

TEST(Nudge, Examples) {
  const Frame<double> o = orthonormal<double>(3);
  const auto same = nudge_to_independence(o, 0.1);
  EXPECT_EQ(same.frame, o);
  EXPECT_TRUE(same.replaced.empty());

  MatrixXd m(2, 3);
  m << 1, 1, 0, 0, 0, 1;
  const Frame<double> f(m);
  const auto r = nudge_to_independence(f, 0.1);
  EXPECT_TRUE(is_independent(induce(r.frame)));
  EXPECT_LT(total_movement(f, r.frame), 0.1);
  EXPECT_EQ(r.replaced, std::vector<Index>{1});
  EXPECT_TRUE(r.frame.is_unit_norm());

  const Frame<double> b = biangular(3);
  const auto rb = nudge_to_independence(b, 0.05);
  EXPECT_TRUE(is_independent(induce(rb.frame)));
  EXPECT_LT(rb.movement, 0.05);

  EXPECT_THROW(nudge_to_independence(eij_basis(2).appended((VectorXd(2) << 1, 0).finished()), 0.1), error);
  EXPECT_THROW(nudge_to_independence(Frame<double>(MatrixXd::Identity(2, 2) * 2.0), 0.1), error);
}

TEST(Nudge, RandomDependentFrames) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Index n = 2 + static_cast<Index>(seed % 3);
    const Frame<cdouble> base = random_unit<cdouble>(n, 2, seed);
    const Frame<cdouble> f = base.appended(base.vector(0) * std::polar(1.0, 0.7));
    const double eps = seed % 2 == 0 ? 0.1 : 0.01;
    const auto r = nudge_to_independence(f, eps);
    EXPECT_TRUE(is_independent(induce(r.frame)));
    EXPECT_LT(total_movement(f, r.frame), eps);
  }
}
