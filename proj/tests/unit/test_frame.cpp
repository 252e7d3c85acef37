#include <gtest/gtest.h>

#include "framekit/constructions.hpp"
#include "framekit/frame.hpp"
#include "framekit/random.hpp"
#include "support.hpp"

using namespace framekit;

namespace {

Frame<double> cols2(std::initializer_list<std::pair<double, double>> vs) {
  MatrixXd m(2, static_cast<Index>(vs.size()));
  Index k = 0;
  for (auto [x, y] : vs) m.col(k++) << x, y;
  return Frame<double>(m);
}

const double r2 = 1.0 / std::sqrt(2.0);

}  // namespace

TEST(Frame, Construction) {
  EXPECT_THROW(Frame<double>(MatrixXd(0, 2)), error);
  const Vector<double> a = VectorXd::Ones(2), b = VectorXd::Ones(3);
  const std::vector<VectorXd> ragged{a, b};
  EXPECT_THROW(Frame<double>::from_vectors(ragged), error);
  EXPECT_THROW(orthonormal<double>(2).appended(b), error);
}

TEST(Frame, OperatorsOnSmallFrames) {
  EXPECT_EQ(synthesis(orthonormal<double>(2)), MatrixXd::Identity(2, 2));
  const Frame<double> twice = cols2({{1, 0}, {1, 0}});
  EXPECT_EQ(synthesis(twice), (MatrixXd(2, 2) << 1, 1, 0, 0).finished());

  const Frame<double> e = cols2({{1, 0}, {0, 1}});
  VectorXd psi(2);
  psi << 3, 4;
  EXPECT_EQ(VectorXd(analysis(e) * psi), psi);

  const Frame<double> f = cols2({{1, 0}, {1, 0}, {0, 1}});
  EXPECT_EQ(frame_operator(f), (MatrixXd(2, 2) << 2, 0, 0, 1).finished());
  const Frame<double> s = simplex(2);
  EXPECT_LE((frame_operator(s) - 1.5 * MatrixXd::Identity(2, 2)).norm(), 1e-12);
  const MatrixXd g = gram(s);
  EXPECT_NEAR(g(0, 1), -0.5, 1e-12);
}

TEST(Frame, EpsilonPairGram) {
  const MatrixXd g = gram(epsilon_pair(0.25));
  EXPECT_NEAR(g(0, 1), 0.5, 1e-15);
  EXPECT_NEAR(g(0, 0), 1.0, 1e-15);
}

TEST(FrameBounds, Examples) {
  const BoundsReport o = frame_bounds(orthonormal<double>(3));
  EXPECT_NEAR(o.lower, 1.0, 1e-14);
  EXPECT_TRUE(o.tight);
  EXPECT_TRUE(o.parseval);

  for (Index n = 2; n <= 5; ++n) {
    const BoundsReport s = frame_bounds(simplex(n));
    const double want = static_cast<double>(n + 1) / static_cast<double>(n);
    EXPECT_NEAR(s.lower, want, 1e-12);
    EXPECT_NEAR(s.upper, want, 1e-12);
    EXPECT_TRUE(s.tight);
    EXPECT_FALSE(s.parseval);
  }

  const BoundsReport f = frame_bounds(cols2({{1, 0}, {1, 0}, {0, 1}}));
  EXPECT_NEAR(f.lower, 1.0, 1e-14);
  EXPECT_NEAR(f.upper, 2.0, 1e-14);
  EXPECT_FALSE(f.tight);

  EXPECT_THROW(frame_bounds(cols2({{1, 0}, {1, 0}})), error);
}

TEST(RieszBounds, Examples) {
  const BoundsReport e = riesz_bounds(epsilon_pair(0.25));
  EXPECT_NEAR(e.lower, 0.5, 1e-14);
  EXPECT_NEAR(e.upper, 1.5, 1e-14);
  EXPECT_EQ(e.kind, BoundKind::riesz);
  EXPECT_THROW(riesz_bounds(simplex(2)), error);
  const double c = 0.3;
  const BoundsReport p = riesz_bounds(cols2({{1, 0}, {c, std::sqrt(1 - c * c)}}));
  EXPECT_NEAR(p.lower, 1 - c, 1e-14);
  EXPECT_NEAR(p.upper, 1 + c, 1e-14);
}

TEST(FramePotential, Examples) {
  EXPECT_NEAR(frame_potential(orthonormal<double>(4)), 4.0, 1e-14);
  EXPECT_NEAR(frame_potential(simplex(2)), 4.5, 1e-12);
  EXPECT_NEAR(frame_potential(cols2({{1, 0}, {1, 0}})), 4.0, 1e-14);
}

TEST(Reconstruct, Identity) {
  VectorXd psi(2);
  psi << 1, 2;
  EXPECT_LE((reconstruct(simplex(2), psi) - psi).norm(), 1e-9);
  EXPECT_LE((reconstruct(orthonormal<double>(2), psi) - psi).norm(), 1e-14);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Frame<cdouble> f = random_unit<cdouble>(3, 5, seed);
    SplitMix64 rng(seed + 100);
    const Vector<cdouble> v = rng.unit_vector<cdouble>(3) * 3.0;
    EXPECT_LE((reconstruct(f, v) - v).norm(), 1e-9 * v.norm());
  }
}

TEST(Equiangular, Examples) {
  for (Index n = 2; n <= 5; ++n) {
    const auto c = is_equiangular(simplex(n));
    ASSERT_TRUE(c.has_value());
    EXPECT_NEAR(*c, 1.0 / static_cast<double>(n * n), 1e-12);
  }
  ASSERT_TRUE(is_equiangular(orthonormal<double>(3)).has_value());
  EXPECT_NEAR(*is_equiangular(orthonormal<double>(3)), 0.0, 1e-15);
  EXPECT_FALSE(is_equiangular(cols2({{1, 0}, {r2, r2}, {0, 1}})).has_value());
  EXPECT_THROW(is_equiangular(cols2({{2, 0}, {0, 1}})), error);
}

TEST(FrameProperties, RandomFrames) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Index n = 1 + static_cast<Index>(seed % 4);
    const Index m = n + static_cast<Index>(seed % 5);
    const Frame<double> f = random_unit<double>(n, m, seed);
    const VectorXd ls = hermitian_eig(frame_operator(f)).eigenvalues;
    const VectorXd lg = hermitian_eig(gram(f)).eigenvalues;
    EXPECT_LE((lg.head(n) - ls).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_NEAR(gram(f).trace(), static_cast<double>(m), 1e-10);
    const double floor = static_cast<double>(m * m) / static_cast<double>(n);
    EXPECT_GE(frame_potential(f), floor - 1e-9);

    const BoundsReport b = frame_bounds(f);
    SplitMix64 rng(seed);
    const VectorXd psi = rng.unit_vector<double>(n);
    const double energy = (analysis(f) * psi).squaredNorm();
    EXPECT_GE(energy, b.lower - 1e-12);
    EXPECT_LE(energy, b.upper + 1e-12);
  }
}

TEST(FrameProperties, FrozenNumpyFrames) {
  for (const auto& c : fk_test::oracles()["frames"]) {
    const auto check = [&](const auto& f) {
      const VectorXd want = fk_test::vector_from(c["frame_operator_eigenvalues"]);
      EXPECT_LE((hermitian_eig(frame_operator(f)).eigenvalues - want).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_NEAR(frame_potential(f), c["frame_potential"].get<double>(), 1e-12);
    };
    if (c["field"] == "real")
      check(fk_test::frame_from<double>(c["vectors"]));
    else
      check(fk_test::frame_from<cdouble>(c["vectors"]));
  }
}
