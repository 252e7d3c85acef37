#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "framekit/constructions.hpp"
#include "framekit/outer.hpp"
#include "verify/sampling.hpp"
#include "verify/verify.hpp"

namespace framekit::verify {

namespace {

std::string field_label(double) { return "real"; }
std::string field_label(cdouble) { return "complex"; }

// 1 -------------------------------------------------------------------------

std::vector<Row> outer_product_identity() {
  std::vector<Row> rows;
  for_both_fields([&](auto tag) {
    using S = decltype(tag);
    SplitMix64 rng(101);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
      const Index n = pick(rng, 1, 6);
      const Vector<S> phi = rng.unit_vector<S>(n);
      const Vector<S> psi = rng.unit_vector<S>(n);
      const Matrix<S> a = phi * phi.adjoint();
      const Matrix<S> b = psi * psi.adjoint();
      worst = std::max(worst, std::abs(frobenius_ip(a, b) - std::norm(phi.dot(psi))));
    }
    rows.push_back(at_most("outer-product-identity", field_label(tag) + ", 1000 pairs", worst, 1e-12));
  });
  return rows;
}

// 2 -------------------------------------------------------------------------

std::vector<Row> epsilon_example() {
  std::vector<Row> rows;
  for (double eps : {0.04, 0.25, 0.81}) {
    const Frame<double> f = epsilon_pair(eps);
    const BoundsReport v = riesz_bounds(f);
    const BoundsReport o = outer_riesz_bounds(induce(f));
    const std::string tag = "eps=" + std::to_string(eps).substr(0, 4) + " ";
    const double r = std::sqrt(eps);
    rows.push_back(near("epsilon-example", tag + "vector lower", v.lower, 1.0 - r, 1e-10));
    rows.push_back(near("epsilon-example", tag + "vector upper", v.upper, 1.0 + r, 1e-10));
    rows.push_back(near("epsilon-example", tag + "outer lower", o.lower, 1.0 - eps, 1e-10));
    rows.push_back(near("epsilon-example", tag + "outer upper", o.upper, 1.0 + eps, 1e-10));
  }
  return rows;
}

// 3 -------------------------------------------------------------------------

std::vector<Row> hadamard_identity() {
  SplitMix64 rng(303);
  double worst_op = 0.0;
  double worst_frobenius = 0.0;
  long violations = 0;
  for (int t = 0; t < 500; ++t) {
    const auto check = [&](auto tag) {
      using S = decltype(tag);
      const Index n = pick(rng, 1, 5);
      const Index m = pick(rng, 1, 8);
      Frame<S> f = random_frame<S>(rng, n, m);
      // non-unit norms on every other frame, so the diagonal of G varies
      if (t % 2 == 1) {
        Matrix<S> cols = f.matrix();
        for (Index i = 0; i < m; ++i) cols.col(i) *= 0.5 + 1.5 * rng.uniform();
        f = Frame<S>(std::move(cols));
      }
      const Matrix<S> g = gram(f);
      const MatrixXd h = g.cwiseProduct(g.conjugate()).real();
      const OuterSequence<S> os = induce(f);
      worst_op = std::max(worst_op, (os.gram_op - h).norm());

      MatrixXd by_frobenius(m, m);
      for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < m; ++j)
          by_frobenius(i, j) = std::real(frobenius_ip(os.outers[static_cast<std::size_t>(i)],
                                                      os.outers[static_cast<std::size_t>(j)]));
      worst_frobenius = std::max(worst_frobenius, (by_frobenius - h).norm());

      // eigenvalues of G o conj(G) lie in [min g_ii lmin(conj G), max g_ii lmax(conj G)]
      const VectorXd lg = hermitian_eig(Matrix<S>(g.conjugate())).eigenvalues;
      const VectorXd diag = g.diagonal().real();
      const VectorXd lh = hermitian_eig(os.gram_op).eigenvalues;
      const double lo = std::min(diag.minCoeff() * lg(m - 1), diag.maxCoeff() * lg(m - 1));
      const double hi = diag.maxCoeff() * lg(0);
      const double slack = 1e-10 * std::max(1.0, std::abs(hi));
      if (lh(m - 1) < lo - slack || lh(0) > hi + slack) ++violations;
    };
    if (t % 2 == 0)
      check(double{});
    else
      check(cdouble{});
  }
  return {at_most("hadamard-identity", "||gram_op - G o conj(G)||_F, 500 frames", worst_op, 1e-12),
          at_most("hadamard-identity", "Frobenius outer Gram vs G o conj(G)", worst_frobenius, 1e-12),
          count_zero("hadamard-envelope", "spectrum inside the Hadamard envelope", violations, 500)};
}

// 4 -------------------------------------------------------------------------

// first n rows of the m-point DFT, normalised
Frame<cdouble> harmonic(Index n, Index m) {
  Matrix<cdouble> cols(n, m);
  for (Index k = 0; k < m; ++k)
    for (Index j = 0; j < n; ++j) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(m);
      cols(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(n)), angle);
    }
  return Frame<cdouble>(std::move(cols));
}

std::vector<Row> riesz_extremes() {
  SplitMix64 rng(404);
  double worst_floor = std::numeric_limits<double>::infinity();  // min of lmax - M/N
  double worst_ceiling = -std::numeric_limits<double>::infinity();  // max of lmin - ceiling
  double tightest_random = std::numeric_limits<double>::infinity();
  int accepted = 0;
  while (accepted < 200) {
    const auto sample = [&](auto tag) {
      using S = decltype(tag);
      const Index n = pick(rng, 2, 4);
      const Index d = self_adjoint_dim(field_of<S>, n);
      const Index m = pick(rng, 1, d);
      const OuterSequence<S> os = induce(random_frame<S>(rng, n, m));
      if (os.rank < m) return;
      ++accepted;
      const OptimalBoundReport r = optimal_bound_report(os);
      worst_floor = std::min(worst_floor, r.achieved_upper - r.upper_bound_floor);
      tightest_random = std::min(tightest_random, r.achieved_upper - r.upper_bound_floor);
      if (r.lower_bound_ceiling) worst_ceiling = std::max(worst_ceiling, r.achieved_lower - *r.lower_bound_ceiling);
    };
    if (accepted % 2 == 0)
      sample(double{});
    else
      sample(cdouble{});
  }

  double worst_untf = 0.0;
  int untf_count = 0;
  const auto untf = [&](const auto& f) {
    const auto os = induce(f);
    const OptimalBoundReport r = optimal_bound_report(os);
    worst_untf = std::max(worst_untf, std::abs(r.achieved_upper - r.upper_bound_floor));
    worst_floor = std::min(worst_floor, r.achieved_upper - r.upper_bound_floor);
    ++untf_count;
  };
  for (Index n = 1; n <= 4; ++n) untf(orthonormal<double>(n));
  for (Index n = 2; n <= 6; ++n) untf(simplex(n));
  for (Index n : {2, 4, 5, 6}) untf(biangular(n));
  for (Index n = 2; n <= 4; ++n)
    for (Index m = n; m <= n + 3; ++m) untf(harmonic(n, m));

  return {
      at_most("upper-floor", "min (lmax - M/N), 200 random + constructed", -worst_floor, 1e-9,
              "value shown is M/N - lmax"),
      at_most("lower-ceiling", "max (lmin - M(N-1)/(N(M-1))), M > N", worst_ceiling, 1e-9),
      at_most("untf-equality", "max |lmax - M/N| over " + std::to_string(untf_count) + " UNTFs", worst_untf, 1e-9),
      Row{"untf-equality", "random frames stay strictly above M/N", tightest_random > 1e-9, tightest_random, 1e-9,
          0.0, "smallest lmax - M/N among random frames"},
  };
}

// 5 -------------------------------------------------------------------------

std::vector<Row> simplex_spectrum() {
  std::vector<Row> rows;
  for (Index n = 2; n <= 6; ++n) {
    const double nn = static_cast<double>(n);
    const double m = nn + 1.0;
    const double c = (m - nn) / (nn * (m - 1.0));
    const OuterSequence<double> os = induce(simplex(n));
    const VectorXd got = ascending(hermitian_eig(os.gram_op).eigenvalues);
    VectorXd want = VectorXd::Constant(n + 1, 1.0 - c);
    want(n) = 1.0 + (m - 1.0) * c;
    const std::string tag = "N=" + std::to_string(n);
    rows.push_back(at_most("simplex-spectrum", tag + " spectrum deviation", max_abs_diff(got, want), 1e-9));
    const BoundsReport b = outer_riesz_bounds(os);
    rows.push_back(near("simplex-spectrum", tag + " lower bound", b.lower, m * (nn - 1.0) / (nn * (m - 1.0)), 1e-9));
    rows.push_back(near("simplex-spectrum", tag + " upper bound", b.upper, m / nn, 1e-9));
  }
  return rows;
}

}  // namespace

void add_basic_criteria(std::vector<Criterion>& out) {
  out.push_back({1, "outer-inner-product", "Frobenius product of outers equals |<phi, psi>|^2",
                 {{"outer-product-identity", outer_product_identity}}});
  out.push_back({2, "epsilon-example", "epsilon pair: vector and outer Riesz bounds",
                 {{"epsilon-example", epsilon_example}}});
  out.push_back({3, "hadamard-gram", "outer Gram is G o conj(G) and obeys the Hadamard envelope",
                 {{"hadamard-gram", hadamard_identity}}});
  out.push_back({4, "riesz-extremes", "outer Riesz bounds against M/N and M(N-1)/(N(M-1))",
                 {{"riesz-extremes", riesz_extremes}}});
  out.push_back({5, "simplex-equiangular", "simplex outer spectrum and bounds, N = 2..6",
                 {{"simplex-spectrum", simplex_spectrum}}});
}

}  // namespace framekit::verify
