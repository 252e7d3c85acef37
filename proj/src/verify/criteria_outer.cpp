#include <algorithm>
#include <cmath>
#include <string>

#include "framekit/constructions.hpp"
#include "framekit/outer.hpp"
#include "verify/sampling.hpp"
#include "verify/verify.hpp"

namespace framekit::verify {

namespace {

std::string n_label(Index n) { return "N=" + std::to_string(n); }

// 6 -------------------------------------------------------------------------

std::vector<Row> biangular_table() {
  const double expected[] = {3.0 / 4.0, 0.0, 5.0 / 36.0, 3.0 / 8.0, 63.0 / 100.0};
  std::vector<Row> rows;
  for (Index n = 2; n <= 6; ++n) {
    const OuterSequence<double> os = induce(biangular(n));
    const VectorXd lambda = hermitian_eig(os.gram_op).eigenvalues;
    const double lower = lambda(lambda.size() - 1);
    Row r = near("biangular-table", n_label(n) + " lower outer Riesz bound", lower, expected[n - 2], 1e-9);
    const bool independent = is_independent(os);
    if (n == 3) {
      r.pass = r.pass && !independent;
      r.note = independent ? "expected dependent outers" : "dependent";
    } else {
      r.pass = r.pass && independent;
      r.note = independent ? "independent" : "expected independent outers";
    }
    rows.push_back(r);
  }
  return rows;
}

std::vector<Row> biangular_upper() {
  std::vector<Row> rows;
  for (Index n : {2, 4, 5, 6, 7}) {
    const BoundsReport b = outer_riesz_bounds(induce(biangular(n)));
    rows.push_back(near("biangular-upper", n_label(n) + " upper outer Riesz bound", b.upper,
                        (static_cast<double>(n) + 1.0) / 2.0, 1e-9));
  }
  return rows;
}

std::vector<Row> biangular_degeneracy() {
  // lexicographic pairs of the 4 simplex vectors: 12 13 14 23 24 34
  constexpr Index k14 = 2, k23 = 3;
  const OuterSequence<double> os = induce(biangular(3));
  const auto cert = dependence_certificate(os);
  if (!cert) return {Row{"biangular-degeneracy", "certificate", false, 0.0, 1.0, 0.0, "no certificate returned"}};

  std::vector<Index> support;
  for (Index i = 0; i < cert->coefficients.size(); ++i)
    if (std::abs(cert->coefficients(i)) > 1e-9) support.push_back(i);
  const bool on_pair = support == std::vector<Index>{k14, k23} &&
                       cert->coefficients(k14) * cert->coefficients(k23) < 0.0;
  const double coincide = (os.outers[k14] - os.outers[k23]).norm();
  return {
      Row{"biangular-degeneracy", "certificate supported on Phi14, Phi23 with opposite signs", on_pair,
          static_cast<double>(support.size()), 2.0, 0.0, "support size"},
      at_most("biangular-degeneracy", "certificate residual", cert->residual, 1e-8),
      at_most("biangular-degeneracy", "||Phi14 - Phi23||_F", coincide, 1e-12),
  };
}

// 7 -------------------------------------------------------------------------

std::vector<Row> eij_rank() {
  std::vector<Row> rows;
  const auto check = [&](const auto& f, Index want, const std::string& label) {
    const auto os = induce(f);
    const bool ok = os.rank == want && is_independent(os);
    rows.push_back(Row{"eij-rank", label, ok, static_cast<double>(os.rank), static_cast<double>(want), 0.0, {}});
  };
  for (Index n = 1; n <= 6; ++n) check(eij_basis(n), n * (n + 1) / 2, "real " + n_label(n));
  for (Index n = 1; n <= 4; ++n) check(complex_eij_basis(n), n * n, "complex " + n_label(n));
  return rows;
}

// 8 -------------------------------------------------------------------------

std::vector<Row> duals_biorthogonality() {
  SplitMix64 rng(808);
  double worst = 0.0;
  double worst_span = 0.0;
  long failures = 0;
  int done = 0;
  while (done < 100) {
    const auto sample = [&](auto tag) {
      using S = decltype(tag);
      const Index n = pick(rng, 2, 4);
      const Index m = pick(rng, 1, n);
      const Frame<S> f = random_frame<S>(rng, n, m);
      const OuterSequence<S> os = induce(f);
      if (numerical_rank(f.matrix()) < m || os.rank < m) return;
      ++done;
      try {
        const auto duals = outer_duals(f);
        for (Index i = 0; i < m; ++i) {
          worst_span = std::max(worst_span, span_distance(os, duals[static_cast<std::size_t>(i)]));
          for (Index j = 0; j < m; ++j) {
            const double want = i == j ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(frobenius_ip(os.outers[static_cast<std::size_t>(i)],
                                                          duals[static_cast<std::size_t>(j)]) - want));
          }
        }
      } catch (const error&) {
        ++failures;
      }
    };
    if (done % 2 == 0)
      sample(double{});
    else
      sample(cdouble{});
  }
  return {at_most("duals-biorthogonality", "max |<phi_i phi_i*, D_j>_F - delta_ij|, 100 configurations", worst, 1e-9),
          at_most("duals-biorthogonality", "duals lie in the outer span", worst_span, 1e-9),
          count_zero("duals-biorthogonality", "outer_duals self-check failures", failures, 100)};
}

// {phi_1, phi_2} a non-orthogonal basis of R^2, dual_1 its first biorthogonal vector
std::vector<Row> unprojected_dual_configuration(bool determinant) {
  std::vector<Row> rows;
  for (double angle : {0.7, 1.1, 0.3}) {
    MatrixXd cols(2, 2);
    cols << 1.0, std::cos(angle),
            0.0, std::sin(angle);
    const Frame<double> pair(cols);
    const double gamma = cols.col(0).dot(cols.col(1));
    const VectorXd dual = biorthogonal_vectors(pair).col(0);
    const OuterSequence<double> os = induce(pair);
    const double distance = span_distance(os, MatrixXd(dual * dual.transpose()));

    const OuterSequence<double> extended = induce(pair.appended(dual));
    const double det = extended.gram_op.determinant();
    const double want = -std::pow(gamma, 4);
    const std::string tag = "angle " + std::to_string(angle).substr(0, 3);

    if (!determinant)
      rows.push_back(Row{"unprojected-span-failure", tag + ": unprojected dual outside the outer span", distance > 1e-6,
                         distance, 0.0, 1e-6, "distance must be positive"});
    else
      rows.push_back(Row{"unprojected-determinant", tag + ": extended Gram determinant", std::abs(det - want) <= 1e-9 * std::abs(want),
                       det, want, 1e-9, "relative tolerance"});
  }
  return rows;
}

// 9 -------------------------------------------------------------------------

std::vector<Row> cross_products() {
  SplitMix64 rng(909);
  double worst_spectrum = 0.0;
  double worst_kron = 0.0;
  double worst_bounds = 0.0;
  double worst_duals = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto sample = [&](auto tag) {
      using S = decltype(tag);
      const Index n = pick(rng, 2, 3);
      const Frame<S> f = random_frame<S>(rng, n, pick(rng, 1, 4));
      const Frame<S> g = random_frame<S>(rng, n, pick(rng, 1, 4));
      const Matrix<S> cg = cross_gram(f, g);

      const VectorXd lf = hermitian_eig(gram(f)).eigenvalues;
      const VectorXd lg = hermitian_eig(gram(g)).eigenvalues;
      VectorXd products(lf.size() * lg.size());
      for (Index i = 0; i < lf.size(); ++i)
        for (Index j = 0; j < lg.size(); ++j) products(i * lg.size() + j) = lf(i) * lg(j);
      worst_spectrum = std::max(worst_spectrum,
                                max_abs_diff(ascending(hermitian_eig(cg).eigenvalues), ascending(products)));

      const auto outers = cross_outers(f, g);
      Matrix<S> direct(cg.rows(), cg.cols());
      for (Index i = 0; i < direct.rows(); ++i)
        for (Index j = 0; j < direct.cols(); ++j)
          direct(i, j) = frobenius_ip(outers[static_cast<std::size_t>(i)], outers[static_cast<std::size_t>(j)]);
      worst_kron = std::max(worst_kron, (direct - cg).norm());

      if (numerical_rank(f.matrix()) == f.size() && numerical_rank(g.matrix()) == g.size()) {
        const BoundsReport a = riesz_bounds(f);
        const BoundsReport c = riesz_bounds(g);
        const VectorXd lc = hermitian_eig(cg).eigenvalues;
        worst_bounds = std::max({worst_bounds, std::abs(lc(lc.size() - 1) - a.lower * c.lower),
                                 std::abs(lc(0) - a.upper * c.upper)});
      }

      const Frame<S> fb = random_frame<S>(rng, n, n);
      const Frame<S> gb = random_frame<S>(rng, n, n);
      const auto duals = cross_duals(fb, gb);
      const auto basis = cross_outers(fb, gb);
      for (std::size_t p = 0; p < duals.size(); ++p)
        for (std::size_t q = 0; q < basis.size(); ++q)
          worst_duals = std::max(worst_duals, std::abs(frobenius_ip(duals[p], basis[q]) - (p == q ? 1.0 : 0.0)));
    };
    if (t % 2 == 0)
      sample(double{});
    else
      sample(cdouble{});
  }
  return {
      at_most("cross-products", "cross Gram spectrum vs pairwise products, 100 pairs", worst_spectrum, 1e-9),
      at_most("cross-products", "cross Gram vs direct Frobenius Gram", worst_kron, 1e-9),
      at_most("cross-products", "extreme eigenvalues vs (AC, BD)", worst_bounds, 1e-9),
      at_most("cross-products", "cross dual biorthogonality", worst_duals, 1e-9),
  };
}

}  // namespace

void add_outer_criteria(std::vector<Criterion>& out) {
  out.push_back({6, "biangular", "biangular table, upper bound (N+1)/2 and the N=3 degeneracy",
                 {{"biangular-table", biangular_table},
                  {"biangular-upper", biangular_upper},
                  {"biangular-degeneracy", biangular_degeneracy}}});
  out.push_back({7, "eij-bases", "E_ij bases induce bases of the self-adjoint matrices", {{"eij-rank", eij_rank}}});
  out.push_back({8, "outer-duals", "projected outer duals, and the unprojected counterexample",
                 {{"duals-biorthogonality", duals_biorthogonality},
                  {"unprojected-span-failure", [] { return unprojected_dual_configuration(false); }},
                  {"unprojected-determinant", [] { return unprojected_dual_configuration(true); }}}});
  out.push_back({9, "cross-products", "cross-product Gram, bounds and duals", {{"cross-products", cross_products}}});
}

}  // namespace framekit::verify
