#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "framekit/constructions.hpp"
#include "framekit/geometry.hpp"
#include "framekit/perturb.hpp"
#include "verify/exact_rank.hpp"
#include "verify/sampling.hpp"
#include "verify/verify.hpp"

namespace framekit::verify {

namespace {

template <FieldScalar S>
S random_phase(SplitMix64& rng) {
  if constexpr (std::same_as<S, double>)
    return rng.uniform() < 0.5 ? -1.0 : 1.0;
  else
    return std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
}

// 10 ------------------------------------------------------------------------

struct RoundTrip {
  long forward_failures = 0;
  long off_family_failures = 0;
  long trials = 0;
};

template <FieldScalar S>
void samerank_instance(SplitMix64& rng, RoundTrip& tally) {
  const Index n = pick(rng, 2, 8);
  const Index r = pick(rng, 1, n);
  const Matrix<S> b = gaussian_matrix<S>(rng, n, r);
  const Matrix<S> t = b * b.adjoint();
  const PsdExtension<S> ext = make_extension(t);
  ++tally.trials;
  const Index k = static_cast<Index>(ext.i_plus.size());
  if (k != r) {
    ++tally.forward_failures;
    return;
  }

  const Vector<S> a = rng.unit_vector<S>(k);
  const Vector<S> v = admissible_vector(ext, a);
  const auto back = admissible_coefficients(ext, v);
  if (!extension_rank_preserved(t, v) || !back || (*back - a).norm() > 1e-8) ++tally.forward_failures;

  // off-family: a kernel component, a wrong normalisation, or a generic vector
  Vector<S> off;
  const int kind = static_cast<int>(rng.next() % 3);
  if (kind == 0 && r < n) {
    off = v + 0.1 * ext.spectrum.eigenvectors.col(n - 1);
  } else if (kind == 2) {
    off = rng.unit_vector<S>(n) * (0.5 + 2.0 * rng.uniform());
  } else {
    const double eta = 0.05 + 0.45 * rng.uniform();
    const Vector<S> scaled = a * (rng.uniform() < 0.5 ? 1.0 + eta : 1.0 - eta);
    off = Vector<S>::Zero(n);
    for (Index p = 0; p < k; ++p) {
      const Index i = ext.i_plus[static_cast<std::size_t>(p)];
      off += scaled(p) * std::sqrt(ext.spectrum.eigenvalues(i)) * ext.spectrum.eigenvectors.col(i);
    }
  }
  if (extension_rank_preserved(t, off) || admissible_coefficients(ext, off)) ++tally.off_family_failures;
}

template <class F>
F small_integer(SplitMix64& rng) {
  const auto draw = [&] { return exact::Rational(static_cast<int>(rng.next() % 7) - 3); };
  if constexpr (std::same_as<F, exact::Rational>)
    return draw();
  else
    return F(draw(), draw());
}

template <class F>
exact::Table<F> bordered_table(const exact::Table<F>& t, const std::vector<F>& v) {
  const std::size_t n = t.size();
  exact::Table<F> out(n + 1, std::vector<F>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = t[i][j];
    out[i][n] = v[i];
    out[n][i] = exact::conj(v[i]);
  }
  out[n][n] = F(exact::Rational(1));
  return out;
}

// Rational PSD t = B B* / s and v = t w with s = w* B B* w, so that
// v* t^+ v = 1 and the border keeps the rank. A kernel vector k comes from
// B = (k*k) B0 - k (k* B0).
template <class F>
long exact_instance(SplitMix64& rng) {
  using S = decltype(exact::to_double(std::declval<F>()));
  const std::size_t n = static_cast<std::size_t>(pick(rng, 2, 6));
  const std::size_t r = static_cast<std::size_t>(pick(rng, 1, static_cast<Index>(n) - 1));

  std::vector<F> kernel(n);
  do {
    for (auto& x : kernel) x = small_integer<F>(rng);
  } while (std::all_of(kernel.begin(), kernel.end(), [](const F& x) { return exact::is_zero(x); }));

  exact::Table<F> b0(n, std::vector<F>(r));
  for (auto& row : b0)
    for (auto& x : row) x = small_integer<F>(rng);
  const exact::Table<F> kcol = [&] {
    exact::Table<F> c(n, std::vector<F>(1));
    for (std::size_t i = 0; i < n; ++i) c[i][0] = kernel[i];
    return c;
  }();
  const F kk = exact::multiply(exact::adjoint(kcol), kcol)[0][0];
  const exact::Table<F> kb = exact::multiply(kcol, exact::multiply(exact::adjoint(kcol), b0));
  exact::Table<F> b(n, std::vector<F>(r));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < r; ++j) b[i][j] = kk * b0[i][j] - kb[i][j];

  const exact::Table<F> bb = exact::multiply(b, exact::adjoint(b));
  exact::Table<F> w(n, std::vector<F>(1));
  for (auto& row : w) row[0] = small_integer<F>(rng);
  const F s = exact::multiply(exact::adjoint(w), exact::multiply(bb, w))[0][0];
  if (exact::is_zero(s)) return 0;

  exact::Table<F> t = bb;
  for (auto& row : t)
    for (auto& x : row) x = x / s;
  const exact::Table<F> tw = exact::multiply(t, w);
  std::vector<F> v(n), doubled(n), shifted(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = tw[i][0];
    doubled[i] = v[i] + v[i];
    shifted[i] = v[i] + kernel[i];
  }

  const Index base = exact::rank(t);
  const Matrix<S> td = exact::to_matrix(t);
  long mismatches = 0;
  const auto compare = [&](const std::vector<F>& vec, bool should_keep) {
    const Index exact_rank = exact::rank(bordered_table(t, vec));
    const bool exact_keeps = exact_rank == base;
    Vector<S> vd(static_cast<Index>(n));
    for (std::size_t i = 0; i < n; ++i) vd(static_cast<Index>(i)) = exact::to_double(vec[i]);
    const bool numeric_keeps = extension_rank_preserved(td, vd);
    const Index numeric_rank = numerical_rank(exact::to_matrix(bordered_table(t, vec)));
    if (exact_keeps != should_keep || numeric_keeps != exact_keeps || numeric_rank != exact_rank) ++mismatches;
  };
  if (numerical_rank(td) != base) ++mismatches;
  compare(v, true);
  compare(doubled, false);
  compare(shifted, false);
  return mismatches;
}

std::vector<Row> samerank_roundtrip() {
  SplitMix64 rng(1010);
  RoundTrip tally;
  for (int i = 0; i < 1000; ++i) {
    if (i % 2 == 0)
      samerank_instance<double>(rng, tally);
    else
      samerank_instance<cdouble>(rng, tally);
  }
  long exact_mismatches = 0;
  for (int i = 0; i < 100; ++i)
    exact_mismatches += i % 2 == 0 ? exact_instance<exact::Rational>(rng) : exact_instance<exact::Gaussian>(rng);
  return {count_zero("samerank-roundtrip", "admissible vectors keep the bordered rank", tally.forward_failures,
                     tally.trials),
          count_zero("samerank-roundtrip", "off-family vectors fail both tests", tally.off_family_failures,
                     tally.trials),
          count_zero("samerank-roundtrip", "Jacobi rank vs exact rational rank", exact_mismatches, 100)};
}

// 11 ------------------------------------------------------------------------

template <FieldScalar S>
Index frobenius_outer_rank(const Frame<S>& f) {
  MatrixXd g(f.size(), f.size());
  for (Index i = 0; i < f.size(); ++i)
    for (Index j = 0; j < f.size(); ++j) {
      const Vector<S> a = f.vector(i);
      const Vector<S> b = f.vector(j);
      g(i, j) = std::real(frobenius_ip(Matrix<S>(a * a.adjoint()), Matrix<S>(b * b.adjoint())));
    }
  return numerical_rank(g);
}

std::vector<Row> classifier_coherence() {
  SplitMix64 rng(1111);
  long disagreements = 0;
  long dependent_cases = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto sample = [&](auto tag) {
      using S = decltype(tag);
      const Index n = pick(rng, 2, 4);
      const Index d = self_adjoint_dim(field_of<S>, n);
      const Index m = pick(rng, 1, d - 1);
      Frame<S> f = random_frame<S>(rng, n, m);
      if (t % 5 == 4 && m >= 2) {
        Matrix<S> cols = f.matrix();
        cols.col(m - 1) = cols.col(0) * random_phase<S>(rng);
        f = Frame<S>(std::move(cols));
      }
      Vector<S> candidate = rng.unit_vector<S>(n);
      if (t % 3 == 0) candidate = f.vector(static_cast<Index>(rng.next() % static_cast<std::uint64_t>(m))) *
                                  random_phase<S>(rng);
      candidate.normalize();

      const bool rank_dependent = frobenius_outer_rank(f.appended(candidate)) == frobenius_outer_rank(f);
      dependent_cases += rank_dependent ? 1 : 0;
      try {
        const ClassificationReport<S> r = classify(f, candidate);
        if ((r.verdict == Verdict::dependent) != rank_dependent) ++disagreements;
      } catch (const error&) {
        ++disagreements;
      }
    };
    if (t % 2 == 0)
      sample(double{});
    else
      sample(cdouble{});
  }
  return {count_zero("classifier-coherence", "elliptic verdict vs extended-Gram rank, 1000 pairs", disagreements, 1000,
                     std::to_string(disagreements) + " disagreements; " + std::to_string(dependent_cases) +
                         " dependent cases")};
}

// 12 ------------------------------------------------------------------------

std::vector<Row> mu_probe() {
  Frame<double> spanning = random_unit<double>(3, 6, 12);
  for (std::uint64_t seed = 13; induce(spanning).rank < 6; ++seed) spanning = random_unit<double>(3, 6, seed);
  return {at_most("mu2-mu4-probe", "eij basis N=2, 200 samples", mu2_subset_mu4_probe(eij_basis(2), 200, 1), 1e-8),
          at_most("mu2-mu4-probe", "eij basis N=3, 200 samples", mu2_subset_mu4_probe(eij_basis(3), 200, 2), 1e-8),
          at_most("mu2-mu4-probe", "random spanning frame R^3, M=6, 200 samples",
                  mu2_subset_mu4_probe(spanning, 200, 3), 1e-8)};
}

// 13 ------------------------------------------------------------------------

std::vector<Row> outer_distance_checks() {
  SplitMix64 rng(1313);
  double worst_closed = 0.0;
  double worst_gap = -std::numeric_limits<double>::infinity();
  for (int t = 0; t < 1000; ++t) {
    const auto sample = [&](auto tag) {
      using S = decltype(tag);
      const Index n = pick(rng, 1, 5);
      const Vector<S> phi = rng.unit_vector<S>(n);
      // half the pairs are close, where the inequality is tight
      const Vector<S> psi = t % 4 < 2 || n == 1 ? rng.unit_vector<S>(n) : tilt(rng, phi, 0.1 * rng.uniform());
      const double closed = outer_distance(phi, psi);
      const double direct = (Matrix<S>(phi * phi.adjoint()) - Matrix<S>(psi * psi.adjoint())).squaredNorm();
      worst_closed = std::max(worst_closed, std::abs(closed - direct));
      worst_gap = std::max(worst_gap, closed - 2.0 * (phi - psi).squaredNorm());
    };
    if (t % 2 == 0)
      sample(double{});
    else
      sample(cdouble{});
  }
  return {at_most("outer-distance", "closed form vs ||phi phi* - psi psi*||_F^2, 1000 pairs", worst_closed, 1e-12),
          at_most("outer-distance", "max of closed form - 2 ||phi - psi||^2", worst_gap, 1e-12)};
}

std::vector<Row> perturbed_envelope() {
  SplitMix64 rng(1314);
  double worst = -std::numeric_limits<double>::infinity();
  int done = 0;
  while (done < 200) {
    const auto sample = [&](auto tag) {
      using S = decltype(tag);
      const Index n = pick(rng, 2, 4);
      const Index m = pick(rng, 1, n);
      const Frame<S> f = random_frame<S>(rng, n, m);
      if (numerical_rank(f.matrix()) < m) return;
      ++done;
      const BoundsReport b = riesz_bounds(f);
      const double eps_sq = 0.95 * rng.uniform() * b.lower;
      Matrix<S> e = gaussian_matrix<S>(rng, n, m);
      e *= std::sqrt(eps_sq) / e.norm();
      const VectorXd lambda = hermitian_eig(gram(Frame<S>(f.matrix() + e))).eigenvalues;
      const auto [lo, hi] = perturbed_riesz_bounds(b.lower, b.upper, eps_sq);
      worst = std::max({worst, lo - lambda(m - 1), lambda(0) - hi});
    };
    if (done % 2 == 0)
      sample(double{});
    else
      sample(cdouble{});
  }
  return {at_most("perturbed-envelope", "worst excursion outside ((sqrt A - e)^2, (sqrt B + e)^2), 200 frames", worst,
                  1e-9)};
}

std::vector<Row> radius_fuzz() {
  SplitMix64 rng(1315);
  long failures = 0;
  int done = 0;
  while (done < 500) {
    const auto sample = [&](auto tag) {
      using S = decltype(tag);
      const Index n = pick(rng, 2, 3);
      const Index m = pick(rng, 1, self_adjoint_dim(field_of<S>, n));
      const Frame<S> f = random_frame<S>(rng, n, m);
      const OuterSequence<S> os = induce(f);
      if (os.rank < m) return;
      ++done;
      const IndependenceRadius radius = independence_radius(os);
      const double eps = (0.05 + 0.95 * rng.uniform()) * radius.radius;
      VectorXd weights(m);
      for (Index i = 0; i < m; ++i) weights(i) = 0.1 + rng.uniform();
      weights *= 0.999 * eps / weights.sum();

      Matrix<S> moved(n, m);
      double spent = 0.0;
      for (Index i = 0; i < m; ++i) {
        moved.col(i) = tilt(rng, Vector<S>(f.vector(i)), weights(i));
        spent += (moved.col(i) - f.vector(i)).squaredNorm();
      }
      const OuterSequence<S> after = induce(Frame<S>(moved));
      bool ok = spent < eps && is_independent(after);
      if (ok) {
        const VectorXd lambda = hermitian_eig(after.gram_op).eigenvalues;
        ok = lambda(m - 1) >= radius.lower_at(eps) - 1e-9 && lambda(0) <= radius.upper_at(eps) + 1e-9;
      }
      failures += ok ? 0 : 1;
    };
    if (done % 2 == 0)
      sample(double{});
    else
      sample(cdouble{});
  }
  return {count_zero("radius-fuzz", "perturbations inside A/2 stay independent within the bounds", failures, 500)};
}

// 14 ------------------------------------------------------------------------

std::vector<Row> nudge_repairs() {
  std::vector<Row> rows;
  for (double eps : {0.1, 0.01}) {
    SplitMix64 rng(1414);
    long failures = 0;
    int done = 0;
    while (done < 200) {
      const auto sample = [&](auto tag) {
        using S = decltype(tag);
        const Index n = pick(rng, 2, 4);
        const Index d = self_adjoint_dim(field_of<S>, n);
        const auto duplicated = [&] {
          const Index m = pick(rng, 2, d);
          Matrix<S> cols = random_frame<S>(rng, n, m).matrix();
          const int copies = 1 + static_cast<int>(rng.next() % 2);
          for (int c = 0; c < copies; ++c) {
            const Index k = pick(rng, 1, m - 1);
            const Index j = pick(rng, 0, k - 1);
            cols.col(k) = cols.col(j) * random_phase<S>(rng);
          }
          return Frame<S>(std::move(cols));
        };
        Frame<S> f = duplicated();
        if constexpr (std::same_as<S, double>) {
          if (done % 20 == 18) f = biangular(3);
        }
        if (induce(f).rank == f.size()) return;
        ++done;
        try {
          const NudgeResult<S> r = nudge_to_independence(f, eps);
          double moved = 0.0;
          for (Index i = 0; i < f.size(); ++i) moved += (r.frame.vector(i) - f.vector(i)).norm();
          if (!(moved < eps) || !r.frame.is_unit_norm() || !is_independent(induce(r.frame))) ++failures;
        } catch (const error&) {
          ++failures;
        }
      };
      if (done % 2 == 0)
        sample(double{});
      else
        sample(cdouble{});
    }
    rows.push_back(count_zero("nudge", "eps=" + std::to_string(eps).substr(0, 4) + ", 200 dependent frames",
                              failures, 200));
  }
  return rows;
}

std::vector<Row> density_monte_carlo() {
  SplitMix64 rng(1415);
  long dependent = 0;
  for (int t = 0; t < 1000; ++t) {
    const auto sample = [&](auto tag) {
      using S = decltype(tag);
      const Index n = pick(rng, 2, 4);
      const Index m = pick(rng, 1, self_adjoint_dim(field_of<S>, n));
      if (!is_independent(induce(random_frame<S>(rng, n, m)))) ++dependent;
    };
    if (t % 2 == 0)
      sample(double{});
    else
      sample(cdouble{});
  }
  return {count_zero("density", "dependent outers among 1000 random frames with M <= dim", dependent, 1000)};
}

}  // namespace

void add_geometry_criteria(std::vector<Criterion>& out) {
  out.push_back({10, "samerank", "bordered PSD extensions keep rank exactly on the admissible family",
                 {{"samerank-roundtrip", samerank_roundtrip}}});
  out.push_back({11, "classifier", "elliptic dependence test agrees with the extended Gram rank",
                 {{"classifier-coherence", classifier_coherence}}});
  out.push_back({12, "mu-probe", "quartic residual vanishes on spanning frames", {{"mu2-mu4-probe", mu_probe}}});
  out.push_back({13, "perturbation", "perturbed bounds, outer distance and the independence radius",
                 {{"outer-distance", outer_distance_checks}, {"perturbed-envelope", perturbed_envelope}, {"radius-fuzz", radius_fuzz}}});
  out.push_back({14, "density", "nudge repairs dependent frames; random frames are independent",
                 {{"nudge", nudge_repairs}, {"density", density_monte_carlo}}});
}

}  // namespace framekit::verify
