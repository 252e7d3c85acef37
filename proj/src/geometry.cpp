#include "framekit/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "framekit/random.hpp"

namespace framekit {

namespace {

template <FieldScalar Scalar>
Matrix<Scalar> bordered(const Matrix<Scalar>& t, const Vector<Scalar>& v) {
  const Index n = t.rows();
  Matrix<Scalar> b(n + 1, n + 1);
  b.topLeftCorner(n, n) = t;
  b.topRightCorner(n, 1) = v;
  b.bottomLeftCorner(1, n) = v.adjoint();
  b(n, n) = Scalar(1);
  return b;
}

template <FieldScalar Scalar>
void require_unit(const Vector<Scalar>& v) {
  if (std::abs(v.norm() - 1.0) > kUnitNormTol) throw error(errc::not_unit_norm, "candidate is not a unit vector");
}

template <FieldScalar Scalar>
VectorXd squared_moduli(const Vector<Scalar>& v) {
  return v.cwiseAbs2();
}

}  // namespace

template <FieldScalar Scalar>
PsdExtension<Scalar> make_extension(const Matrix<Scalar>& t) {
  PsdExtension<Scalar> ext{t, hermitian_eig(t), {}, 0.0};
  const VectorXd& lambda = ext.spectrum.eigenvalues;
  const double top = std::max(lambda(0), 0.0);
  if (lambda(lambda.size() - 1) < -kPsdTol * top)
    throw error(errc::not_psd, "eigenvalue " + std::to_string(lambda(lambda.size() - 1)) + " is negative");
  ext.rank_tol = default_rank_tol(t.rows(), t.cols(), top);
  for (Index i = 0; i < lambda.size(); ++i)
    if (lambda(i) > ext.rank_tol) ext.i_plus.push_back(i);
  return ext;
}

template <FieldScalar Scalar>
bool extension_rank_preserved(const Matrix<Scalar>& t, const Vector<Scalar>& v) {
  if (v.size() != t.rows()) throw error(errc::dimension_mismatch, "border vector has wrong length");
  make_extension(t);
  return numerical_rank(bordered(t, v)) == numerical_rank(t);
}

template <FieldScalar Scalar>
Vector<Scalar> admissible_vector(const PsdExtension<Scalar>& ext, const Vector<Scalar>& a) {
  if (a.size() != static_cast<Index>(ext.i_plus.size()))
    throw error(errc::bad_coefficients, "need one coefficient per positive eigenvalue");
  if (std::abs(a.squaredNorm() - 1.0) > kUnitNormTol)
    throw error(errc::bad_coefficients, "coefficients must have unit norm");
  Vector<Scalar> v = Vector<Scalar>::Zero(ext.t.rows());
  for (Index k = 0; k < a.size(); ++k) {
    const Index i = ext.i_plus[static_cast<std::size_t>(k)];
    v += a(k) * std::sqrt(ext.spectrum.eigenvalues(i)) * ext.spectrum.eigenvectors.col(i);
  }
  return v;
}

template <FieldScalar Scalar>
std::optional<Vector<Scalar>> admissible_coefficients(const PsdExtension<Scalar>& ext, const Vector<Scalar>& v,
                                                      double tol) {
  if (v.size() != ext.t.rows()) throw error(errc::dimension_mismatch, "vector has wrong length");
  const Vector<Scalar> coords = ext.spectrum.eigenvectors.adjoint() * v;
  const Index k = static_cast<Index>(ext.i_plus.size());

  Vector<Scalar> a(k);
  Vector<Scalar> rest = coords;
  for (Index r = 0; r < k; ++r) {
    const Index i = ext.i_plus[static_cast<std::size_t>(r)];
    a(r) = coords(i) / std::sqrt(ext.spectrum.eigenvalues(i));
    rest(i) = Scalar(0);
  }
  const double outside = rest.norm();
  if (outside > tol * std::max(1.0, v.norm())) return std::nullopt;
  if (std::abs(a.squaredNorm() - 1.0) > tol) return std::nullopt;
  return a;
}

template <FieldScalar Scalar>
double elliptic_value(const Frame<Scalar>& f, const Vector<Scalar>& candidate, bool allow_saturated) {
  if (candidate.size() != f.dim()) throw error(errc::dimension_mismatch, "candidate has wrong length");
  require_unit(candidate);
  const OuterSequence<Scalar> os = induce(f);
  if (os.rank < os.size()) throw error(errc::not_independent, "frame outers are dependent");
  if (os.size() + 1 > os.ambient_dim && !allow_saturated)
    throw error(errc::too_many, "M + 1 = " + std::to_string(os.size() + 1) + " exceeds the self-adjoint dimension " +
                                    std::to_string(os.ambient_dim));

  const VectorXd w = squared_moduli<Scalar>(analysis(f) * candidate);
  const SpectralData<double> sd = hermitian_eig(os.gram_op);
  const VectorXd y = sd.eigenvectors.transpose() * w;
  return (y.array().square() / sd.eigenvalues.array()).sum();
}

template <FieldScalar Scalar>
double quartic_residual(const Frame<Scalar>& f, const Vector<Scalar>& v) {
  if (v.size() != f.size()) throw error(errc::dimension_mismatch, "v must have one entry per frame vector");
  const OuterSequence<Scalar> os = induce(f);
  if (os.rank < os.size()) throw error(errc::not_independent, "frame outers are dependent");
  const VectorXd w = squared_moduli(v);
  return std::abs(w.dot(os.gram_op.llt().solve(w)) - 1.0);
}

template <FieldScalar Scalar>
double ellipsoid_residual(const Frame<Scalar>& f, const Vector<Scalar>& v, double tol) {
  if (v.size() != f.size()) throw error(errc::dimension_mismatch, "v must have one entry per frame vector");
  if (numerical_rank(f.matrix()) < f.dim()) throw error(errc::not_a_frame, "vectors do not span");
  const SpectralData<Scalar> sd = hermitian_eig(gram(f));
  const Vector<Scalar> c = sd.eigenvectors.adjoint() * v;
  const Index n = f.dim();
  const double scale = std::max(1.0, v.norm());
  for (Index k = n; k < c.size(); ++k)
    if (std::abs(c(k)) > tol * scale) return std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (Index k = 0; k < n; ++k) sum += std::norm(c(k)) / sd.eigenvalues(k);
  return std::abs(sum - 1.0);
}

template <FieldScalar Scalar>
ClassificationReport<Scalar> classify(const Frame<Scalar>& f, const Vector<Scalar>& candidate, double tol) {
  if (candidate.size() != f.dim()) throw error(errc::dimension_mismatch, "candidate has wrong length");
  require_unit(candidate);
  const OuterSequence<Scalar> full = induce(f);

  ClassificationReport<Scalar> r;
  r.candidate = candidate;
  r.tol = tol;
  r.permutation = independent_prefix(full.gram_op);
  r.reordered = static_cast<Index>(r.permutation.size()) < f.size();
  const Frame<Scalar> prefix = f.subset(r.permutation);
  const Index m = prefix.size();
  if (m + 1 > full.ambient_dim)
    throw error(errc::too_many, "M + 1 = " + std::to_string(m + 1) + " exceeds the self-adjoint dimension " +
                                    std::to_string(full.ambient_dim));

  r.tv = analysis(prefix) * candidate;
  r.elliptic_value = elliptic_value(prefix, candidate);
  {
    // same quantity through a Cholesky solve instead of the eigenbasis
    const OuterSequence<Scalar> os = induce(prefix);
    const VectorXd w = squared_moduli(r.tv);
    r.quartic_value = w.dot(os.gram_op.llt().solve(w));
  }
  if (numerical_rank(prefix.matrix()) == prefix.dim()) r.ellipsoid_residual = ellipsoid_residual(prefix, r.tv, tol);
  r.verdict = std::abs(r.elliptic_value - 1.0) <= tol ? Verdict::dependent : Verdict::independent;

  const OuterSequence<Scalar> extended = induce(prefix.appended(candidate));
  const VectorXd s = singular_values(extended.gram_op);
  r.rank_tol = default_rank_tol(extended.gram_op.rows(), extended.gram_op.cols(), s(0));
  r.extended_rank = extended.rank;
  const bool rank_says_dependent = extended.rank == m;
  if (rank_says_dependent != (r.verdict == Verdict::dependent))
    throw error(errc::internal_inconsistency,
                "elliptic value " + std::to_string(r.elliptic_value) + " and extended rank " +
                    std::to_string(extended.rank) + " disagree");
  return r;
}

template <FieldScalar Scalar>
double mu2_subset_mu4_probe(const Frame<Scalar>& f, Index samples, std::uint64_t seed) {
  const OuterSequence<Scalar> os = induce(f);
  if (os.rank < os.ambient_dim)
    throw error(errc::rank_deficient, "outers span " + std::to_string(os.rank) + " of " +
                                          std::to_string(os.ambient_dim) + " dimensions");
  const std::vector<Index> order = independent_prefix(os.gram_op);
  const Frame<Scalar> prefix = f.subset(order);
  const Matrix<Scalar> t = analysis(prefix);

  SplitMix64 rng(seed);
  double worst = 0.0;
  for (Index s = 0; s < samples; ++s) {
    const Vector<Scalar> psi = rng.unit_vector<Scalar>(f.dim());
    worst = std::max(worst, quartic_residual(prefix, Vector<Scalar>(t * psi)));
  }
  return worst;
}

#define FRAMEKIT_INSTANTIATE(S)                                                                          \
  template PsdExtension<S> make_extension<S>(const Matrix<S>&);                                          \
  template bool extension_rank_preserved<S>(const Matrix<S>&, const Vector<S>&);                         \
  template Vector<S> admissible_vector<S>(const PsdExtension<S>&, const Vector<S>&);                     \
  template std::optional<Vector<S>> admissible_coefficients<S>(const PsdExtension<S>&, const Vector<S>&, \
                                                               double);                                  \
  template double elliptic_value<S>(const Frame<S>&, const Vector<S>&, bool);                            \
  template double quartic_residual<S>(const Frame<S>&, const Vector<S>&);                                \
  template double ellipsoid_residual<S>(const Frame<S>&, const Vector<S>&, double);                      \
  template ClassificationReport<S> classify<S>(const Frame<S>&, const Vector<S>&, double);               \
  template double mu2_subset_mu4_probe<S>(const Frame<S>&, Index, std::uint64_t);

FRAMEKIT_INSTANTIATE(double)
FRAMEKIT_INSTANTIATE(cdouble)

#undef FRAMEKIT_INSTANTIATE

}  // namespace framekit
