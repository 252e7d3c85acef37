#include "framekit/frame.hpp"

#include <algorithm>
#include <cmath>

namespace framekit {

BoundsReport make_bounds(double lower, double upper, BoundKind kind) {
  BoundsReport r;
  r.lower = lower;
  r.upper = upper;
  r.kind = kind;
  r.tight = std::abs(upper - lower) <= kTightTol * std::abs(upper);
  r.parseval = r.tight && std::abs(upper - 1.0) <= kTightTol && std::abs(lower - 1.0) <= kTightTol;
  return r;
}

template <FieldScalar Scalar>
BoundsReport frame_bounds(const Frame<Scalar>& f) {
  if (numerical_rank(synthesis(f)) < f.dim())
    throw error(errc::not_a_frame, "vectors do not span the ambient space");
  const VectorXd lambda = hermitian_eig(frame_operator(f)).eigenvalues;
  return make_bounds(lambda(lambda.size() - 1), lambda(0), BoundKind::frame);
}

template <FieldScalar Scalar>
BoundsReport riesz_bounds(const Frame<Scalar>& f) {
  const Matrix<Scalar> g = gram(f);
  if (numerical_rank(g) < f.size())
    throw error(errc::not_independent, "Gram matrix is singular at the rank tolerance");
  const VectorXd lambda = hermitian_eig(g).eigenvalues;
  return make_bounds(lambda(lambda.size() - 1), lambda(0), BoundKind::riesz);
}

template <FieldScalar Scalar>
double frame_potential(const Frame<Scalar>& f) {
  return gram(f).cwiseAbs2().sum();
}

template <FieldScalar Scalar>
Vector<Scalar> reconstruct(const Frame<Scalar>& f, const Vector<Scalar>& psi) {
  if (psi.size() != f.dim()) throw error(errc::dimension_mismatch, "psi has wrong length");
  if (numerical_rank(synthesis(f)) < f.dim())
    throw error(errc::not_a_frame, "vectors do not span the ambient space");
  const auto spec = hermitian_eig(frame_operator(f));
  const Matrix<Scalar>& v = spec.eigenvectors;
  const Matrix<Scalar> s_inv = v * spec.eigenvalues.cwiseInverse().template cast<Scalar>().asDiagonal() * v.adjoint();

  Vector<Scalar> out = Vector<Scalar>::Zero(f.dim());
  for (Index i = 0; i < f.size(); ++i) {
    const Vector<Scalar> dual = s_inv * f.vector(i);
    out += dual.dot(psi) * f.vector(i);  // <psi, S^{-1} phi_i> phi_i
  }
  return out;
}

template <FieldScalar Scalar>
std::optional<double> is_equiangular(const Frame<Scalar>& f) {
  if (!f.is_unit_norm()) throw error(errc::not_unit_norm, "equiangularity is defined for unit-norm frames");
  if (f.size() < 2) return std::nullopt;
  const MatrixXd c = gram(f).cwiseAbs2();
  double lo = c(0, 1), hi = c(0, 1);
  for (Index j = 0; j < c.cols(); ++j)
    for (Index i = 0; i < j; ++i) {
      lo = std::min(lo, c(i, j));
      hi = std::max(hi, c(i, j));
    }
  if (hi - lo > kEquiangularTol) return std::nullopt;
  return 0.5 * (lo + hi);
}

#define FRAMEKIT_INSTANTIATE(S)                                                   \
  template BoundsReport frame_bounds<S>(const Frame<S>&);                         \
  template BoundsReport riesz_bounds<S>(const Frame<S>&);                         \
  template double frame_potential<S>(const Frame<S>&);                            \
  template Vector<S> reconstruct<S>(const Frame<S>&, const Vector<S>&);           \
  template std::optional<double> is_equiangular<S>(const Frame<S>&);

FRAMEKIT_INSTANTIATE(double)
FRAMEKIT_INSTANTIATE(cdouble)

#undef FRAMEKIT_INSTANTIATE

}  // namespace framekit
