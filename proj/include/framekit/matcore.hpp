#pragma once

#include <optional>
#include <utility>

#include "framekit/error.hpp"
#include "framekit/types.hpp"

namespace framekit {

/// Eigen-decomposition of a self-adjoint matrix.
///
/// Eigenvalues are sorted descending; eigenvectors are the matching columns,
/// orthonormal, each phased so that its first entry of modulus > 1e-10 is
/// real and positive. Repeated eigenvalues carry no canonical basis.
template <FieldScalar Scalar>
struct SpectralData {
  VectorXd eigenvalues;
  Matrix<Scalar> eigenvectors;
  double tol_used = 0.0;  // off-diagonal Frobenius threshold the sweeps stopped at
  int sweeps = 0;
};

template <FieldScalar Scalar>
bool is_self_adjoint(const Matrix<Scalar>& a, double rel_tol = kSelfAdjointTol);

/// Cyclic Jacobi. Sweeps until off(A) < 1e-13 ||A||_F, at most 100 sweeps.
/// Throws errc::not_self_adjoint.
template <FieldScalar Scalar>
SpectralData<Scalar> hermitian_eig(const Matrix<Scalar>& a);

/// Singular values, descending, via the self-adjoint path: |eigenvalues| for
/// square self-adjoint input, otherwise the nonnegative spectrum of the
/// dilation [[0, A], [A*, 0]].
template <FieldScalar Scalar>
VectorXd singular_values(const Matrix<Scalar>& a);

/// max(rows, cols) * eps * sigma_max, unless FRAMEKIT_TOL is set in the
/// environment, in which case that absolute value is used.
double default_rank_tol(Index rows, Index cols, double sigma_max);

template <FieldScalar Scalar>
double default_rank_tol(const Matrix<Scalar>& a);

/// Number of singular values strictly above `tol` (default_rank_tol if absent).
template <FieldScalar Scalar>
Index numerical_rank(const Matrix<Scalar>& a, std::optional<double> tol = std::nullopt);

/// Entrywise product. Throws errc::shape_mismatch.
template <class DerivedA, class DerivedB>
auto hadamard(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw error(errc::shape_mismatch, "hadamard operands differ in shape");
  return a.cwiseProduct(b).eval();
}

/// Block matrix [a_ij * B].
template <class DerivedA, class DerivedB>
auto kronecker(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// <S, T>_F = Tr(S* T). Throws errc::shape_mismatch.
template <class DerivedS, class DerivedT>
typename DerivedS::Scalar frobenius_ip(const Eigen::MatrixBase<DerivedS>& s, const Eigen::MatrixBase<DerivedT>& t) {
  if (s.rows() != t.rows() || s.cols() != t.cols())
    throw error(errc::shape_mismatch, "frobenius_ip operands differ in shape");
  return s.conjugate().cwiseProduct(t).sum();
}

/// phi phi* flattened as the stacked blocks phi(k) * conj(phi), k = 0..N-1.
template <FieldScalar Scalar>
Vector<Scalar> vectorize_outer(const Vector<Scalar>& phi) {
  const Index n = phi.size();
  Vector<Scalar> out(n * n);
  for (Index k = 0; k < n; ++k) out.segment(k * n, n) = phi(k) * phi.conjugate();
  return out;
}

/// (det(I_M + S T), det(I_N + T S)) for S: M×N, T: N×M.
template <FieldScalar Scalar>
std::pair<Scalar, Scalar> sylvester_det_check(const Matrix<Scalar>& s, const Matrix<Scalar>& t) {
  if (s.cols() != t.rows() || s.rows() != t.cols())
    throw error(errc::shape_mismatch, "sylvester_det_check needs S: MxN and T: NxM");
  const Matrix<Scalar> lhs = Matrix<Scalar>::Identity(s.rows(), s.rows()) + s * t;
  const Matrix<Scalar> rhs = Matrix<Scalar>::Identity(t.rows(), t.rows()) + t * s;
  return {lhs.determinant(), rhs.determinant()};
}

}  // namespace framekit
