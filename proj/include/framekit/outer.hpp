#pragma once

#include <optional>
#include <vector>

#include "framekit/frame.hpp"

namespace framekit {

/// The induced sequence {phi_i phi_i*} together with its (real) Gram matrix.
template <FieldScalar Scalar>
struct OuterSequence {
  Frame<Scalar> source;
  std::vector<Matrix<Scalar>> outers;
  MatrixXd gram_op;  // [|<phi_i, phi_j>|^2]
  Index rank = 0;
  Index ambient_dim = 0;

  Index size() const { return static_cast<Index>(outers.size()); }
};

template <FieldScalar Scalar>
OuterSequence<Scalar> induce(const Frame<Scalar>& f);

/// Extreme eigenvalues of gram_op. Throws errc::not_independent.
template <FieldScalar Scalar>
BoundsReport outer_riesz_bounds(const OuterSequence<Scalar>& os);

/// rank(gram_op) == M. The rank of the N²×M vectorized synthesis matrix is
/// computed as well; if the two disagree errc::internal_inconsistency is thrown.
template <FieldScalar Scalar>
bool is_independent(const OuterSequence<Scalar>& os);

/// Columns are vectorize_outer(phi_i).
template <FieldScalar Scalar>
Matrix<Scalar> vectorized_synthesis(const Frame<Scalar>& f);

/// Greedy rank-growing selection over a Gram matrix: index i is kept when it
/// strictly increases the rank of the selected principal submatrix.
std::vector<Index> independent_prefix(const MatrixXd& gram_op);

/// A nontrivial relation sum a_i phi_i phi_i* = 0, split by the sign of a_i.
struct DependenceCertificate {
  VectorXd coefficients;   // unit 2-norm
  double residual = 0.0;   // ||sum a_i phi_i phi_i*||_F
  std::vector<Index> split;  // {i : a_i >= 0}
  Index pivot = 0;         // first index whose outer lies in the span of the earlier ones
};

/// Empty when the outers are independent. Otherwise the first dependency met
/// by greedy selection: a_pivot = -1 against the selected prefix, normalised.
/// The residual and the equality of the two split frame operators are checked
/// at certificate_residual_tol() (errc::internal_inconsistency on failure).
/// 1e-8, or sqrt(FRAMEKIT_TOL) when that is larger.
double certificate_residual_tol();

template <FieldScalar Scalar>
std::optional<DependenceCertificate> dependence_certificate(const OuterSequence<Scalar>& os);

/// Sufficient condition for independent outers: for every coordinate k the
/// vectors with |phi_i(k)| > 1e-12 are linearly independent.
/// Throws errc::zero_vector.
template <FieldScalar Scalar>
bool sparsity_check(const Frame<Scalar>& f);

struct OptimalBoundReport {
  double upper_bound_floor = 0.0;                 // M/N
  std::optional<double> lower_bound_ceiling;      // M(N-1)/(N(M-1)), only for M > N
  double achieved_upper = 0.0;
  double achieved_lower = 0.0;
  double upper_gap = 0.0;                         // achieved_upper - floor (>= 0)
  std::optional<double> lower_gap;                // ceiling - achieved_lower (>= 0)
};

/// Throws errc::not_unit_norm.
template <FieldScalar Scalar>
OptimalBoundReport optimal_bound_report(const OuterSequence<Scalar>& os);

/// Biorthogonal vectors of an independent {phi_i}: columns of T G^{-1}.
template <FieldScalar Scalar>
Matrix<Scalar> biorthogonal_vectors(const Frame<Scalar>& f);

/// The unprojected candidates dual_i dual_i*.
template <FieldScalar Scalar>
std::vector<Matrix<Scalar>> outer_dual_candidates(const Frame<Scalar>& f);

/// P(dual_i dual_i*) with P the Frobenius-orthogonal projection onto
/// span{phi_j phi_j*}. Verifies <phi_i phi_i*, D_j>_F = delta_ij within 1e-9.
/// Throws errc::not_independent.
template <FieldScalar Scalar>
std::vector<Matrix<Scalar>> outer_duals(const Frame<Scalar>& f);

/// Distance (Frobenius) from `x` to span{phi_j phi_j*}.
template <FieldScalar Scalar>
double span_distance(const OuterSequence<Scalar>& os, const Matrix<Scalar>& x);

/// Gram matrix of {phi_i psi_j*} in row-major (i, j) order:
/// kronecker(gram(f), transpose(gram(g))). Throws errc::dimension_mismatch.
template <FieldScalar Scalar>
Matrix<Scalar> cross_gram(const Frame<Scalar>& f, const Frame<Scalar>& g);

/// The cross outer products phi_i psi_j*, row-major in (i, j).
template <FieldScalar Scalar>
std::vector<Matrix<Scalar>> cross_outers(const Frame<Scalar>& f, const Frame<Scalar>& g);

/// Dual basis {dual_i dualpsi_j*} of {phi_i psi_j*}, row-major in (i, j).
/// Verifies biorthogonality within 1e-9. Throws errc::not_a_basis.
template <FieldScalar Scalar>
std::vector<Matrix<Scalar>> cross_duals(const Frame<Scalar>& f, const Frame<Scalar>& g);

}  // namespace framekit
