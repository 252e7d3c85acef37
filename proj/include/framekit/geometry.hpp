#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "framekit/outer.hpp"

namespace framekit {

/// A PSD matrix with its spectrum and the indices of its positive eigenvalues.
template <FieldScalar Scalar>
struct PsdExtension {
  Matrix<Scalar> t;
  SpectralData<Scalar> spectrum;
  std::vector<Index> i_plus;  // eigenvalues above the rank tolerance
  double rank_tol = 0.0;
};

/// Throws errc::not_psd when an eigenvalue is below -1e-10 lambda_max,
/// errc::not_self_adjoint for non-self-adjoint input.
template <FieldScalar Scalar>
PsdExtension<Scalar> make_extension(const Matrix<Scalar>& t);

/// [[t, v], [v*, 1]] has the same numerical rank as t.
template <FieldScalar Scalar>
bool extension_rank_preserved(const Matrix<Scalar>& t, const Vector<Scalar>& v);

/// sum over i_plus of a_i sqrt(lambda_i) e_i. `a` is indexed like i_plus and
/// must have unit norm within 1e-12 (errc::bad_coefficients otherwise).
template <FieldScalar Scalar>
Vector<Scalar> admissible_vector(const PsdExtension<Scalar>& ext, const Vector<Scalar>& a);

/// Inverse of admissible_vector: the coefficients of v when it lies in the
/// positive eigenspace and they have unit norm, both within `tol`.
template <FieldScalar Scalar>
std::optional<Vector<Scalar>> admissible_coefficients(const PsdExtension<Scalar>& ext, const Vector<Scalar>& v,
                                                      double tol = kDependenceTol);

/// w = |T candidate|^2 expanded in the eigenbasis of the outer Gram matrix,
/// f = sum y_i^2 / lambda_i. Equals 1 exactly when the candidate's outer
/// product lies in the span of the frame's.
/// Throws errc::not_independent, errc::too_many (unless allow_saturated),
/// errc::not_unit_norm.
template <FieldScalar Scalar>
double elliptic_value(const Frame<Scalar>& f, const Vector<Scalar>& candidate, bool allow_saturated = false);

/// |w^T gram_op^{-1} w - 1| with w = v o conj(v), v in the analysis range.
/// Throws errc::not_independent.
template <FieldScalar Scalar>
double quartic_residual(const Frame<Scalar>& f, const Vector<Scalar>& v);

/// |sum_{i<=N} |v_i|^2 / lambda_i - 1| in the eigenbasis of gram(f); +inf when
/// v has a component above `tol` outside the top-N eigenspace.
/// Throws errc::not_a_frame.
template <FieldScalar Scalar>
double ellipsoid_residual(const Frame<Scalar>& f, const Vector<Scalar>& v, double tol = kDependenceTol);

enum class Verdict { dependent, independent };

template <FieldScalar Scalar>
struct ClassificationReport {
  Vector<Scalar> candidate;
  Vector<Scalar> tv;                         // analysis image under the prefix frame
  std::optional<double> ellipsoid_residual;  // only when the prefix spans
  double quartic_value = 0.0;
  double elliptic_value = 0.0;
  Verdict verdict = Verdict::independent;
  double tol = kDependenceTol;
  std::vector<Index> permutation;  // frame indices of the independent prefix, in order
  bool reordered = false;
  Index extended_rank = 0;
  double rank_tol = 0.0;
};

/// Works on the greedy independent prefix of f. Dependent iff
/// |elliptic_value - 1| <= tol, cross-checked against the rank of the
/// extended outer Gram matrix (errc::internal_inconsistency on disagreement).
template <FieldScalar Scalar>
ClassificationReport<Scalar> classify(const Frame<Scalar>& f, const Vector<Scalar>& candidate,
                                      double tol = kDependenceTol);

/// Largest quartic residual of T psi over `samples` random unit psi, using the
/// independent prefix of a frame whose outers span every self-adjoint matrix.
/// Throws errc::rank_deficient.
template <FieldScalar Scalar>
double mu2_subset_mu4_probe(const Frame<Scalar>& f, Index samples, std::uint64_t seed);

}  // namespace framekit
