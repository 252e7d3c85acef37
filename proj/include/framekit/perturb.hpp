#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "framekit/outer.hpp"

namespace framekit {

/// ((sqrt A - eps)^2, (sqrt B + eps)^2) with eps = sqrt(eps_sq): Riesz bounds
/// that survive a perturbation with sum ||phi_i - psi_i||^2 = eps_sq.
/// Throws errc::bad_param unless 0 < A <= B, errc::budget_too_large if eps_sq >= A.
std::pair<double, double> perturbed_riesz_bounds(double a, double b, double eps_sq);

/// ||phi phi* - psi psi*||_F^2 = 2(1 - |<phi, psi>|^2), checked against
/// 2 ||phi - psi||^2. Throws errc::not_unit_norm.
template <FieldScalar Scalar>
double outer_distance(const Vector<Scalar>& phi, const Vector<Scalar>& psi);

/// Unit-norm perturbations with sum ||phi_i - psi_i||^2 < radius = A/2 keep
/// the outers independent, with bounds given by lower_at / upper_at.
struct IndependenceRadius {
  double radius = 0.0;
  double lower = 0.0;  // A
  double upper = 0.0;  // B

  double lower_at(double eps) const { return std::pow(std::sqrt(lower) - std::sqrt(2.0 * eps), 2); }
  double upper_at(double eps) const { return std::pow(std::sqrt(upper) + std::sqrt(2.0 * eps), 2); }
};

/// Throws errc::not_independent.
template <FieldScalar Scalar>
IndependenceRadius independence_radius(const OuterSequence<Scalar>& os);

/// Whether outer independence of f and of {s phi_i} agree (it always should).
/// Throws errc::singular_operator.
template <FieldScalar Scalar>
bool rescale_invariance_check(const Frame<Scalar>& f, const Matrix<Scalar>& s);

/// d unit vectors (d the self-adjoint dimension), each with ||phi_i - psi||^2
/// < eps, whose outers are independent. Built from the E_ij basis turned so
/// every vector leans on the first axis, squashed by diag(1, delta, ...) and
/// carried onto psi by a unitary.
template <FieldScalar Scalar>
Frame<Scalar> nearby_independent_basis(const Vector<Scalar>& psi, double eps);

template <FieldScalar Scalar>
struct NudgeResult {
  Frame<Scalar> frame;
  std::vector<Index> replaced;  // indices that moved
  double movement = 0.0;        // sum ||phi'_i - phi_i||
  double per_vector_budget = 0.0;
};

/// Greedy repair: each vector whose outer falls in the span of the earlier
/// ones is swapped for the first nearby basis vector that grows the rank,
/// moving it by less than eps / M. Throws errc::too_many, errc::not_unit_norm.
template <FieldScalar Scalar>
NudgeResult<Scalar> nudge_to_independence(const Frame<Scalar>& f, double eps);

}  // namespace framekit
