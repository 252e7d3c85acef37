#include "framekit/perturb.hpp"

#include <cmath>
#include <string>

#include <Eigen/QR>

#include "framekit/constructions.hpp"

namespace framekit {

namespace {

constexpr double kDistanceSlack = 1e-12;
constexpr int kMaxHalvings = 1000;

template <FieldScalar Scalar>
void require_unit(const Vector<Scalar>& v, const char* what) {
  if (std::abs(v.norm() - 1.0) > kUnitNormTol) throw error(errc::not_unit_norm, std::string(what) + " is not a unit vector");
}

template <FieldScalar Scalar>
Frame<Scalar> eij_for(Index n) {
  if constexpr (std::same_as<Scalar, double>)
    return eij_basis(n);
  else
    return complex_eij_basis(n);
}

// Unitary with first column exactly psi.
template <FieldScalar Scalar>
Matrix<Scalar> unitary_from(const Vector<Scalar>& psi) {
  const Index n = psi.size();
  Eigen::HouseholderQR<Matrix<Scalar>> qr{Matrix<Scalar>(psi)};
  Matrix<Scalar> u = qr.householderQ() * Matrix<Scalar>::Identity(n, n);
  u.col(0) *= qr.matrixQR()(0, 0);
  return u;
}

template <FieldScalar Scalar>
Index outer_rank(const Matrix<Scalar>& columns) {
  return induce(Frame<Scalar>(columns)).rank;
}

}  // namespace

std::pair<double, double> perturbed_riesz_bounds(double a, double b, double eps_sq) {
  if (!(a > 0.0 && a <= b)) throw error(errc::bad_param, "need 0 < A <= B");
  if (eps_sq < 0.0) throw error(errc::bad_param, "eps_sq must be nonnegative");
  if (eps_sq >= a) throw error(errc::budget_too_large, "eps^2 must stay below the lower bound A");
  const double eps = std::sqrt(eps_sq);
  return {std::pow(std::sqrt(a) - eps, 2), std::pow(std::sqrt(b) + eps, 2)};
}

template <FieldScalar Scalar>
double outer_distance(const Vector<Scalar>& phi, const Vector<Scalar>& psi) {
  if (phi.size() != psi.size()) throw error(errc::dimension_mismatch, "vectors differ in length");
  require_unit(phi, "phi");
  require_unit(psi, "psi");
  const double d = 2.0 * (1.0 - std::norm(phi.dot(psi)));
  if (d > 2.0 * (phi - psi).squaredNorm() + kDistanceSlack)
    throw error(errc::internal_inconsistency, "outer distance exceeds 2 ||phi - psi||^2");
  return d;
}

template <FieldScalar Scalar>
IndependenceRadius independence_radius(const OuterSequence<Scalar>& os) {
  const BoundsReport b = outer_riesz_bounds(os);
  return {b.lower / 2.0, b.lower, b.upper};
}

template <FieldScalar Scalar>
bool rescale_invariance_check(const Frame<Scalar>& f, const Matrix<Scalar>& s) {
  if (s.rows() != f.dim() || s.cols() != f.dim()) throw error(errc::dimension_mismatch, "s must be N×N");
  if (numerical_rank(s) < f.dim()) throw error(errc::singular_operator, "rescaling operator is singular");
  return is_independent(induce(f)) == is_independent(induce(Frame<Scalar>(s * f.matrix())));
}

template <FieldScalar Scalar>
Frame<Scalar> nearby_independent_basis(const Vector<Scalar>& psi, double eps) {
  if (!(eps > 0.0)) throw error(errc::bad_param, "eps must be positive");
  require_unit(psi, "psi");
  const Index n = psi.size();

  // Reflect so the all-ones direction lands on e_1; every E_ij then has a
  // nonzero first coordinate, which is phased real positive.
  Matrix<Scalar> base = eij_for<Scalar>(n).matrix();
  VectorXd h = VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  h(0) -= 1.0;
  if (h.squaredNorm() > 0.0) {
    const MatrixXd reflect = MatrixXd::Identity(n, n) - 2.0 * h * h.transpose() / h.squaredNorm();
    base = reflect.cast<Scalar>() * base;
  }
  const Index d = base.cols();
  for (Index i = 0; i < d; ++i) {
    const Scalar lead = base(0, i);
    base.col(i) *= Eigen::numext::conj(lead) / std::abs(lead);
    base(0, i) = std::abs(lead);
  }

  double delta = 1.0;
  const auto fits = [&](double dl) {
    for (Index i = 0; i < d; ++i) {
      const double tail = base.col(i).tail(n - 1).squaredNorm();
      if (dl * dl * tail > 0.5 * eps * std::norm(base(0, i))) return false;
    }
    return true;
  };
  for (int k = 0; k < kMaxHalvings && !fits(delta); ++k) delta /= 2.0;

  Matrix<Scalar> squashed = base;
  squashed.bottomRows(n - 1) *= delta;
  squashed.colwise().normalize();
  Matrix<Scalar> out = unitary_from(psi) * squashed;
  out.colwise().normalize();

  for (Index i = 0; i < d; ++i)
    if ((out.col(i) - psi).squaredNorm() >= eps)
      throw error(errc::internal_inconsistency, "nearby basis vector left the eps ball");
  // Invertible rescaling and a unitary preserve outer independence, so the
  // check runs on the well-conditioned turned basis.
  if (outer_rank(base) != d) throw error(errc::internal_inconsistency, "turned E_ij outers are dependent");
  return Frame<Scalar>(std::move(out));
}

template <FieldScalar Scalar>
NudgeResult<Scalar> nudge_to_independence(const Frame<Scalar>& f, double eps) {
  if (!(eps > 0.0)) throw error(errc::bad_param, "eps must be positive");
  const Index n = f.dim();
  const Index m = f.size();
  const Index d = self_adjoint_dim(field_of<Scalar>, n);
  if (m > d) throw error(errc::too_many, std::to_string(m) + " vectors exceed the self-adjoint dimension " + std::to_string(d));
  if (!f.is_unit_norm()) throw error(errc::not_unit_norm, "nudge needs unit-norm vectors");

  const double budget = eps / static_cast<double>(m);
  NudgeResult<Scalar> r{f, {}, 0.0, budget};
  Matrix<Scalar> kept(n, 0);
  const auto grows = [&](const Vector<Scalar>& v) {
    Matrix<Scalar> trial(n, kept.cols() + 1);
    trial << kept, v;
    return outer_rank(trial) == trial.cols();
  };
  const auto push = [&](const Vector<Scalar>& v) {
    kept.conservativeResize(Eigen::NoChange, kept.cols() + 1);
    kept.col(kept.cols() - 1) = v;
  };

  for (Index i = 0; i < m; ++i) {
    const Vector<Scalar> phi = f.vector(i);
    if (grows(phi)) {
      push(phi);
      continue;
    }
    const Frame<Scalar> nearby = nearby_independent_basis(phi, 0.99 * budget * budget);
    bool placed = false;
    for (Index k = 0; k < nearby.size() && !placed; ++k) {
      if (!grows(nearby.vector(k))) continue;
      push(nearby.vector(k));
      r.replaced.push_back(i);
      r.movement += (nearby.vector(k) - phi).norm();
      placed = true;
    }
    if (!placed) throw error(errc::internal_inconsistency, "no nearby vector grows the outer rank");
  }

  r.frame = Frame<Scalar>(std::move(kept));
  if (!(r.movement < eps)) throw error(errc::internal_inconsistency, "nudge exceeded its movement budget");
  return r;
}

#define FRAMEKIT_INSTANTIATE(S)                                                        \
  template double outer_distance<S>(const Vector<S>&, const Vector<S>&);               \
  template IndependenceRadius independence_radius<S>(const OuterSequence<S>&);         \
  template bool rescale_invariance_check<S>(const Frame<S>&, const Matrix<S>&);        \
  template Frame<S> nearby_independent_basis<S>(const Vector<S>&, double);             \
  template NudgeResult<S> nudge_to_independence<S>(const Frame<S>&, double);

FRAMEKIT_INSTANTIATE(double)
FRAMEKIT_INSTANTIATE(cdouble)

#undef FRAMEKIT_INSTANTIATE

}  // namespace framekit
