#include "framekit/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

namespace framekit {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kConvergence = 1e-13;
constexpr double kPhaseThreshold = 1e-10;

template <FieldScalar Scalar>
double off_diagonal_norm(const Matrix<Scalar>& a) {
  double sum = 0.0;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (i != j) sum += Eigen::numext::abs2(a(i, j));
  return std::sqrt(sum);
}

// One Jacobi rotation annihilating a(p, q). The unitary acting on the (p, q)
// plane is U = D R with D = diag(1, conj(w)) making a(p, q) real and R the
// classical real rotation.
template <FieldScalar Scalar>
void rotate(Matrix<Scalar>& a, Matrix<Scalar>& v, Index p, Index q) {
  using Eigen::numext::conj;
  const Scalar apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag <= std::numeric_limits<double>::min()) return;

  const Scalar w = apq / mag;
  const double app = Eigen::numext::real(a(p, p));
  const double aqq = Eigen::numext::real(a(q, q));
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
  const double c = 1.0 / std::hypot(1.0, t);
  const double s = t * c;

  const Scalar u_pp = c;
  const Scalar u_pq = s;
  const Scalar u_qp = -conj(w) * s;
  const Scalar u_qq = conj(w) * c;

  const Index n = a.rows();
  for (Index k = 0; k < n; ++k) {
    const Scalar x = a(k, p), y = a(k, q);
    a(k, p) = x * u_pp + y * u_qp;
    a(k, q) = x * u_pq + y * u_qq;
  }
  for (Index k = 0; k < n; ++k) {
    const Scalar x = a(p, k), y = a(q, k);
    a(p, k) = conj(u_pp) * x + conj(u_qp) * y;
    a(q, k) = conj(u_pq) * x + conj(u_qq) * y;
  }
  a(p, q) = Scalar(0);
  a(q, p) = Scalar(0);
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;

  for (Index k = 0; k < n; ++k) {
    const Scalar x = v(k, p), y = v(k, q);
    v(k, p) = x * u_pp + y * u_qp;
    v(k, q) = x * u_pq + y * u_qq;
  }
}

}  // namespace

template <FieldScalar Scalar>
bool is_self_adjoint(const Matrix<Scalar>& a, double rel_tol) {
  if (a.rows() != a.cols()) return false;
  const double scale = a.norm();
  double worst = 0.0;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i <= j; ++i)
      worst = std::max(worst, std::abs(a(i, j) - Eigen::numext::conj(a(j, i))));
  return worst <= rel_tol * scale;
}

template <FieldScalar Scalar>
SpectralData<Scalar> hermitian_eig(const Matrix<Scalar>& input) {
  if (input.rows() != input.cols())
    throw error(errc::not_self_adjoint, "matrix is not square");
  if (!is_self_adjoint(input))
    throw error(errc::not_self_adjoint, "matrix differs from its adjoint beyond 1e-12 ||S||_F");

  const Index n = input.rows();
  Matrix<Scalar> a = (input + input.adjoint()) / 2.0;
  Matrix<Scalar> v = Matrix<Scalar>::Identity(n, n);
  const double target = kConvergence * a.norm();

  const auto sweep = [&] {
    for (Index p = 0; p < n - 1; ++p)
      for (Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
  };
  int sweeps = 0;
  double off = off_diagonal_norm(a);
  while (sweeps < kMaxSweeps && off > target) {
    ++sweeps;
    sweep();
    off = off_diagonal_norm(a);
  }
  // polish down to rounding level while sweeps still pay off
  const double floor = std::numeric_limits<double>::epsilon() * a.norm();
  while (sweeps < kMaxSweeps && off > floor) {
    ++sweeps;
    sweep();
    const double next = off_diagonal_norm(a);
    if (next > 0.5 * off) break;
    off = next;
  }

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index i, Index j) {
    return Eigen::numext::real(a(i, i)) > Eigen::numext::real(a(j, j));
  });

  SpectralData<Scalar> out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  out.tol_used = target;
  out.sweeps = sweeps;
  for (Index k = 0; k < n; ++k) {
    const Index src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = Eigen::numext::real(a(src, src));
    Vector<Scalar> col = v.col(src);
    for (Index i = 0; i < n; ++i) {
      const double mod = std::abs(col(i));
      if (mod > kPhaseThreshold) {
        col *= Eigen::numext::conj(col(i)) / mod;
        col(i) = Eigen::numext::real(col(i));
        break;
      }
    }
    out.eigenvectors.col(k) = col;
  }
  return out;
}

template <FieldScalar Scalar>
VectorXd singular_values(const Matrix<Scalar>& a) {
  if (a.size() == 0) return VectorXd();
  if (a.rows() == a.cols() && is_self_adjoint(a)) {
    VectorXd s = hermitian_eig(a).eigenvalues.cwiseAbs();
    std::sort(s.data(), s.data() + s.size(), std::greater<>());
    return s;
  }
  const Index r = a.rows(), c = a.cols();
  Matrix<Scalar> dilation = Matrix<Scalar>::Zero(r + c, r + c);
  dilation.topRightCorner(r, c) = a;
  dilation.bottomLeftCorner(c, r) = a.adjoint();
  const VectorXd lambda = hermitian_eig(dilation).eigenvalues;
  return lambda.head(std::min(r, c)).cwiseMax(0.0);
}

double default_rank_tol(Index rows, Index cols, double sigma_max) {
  if (const char* env = std::getenv("FRAMEKIT_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end != env && std::isfinite(value) && value >= 0.0) return value;
  }
  return static_cast<double>(std::max(rows, cols)) * std::numeric_limits<double>::epsilon() * sigma_max;
}

template <FieldScalar Scalar>
double default_rank_tol(const Matrix<Scalar>& a) {
  const VectorXd s = singular_values(a);
  return default_rank_tol(a.rows(), a.cols(), s.size() > 0 ? s(0) : 0.0);
}

template <FieldScalar Scalar>
Index numerical_rank(const Matrix<Scalar>& a, std::optional<double> tol) {
  const VectorXd s = singular_values(a);
  if (s.size() == 0) return 0;
  const double threshold = tol ? *tol : default_rank_tol(a.rows(), a.cols(), s(0));
  return static_cast<Index>((s.array() > threshold).count());
}

#define FRAMEKIT_INSTANTIATE(S)                                                   \
  template bool is_self_adjoint<S>(const Matrix<S>&, double);                     \
  template SpectralData<S> hermitian_eig<S>(const Matrix<S>&);                    \
  template VectorXd singular_values<S>(const Matrix<S>&);                         \
  template double default_rank_tol<S>(const Matrix<S>&);                          \
  template Index numerical_rank<S>(const Matrix<S>&, std::optional<double>);

FRAMEKIT_INSTANTIATE(double)
FRAMEKIT_INSTANTIATE(cdouble)

#undef FRAMEKIT_INSTANTIATE

}  // namespace framekit
