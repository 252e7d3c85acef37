#include "framekit/outer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace framekit {

namespace {

constexpr double kCertificateTol = 1e-8;
constexpr double kDualTol = 1e-9;
constexpr double kSparsityThreshold = 1e-12;

MatrixXd principal(const MatrixXd& g, const std::vector<Index>& idx) {
  const Index k = static_cast<Index>(idx.size());
  MatrixXd out(k, k);
  for (Index j = 0; j < k; ++j)
    for (Index i = 0; i < k; ++i) out(i, j) = g(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
  return out;
}

template <FieldScalar Scalar>
Matrix<Scalar> outer_of(const Vector<Scalar>& v) {
  return v * v.adjoint();
}

}  // namespace

template <FieldScalar Scalar>
OuterSequence<Scalar> induce(const Frame<Scalar>& f) {
  OuterSequence<Scalar> os{f, {}, {}, 0, self_adjoint_dim(field_of<Scalar>, f.dim())};
  os.outers.reserve(static_cast<std::size_t>(f.size()));
  for (Index i = 0; i < f.size(); ++i) os.outers.push_back(outer_of<Scalar>(f.vector(i)));
  const Matrix<Scalar> g = gram(f);
  os.gram_op = hadamard(g, g.conjugate()).real();
  os.rank = numerical_rank(os.gram_op);
  return os;
}

template <FieldScalar Scalar>
BoundsReport outer_riesz_bounds(const OuterSequence<Scalar>& os) {
  if (os.rank < os.size()) throw error(errc::not_independent, "outer products are dependent");
  const VectorXd lambda = hermitian_eig(os.gram_op).eigenvalues;
  return make_bounds(lambda(lambda.size() - 1), lambda(0), BoundKind::riesz);
}

template <FieldScalar Scalar>
Matrix<Scalar> vectorized_synthesis(const Frame<Scalar>& f) {
  Matrix<Scalar> out(f.dim() * f.dim(), f.size());
  for (Index i = 0; i < f.size(); ++i) out.col(i) = vectorize_outer<Scalar>(f.vector(i));
  return out;
}

template <FieldScalar Scalar>
bool is_independent(const OuterSequence<Scalar>& os) {
  const bool by_gram = os.rank == os.size();
  const bool by_vectorization = numerical_rank(vectorized_synthesis(os.source)) == os.size();
  if (by_gram != by_vectorization)
    throw error(errc::internal_inconsistency,
                "outer Gram rank and vectorized rank disagree on independence");
  return by_gram;
}

double certificate_residual_tol() {
  // residual^2 is the Gram eigenvalue the rank test called zero
  return std::max(kCertificateTol, std::sqrt(default_rank_tol(1, 1, 0.0)));
}

std::vector<Index> independent_prefix(const MatrixXd& gram_op) {
  std::vector<Index> selected;
  for (Index i = 0; i < gram_op.rows(); ++i) {
    selected.push_back(i);
    if (numerical_rank(principal(gram_op, selected)) < static_cast<Index>(selected.size())) selected.pop_back();
  }
  return selected;
}

template <FieldScalar Scalar>
std::optional<DependenceCertificate> dependence_certificate(const OuterSequence<Scalar>& os) {
  if (os.rank == os.size()) return std::nullopt;

  std::vector<Index> selected;
  Index pivot = -1;
  for (Index i = 0; i < os.size(); ++i) {
    selected.push_back(i);
    if (numerical_rank(principal(os.gram_op, selected)) < static_cast<Index>(selected.size())) {
      selected.pop_back();
      pivot = i;
      break;
    }
  }
  if (pivot < 0) return std::nullopt;

  const Index k = static_cast<Index>(selected.size());
  VectorXd a = VectorXd::Zero(os.size());
  if (k > 0) {
    VectorXd rhs(k);
    for (Index r = 0; r < k; ++r) rhs(r) = os.gram_op(selected[static_cast<std::size_t>(r)], pivot);
    const VectorXd c = principal(os.gram_op, selected).ldlt().solve(rhs);
    for (Index r = 0; r < k; ++r) a(selected[static_cast<std::size_t>(r)]) = c(r);
  }
  a(pivot) = -1.0;
  a.normalize();

  DependenceCertificate cert;
  cert.coefficients = a;
  cert.pivot = pivot;

  const Index n = os.source.dim();
  Matrix<Scalar> positive = Matrix<Scalar>::Zero(n, n);
  Matrix<Scalar> negative = Matrix<Scalar>::Zero(n, n);
  double scale = 1.0;
  for (Index i = 0; i < os.size(); ++i) {
    scale = std::max(scale, os.outers[static_cast<std::size_t>(i)].norm());
    if (a(i) >= 0.0) {
      cert.split.push_back(i);
      positive += a(i) * os.outers[static_cast<std::size_t>(i)];
    } else {
      negative += -a(i) * os.outers[static_cast<std::size_t>(i)];
    }
  }
  cert.residual = (positive - negative).norm();
  if (cert.residual > certificate_residual_tol() * scale)
    throw error(errc::internal_inconsistency, "dependence certificate residual " + std::to_string(cert.residual) +
                                                  " exceeds " + std::to_string(certificate_residual_tol()));
  return cert;
}

template <FieldScalar Scalar>
bool sparsity_check(const Frame<Scalar>& f) {
  for (Index i = 0; i < f.size(); ++i)
    if (f.vector(i).norm() <= kSparsityThreshold) throw error(errc::zero_vector, "frame contains a zero vector");

  for (Index k = 0; k < f.dim(); ++k) {
    std::vector<Index> support;
    for (Index i = 0; i < f.size(); ++i)
      if (std::abs(f.matrix()(k, i)) > kSparsityThreshold) support.push_back(i);
    if (support.empty()) continue;
    const Frame<Scalar> sub = f.subset(support);
    if (numerical_rank(sub.matrix()) < sub.size()) return false;
  }
  return true;
}

template <FieldScalar Scalar>
OptimalBoundReport optimal_bound_report(const OuterSequence<Scalar>& os) {
  if (!os.source.is_unit_norm()) throw error(errc::not_unit_norm, "optimal bounds assume unit-norm vectors");
  const double m = static_cast<double>(os.size());
  const double n = static_cast<double>(os.source.dim());
  const VectorXd lambda = hermitian_eig(os.gram_op).eigenvalues;

  OptimalBoundReport r;
  r.upper_bound_floor = m / n;
  r.achieved_upper = lambda(0);
  r.achieved_lower = lambda(lambda.size() - 1);
  r.upper_gap = r.achieved_upper - r.upper_bound_floor;
  if (m > n) {
    r.lower_bound_ceiling = m * (n - 1.0) / (n * (m - 1.0));
    r.lower_gap = *r.lower_bound_ceiling - r.achieved_lower;
  }
  return r;
}

template <FieldScalar Scalar>
Matrix<Scalar> biorthogonal_vectors(const Frame<Scalar>& f) {
  const Matrix<Scalar> g = gram(f);
  if (numerical_rank(g) < f.size()) throw error(errc::not_independent, "vectors are linearly dependent");
  return f.matrix() * g.ldlt().solve(Matrix<Scalar>::Identity(f.size(), f.size()));
}

template <FieldScalar Scalar>
std::vector<Matrix<Scalar>> outer_dual_candidates(const Frame<Scalar>& f) {
  const Matrix<Scalar> dual = biorthogonal_vectors(f);
  std::vector<Matrix<Scalar>> out;
  for (Index i = 0; i < dual.cols(); ++i) out.push_back(outer_of<Scalar>(dual.col(i)));
  return out;
}

template <FieldScalar Scalar>
std::vector<Matrix<Scalar>> outer_duals(const Frame<Scalar>& f) {
  const OuterSequence<Scalar> os = induce(f);
  if (!is_independent(os)) throw error(errc::not_independent, "outer products are dependent");
  const std::vector<Matrix<Scalar>> candidates = outer_dual_candidates(f);

  const Index m = os.size();
  const auto solver = os.gram_op.ldlt();
  std::vector<Matrix<Scalar>> duals;
  for (const auto& c : candidates) {
    VectorXd rhs(m);
    for (Index k = 0; k < m; ++k) rhs(k) = Eigen::numext::real(frobenius_ip(os.outers[static_cast<std::size_t>(k)], c));
    const VectorXd beta = solver.solve(rhs);
    Matrix<Scalar> projected = Matrix<Scalar>::Zero(f.dim(), f.dim());
    for (Index k = 0; k < m; ++k) projected += beta(k) * os.outers[static_cast<std::size_t>(k)];
    duals.push_back(std::move(projected));
  }

  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) {
      const double expected = i == j ? 1.0 : 0.0;
      const Scalar got = frobenius_ip(os.outers[static_cast<std::size_t>(i)], duals[static_cast<std::size_t>(j)]);
      if (std::abs(got - expected) > kDualTol)
        throw error(errc::internal_inconsistency, "projected outer duals fail biorthogonality");
    }
  return duals;
}

template <FieldScalar Scalar>
double span_distance(const OuterSequence<Scalar>& os, const Matrix<Scalar>& x) {
  const std::vector<Index> basis = independent_prefix(os.gram_op);
  const Index k = static_cast<Index>(basis.size());
  if (k == 0) return x.norm();
  VectorXd rhs(k);
  for (Index r = 0; r < k; ++r)
    rhs(r) = Eigen::numext::real(frobenius_ip(os.outers[static_cast<std::size_t>(basis[static_cast<std::size_t>(r)])], x));
  const VectorXd beta = principal(os.gram_op, basis).ldlt().solve(rhs);
  Matrix<Scalar> projected = Matrix<Scalar>::Zero(x.rows(), x.cols());
  for (Index r = 0; r < k; ++r) projected += beta(r) * os.outers[static_cast<std::size_t>(basis[static_cast<std::size_t>(r)])];
  return (x - projected).norm();
}

template <FieldScalar Scalar>
Matrix<Scalar> cross_gram(const Frame<Scalar>& f, const Frame<Scalar>& g) {
  if (f.dim() != g.dim()) throw error(errc::dimension_mismatch, "cross products need a common ambient dimension");
  const Matrix<Scalar> gt = gram(g).transpose();
  return kronecker(gram(f), gt);
}

template <FieldScalar Scalar>
std::vector<Matrix<Scalar>> cross_outers(const Frame<Scalar>& f, const Frame<Scalar>& g) {
  if (f.dim() != g.dim()) throw error(errc::dimension_mismatch, "cross products need a common ambient dimension");
  std::vector<Matrix<Scalar>> out;
  for (Index i = 0; i < f.size(); ++i)
    for (Index j = 0; j < g.size(); ++j) out.push_back(f.vector(i) * g.vector(j).adjoint());
  return out;
}

template <FieldScalar Scalar>
std::vector<Matrix<Scalar>> cross_duals(const Frame<Scalar>& f, const Frame<Scalar>& g) {
  if (f.dim() != g.dim()) throw error(errc::dimension_mismatch, "cross products need a common ambient dimension");
  const auto is_basis = [](const Frame<Scalar>& h) {
    return h.size() == h.dim() && numerical_rank(h.matrix()) == h.dim();
  };
  if (!is_basis(f) || !is_basis(g)) throw error(errc::not_a_basis, "cross duals need two bases");

  const Matrix<Scalar> df = biorthogonal_vectors(f);
  const Matrix<Scalar> dg = biorthogonal_vectors(g);
  std::vector<Matrix<Scalar>> duals;
  for (Index i = 0; i < df.cols(); ++i)
    for (Index j = 0; j < dg.cols(); ++j) duals.push_back(df.col(i) * dg.col(j).adjoint());

  const std::vector<Matrix<Scalar>> outers = cross_outers(f, g);
  const Index n = f.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index l = 0; l < n; ++l)
        for (Index k = 0; k < n; ++k) {
          const double expected = (i == l && j == k) ? 1.0 : 0.0;
          const Scalar got = frobenius_ip(duals[static_cast<std::size_t>(i * n + j)], outers[static_cast<std::size_t>(l * n + k)]);
          if (std::abs(got - expected) > kDualTol)
            throw error(errc::internal_inconsistency, "cross duals fail biorthogonality");
        }
  return duals;
}

#define FRAMEKIT_INSTANTIATE(S)                                                                   \
  template OuterSequence<S> induce<S>(const Frame<S>&);                                           \
  template BoundsReport outer_riesz_bounds<S>(const OuterSequence<S>&);                           \
  template Matrix<S> vectorized_synthesis<S>(const Frame<S>&);                                    \
  template bool is_independent<S>(const OuterSequence<S>&);                                       \
  template std::optional<DependenceCertificate> dependence_certificate<S>(const OuterSequence<S>&); \
  template bool sparsity_check<S>(const Frame<S>&);                                               \
  template OptimalBoundReport optimal_bound_report<S>(const OuterSequence<S>&);                   \
  template Matrix<S> biorthogonal_vectors<S>(const Frame<S>&);                                    \
  template std::vector<Matrix<S>> outer_dual_candidates<S>(const Frame<S>&);                      \
  template std::vector<Matrix<S>> outer_duals<S>(const Frame<S>&);                                \
  template double span_distance<S>(const OuterSequence<S>&, const Matrix<S>&);                    \
  template Matrix<S> cross_gram<S>(const Frame<S>&, const Frame<S>&);                             \
  template std::vector<Matrix<S>> cross_outers<S>(const Frame<S>&, const Frame<S>&);              \
  template std::vector<Matrix<S>> cross_duals<S>(const Frame<S>&, const Frame<S>&);

FRAMEKIT_INSTANTIATE(double)
FRAMEKIT_INSTANTIATE(cdouble)

#undef FRAMEKIT_INSTANTIATE

}  // namespace framekit
