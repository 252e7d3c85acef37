#include "framekit/constructions.hpp"

#include <array>
#include <cmath>
#include <string>
#include <utility>

#include "framekit/random.hpp"

namespace framekit {

namespace {

void require_dim(Index n) {
  if (n < 1) throw error(errc::bad_param, "dimension must be at least 1, got " + std::to_string(n));
}

}  // namespace

template <FieldScalar Scalar>
Frame<Scalar> orthonormal(Index n) {
  require_dim(n);
  return Frame<Scalar>(Matrix<Scalar>::Identity(n, n));
}

Frame<double> eij_basis(Index n) {
  require_dim(n);
  const double r = 1.0 / std::sqrt(2.0);
  MatrixXd m = MatrixXd::Zero(n, n * (n + 1) / 2);
  Index col = 0;
  for (Index i = 0; i < n; ++i) m(i, col++) = 1.0;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j, ++col) {
      m(i, col) = r;
      m(j, col) = r;
    }
  return Frame<double>(std::move(m));
}

Frame<cdouble> complex_eij_basis(Index n) {
  require_dim(n);
  const double r = 1.0 / std::sqrt(2.0);
  const Index real_count = n * (n + 1) / 2;
  Matrix<cdouble> m = Matrix<cdouble>::Zero(n, n * n);
  m.leftCols(real_count) = eij_basis(n).matrix().cast<cdouble>();
  Index col = real_count;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j, ++col) {
      m(i, col) = r;
      m(j, col) = cdouble(0.0, r);
    }
  return Frame<cdouble>(std::move(m));
}

Frame<double> simplex(Index n) {
  require_dim(n);
  const Index d = n + 1;
  const VectorXd f = VectorXd::Constant(d, 1.0 / std::sqrt(static_cast<double>(d)));
  const MatrixXd p = MatrixXd::Identity(d, d) - f * f.transpose();

  // range of P: eigenvalue-1 eigenvectors, the top n of the spectrum
  const MatrixXd basis = hermitian_eig(p).eigenvectors.leftCols(n);
  MatrixXd m = basis.transpose() * p;
  for (Index i = 0; i < d; ++i) m.col(i).normalize();
  return Frame<double>(std::move(m));
}

Frame<double> biangular(Index n) {
  if (n < 2) throw error(errc::bad_param, "biangular frames need n >= 2, got " + std::to_string(n));
  const Frame<double> s = simplex(n);
  MatrixXd m(n, n * (n + 1) / 2);
  Index col = 0;
  for (Index i = 0; i <= n; ++i)
    for (Index j = i + 1; j <= n; ++j, ++col) m.col(col) = (s.vector(i) + s.vector(j)).normalized();
  return Frame<double>(std::move(m));
}

Frame<double> epsilon_pair(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw error(errc::bad_param, "epsilon must lie in (0, 1)");
  MatrixXd m(2, 2);
  // second vector (sqrt(1 - eps), sqrt eps), so <phi_1, phi_2> = sqrt eps
  m << 0.0, std::sqrt(1.0 - eps),
       1.0, std::sqrt(eps);
  return Frame<double>(std::move(m));
}

template <FieldScalar Scalar>
Frame<Scalar> random_unit(Index n, Index m, std::uint64_t seed) {
  require_dim(n);
  if (m < 1) throw error(errc::bad_param, "random frames need m >= 1");
  SplitMix64 rng(seed);
  Matrix<Scalar> out(n, m);
  for (Index i = 0; i < m; ++i) out.col(i) = rng.unit_vector<Scalar>(n);
  return Frame<Scalar>(std::move(out));
}

namespace {

constexpr std::array<std::pair<ConstructionKind, std::string_view>, 7> kKindNames{{
    {ConstructionKind::orthonormal, "orthonormal"},
    {ConstructionKind::eij, "eij"},
    {ConstructionKind::complex_eij, "complex-eij"},
    {ConstructionKind::simplex, "simplex"},
    {ConstructionKind::biangular, "biangular"},
    {ConstructionKind::epsilon_pair, "epsilon-pair"},
    {ConstructionKind::random_unit, "random-unit"},
}};

}  // namespace

std::string_view to_string(ConstructionKind k) {
  for (const auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  return "unknown";
}

std::optional<ConstructionKind> parse_construction_kind(std::string_view name) {
  for (const auto& [kind, n] : kKindNames)
    if (n == name) return kind;
  return std::nullopt;
}

AnyFrame build(const ConstructionSpec& spec) {
  const bool complex = spec.field == Field::complex;
  switch (spec.kind) {
    case ConstructionKind::orthonormal:
      if (complex) return orthonormal<cdouble>(spec.n);
      return orthonormal<double>(spec.n);
    case ConstructionKind::eij: return eij_basis(spec.n);
    case ConstructionKind::complex_eij: return complex_eij_basis(spec.n);
    case ConstructionKind::simplex: return simplex(spec.n);
    case ConstructionKind::biangular: return biangular(spec.n);
    case ConstructionKind::epsilon_pair: return epsilon_pair(spec.eps);
    case ConstructionKind::random_unit:
      if (complex) return random_unit<cdouble>(spec.n, spec.m, spec.seed);
      return random_unit<double>(spec.n, spec.m, spec.seed);
  }
  throw error(errc::bad_param, "unknown construction");
}

template Frame<double> orthonormal<double>(Index);
template Frame<cdouble> orthonormal<cdouble>(Index);
template Frame<double> random_unit<double>(Index, Index, std::uint64_t);
template Frame<cdouble> random_unit<cdouble>(Index, Index, std::uint64_t);

}  // namespace framekit
