#pragma once

#include <optional>
#include <span>
#include <vector>

#include "framekit/matcore.hpp"

namespace framekit {

/// An ordered list of M vectors in an N-dimensional space, stored as the
/// columns of an N×M matrix (which is also its synthesis operator).
template <FieldScalar Scalar>
class Frame {
 public:
  using scalar_type = Scalar;
  static constexpr Field field = field_of<Scalar>;

  explicit Frame(Matrix<Scalar> columns) : columns_(std::move(columns)) {
    if (columns_.rows() < 1 || columns_.cols() < 1)
      throw error(errc::bad_param, "a frame needs N >= 1 and M >= 1");
  }

  static Frame from_vectors(std::span<const Vector<Scalar>> vectors) {
    if (vectors.empty()) throw error(errc::bad_param, "a frame needs at least one vector");
    Matrix<Scalar> m(vectors.front().size(), static_cast<Index>(vectors.size()));
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].size() != m.rows())
        throw error(errc::dimension_mismatch, "frame vectors differ in length");
      m.col(static_cast<Index>(i)) = vectors[i];
    }
    return Frame(std::move(m));
  }

  Index dim() const { return columns_.rows(); }
  Index size() const { return columns_.cols(); }
  Vector<Scalar> vector(Index i) const { return columns_.col(i); }
  const Matrix<Scalar>& matrix() const { return columns_; }

  bool is_unit_norm(double tol = kUnitNormTol) const {
    for (Index i = 0; i < size(); ++i)
      if (std::abs(columns_.col(i).norm() - 1.0) > tol) return false;
    return true;
  }

  Frame appended(const Vector<Scalar>& v) const {
    if (v.size() != dim()) throw error(errc::dimension_mismatch, "appended vector has wrong length");
    Matrix<Scalar> m(dim(), size() + 1);
    m << columns_, v;
    return Frame(std::move(m));
  }

  Frame subset(std::span<const Index> indices) const {
    Matrix<Scalar> m(dim(), static_cast<Index>(indices.size()));
    for (std::size_t k = 0; k < indices.size(); ++k) m.col(static_cast<Index>(k)) = columns_.col(indices[k]);
    return Frame(std::move(m));
  }

  friend bool operator==(const Frame& a, const Frame& b) { return a.columns_ == b.columns_; }

 private:
  Matrix<Scalar> columns_;
};

enum class BoundKind { frame, riesz };

struct BoundsReport {
  double lower = 0.0;
  double upper = 0.0;
  BoundKind kind = BoundKind::frame;
  bool tight = false;
  bool parseval = false;
};

BoundsReport make_bounds(double lower, double upper, BoundKind kind);

/// N×M matrix whose i-th column is phi_i.
template <FieldScalar Scalar>
Matrix<Scalar> synthesis(const Frame<Scalar>& f) { return f.matrix(); }

/// M×N; (analysis(f) psi)_i = <psi, phi_i>.
template <FieldScalar Scalar>
Matrix<Scalar> analysis(const Frame<Scalar>& f) { return f.matrix().adjoint(); }

/// S = T T*.
template <FieldScalar Scalar>
Matrix<Scalar> frame_operator(const Frame<Scalar>& f) { return f.matrix() * f.matrix().adjoint(); }

/// G = T* T, so G(i, j) = <phi_j, phi_i>.
template <FieldScalar Scalar>
Matrix<Scalar> gram(const Frame<Scalar>& f) { return f.matrix().adjoint() * f.matrix(); }

/// Optimal frame bounds: extreme eigenvalues of the frame operator.
/// Throws errc::not_a_frame when the vectors do not span.
template <FieldScalar Scalar>
BoundsReport frame_bounds(const Frame<Scalar>& f);

/// Optimal Riesz bounds: extreme eigenvalues of the Gram matrix.
/// Throws errc::not_independent.
template <FieldScalar Scalar>
BoundsReport riesz_bounds(const Frame<Scalar>& f);

/// sum_ij |<phi_i, phi_j>|^2
template <FieldScalar Scalar>
double frame_potential(const Frame<Scalar>& f);

/// sum_i <psi, S^{-1} phi_i> phi_i, with S^{-1} from the eigendecomposition.
template <FieldScalar Scalar>
Vector<Scalar> reconstruct(const Frame<Scalar>& f, const Vector<Scalar>& psi);

/// The common value c = |<phi_i, phi_j>|^2 (i != j) when all agree within
/// 1e-10; empty otherwise, or for a single vector. Throws errc::not_unit_norm.
template <FieldScalar Scalar>
std::optional<double> is_equiangular(const Frame<Scalar>& f);

}  // namespace framekit
