#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "framekit/frame.hpp"
#include "framekit/random.hpp"

namespace framekit::verify {

inline Index pick(SplitMix64& rng, Index lo, Index hi) {
  return lo + static_cast<Index>(rng.next() % static_cast<std::uint64_t>(hi - lo + 1));
}

template <FieldScalar Scalar>
Frame<Scalar> random_frame(SplitMix64& rng, Index n, Index m) {
  Matrix<Scalar> cols(n, m);
  for (Index i = 0; i < m; ++i) cols.col(i) = rng.unit_vector<Scalar>(n);
  return Frame<Scalar>(std::move(cols));
}

template <FieldScalar Scalar>
Matrix<Scalar> gaussian_matrix(SplitMix64& rng, Index rows, Index cols) {
  Matrix<Scalar> m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = rng.normal_scalar<Scalar>();
  return m;
}

/// Unit vector orthogonal to the unit vector phi (n >= 2).
template <FieldScalar Scalar>
Vector<Scalar> orthogonal_unit(SplitMix64& rng, const Vector<Scalar>& phi) {
  Vector<Scalar> u;
  do {
    u = rng.unit_vector<Scalar>(phi.size());
    u -= phi * phi.dot(u);
  } while (u.norm() < 1e-3);
  return u.normalized();
}

/// cos(theta) phi + sin(theta) u for u a unit vector orthogonal to phi, so
/// ||result - phi||^2 = 2 - 2 cos(theta) exactly in exact arithmetic.
template <FieldScalar Scalar>
Vector<Scalar> tilt(SplitMix64& rng, const Vector<Scalar>& phi, double squared_distance) {
  const double c = 1.0 - squared_distance / 2.0;
  const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
  return c * phi + s * orthogonal_unit(rng, phi);
}

inline VectorXd ascending(VectorXd v) {
  std::sort(v.data(), v.data() + v.size());
  return v;
}

inline double max_abs_diff(const VectorXd& a, const VectorXd& b) {
  return a.size() == b.size() ? (a - b).cwiseAbs().maxCoeff() : std::numeric_limits<double>::infinity();
}

/// Calls f(double{}) then f(cdouble{}).
template <class F>
void for_both_fields(F&& f) {
  f(double{});
  f(cdouble{});
}

}  // namespace framekit::verify
