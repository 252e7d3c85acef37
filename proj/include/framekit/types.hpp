#pragma once

#include <complex>
#include <concepts>
#include <string_view>

#include <Eigen/Dense>

namespace framekit {

using cdouble = std::complex<double>;

/// The two ground fields a frame may live over.
template <class T>
concept FieldScalar = std::same_as<T, double> || std::same_as<T, cdouble>;

template <FieldScalar Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <FieldScalar Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

enum class Field { real, complex };

template <FieldScalar Scalar>
inline constexpr Field field_of = std::same_as<Scalar, double> ? Field::real : Field::complex;

constexpr std::string_view to_string(Field f) { return f == Field::real ? "real" : "complex"; }

/// Real dimension of the space of self-adjoint n×n matrices over `f`.
constexpr Index self_adjoint_dim(Field f, Index n) { return f == Field::real ? n * (n + 1) / 2 : n * n; }

// Shared thresholds. Each names the single place a decision is gated.
inline constexpr double kSelfAdjointTol = 1e-12;  // relative to ||S||_F
inline constexpr double kUnitNormTol = 1e-12;
inline constexpr double kTightTol = 1e-10;        // relative to the upper bound
inline constexpr double kEquiangularTol = 1e-10;
inline constexpr double kDependenceTol = 1e-8;    // on |f - 1|
inline constexpr double kPsdTol = 1e-10;          // relative to lambda_max

}  // namespace framekit
