#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "framekit/frame.hpp"

namespace framekit {

using AnyFrame = std::variant<Frame<double>, Frame<cdouble>>;

template <FieldScalar Scalar>
Frame<Scalar> orthonormal(Index n);

/// e_i (i = 1..n) followed by (e_i + e_j)/sqrt2 for i < j, lexicographic.
Frame<double> eij_basis(Index n);

/// eij_basis(n) followed by (e_i + i e_j)/sqrt2 for i < j. n² vectors.
Frame<cdouble> complex_eij_basis(Index n);

/// n+1 unit vectors in R^n with pairwise inner products -1/n.
Frame<double> simplex(Index n);

/// Normalised pairwise sums of simplex(n) vectors, (i, j) lexicographic, i < j.
/// Throws errc::bad_param for n < 2.
Frame<double> biangular(Index n);

/// {(0, 1), (sqrt(1 - eps), sqrt eps)}: Gram [[1, sqrt eps], [sqrt eps, 1]]. Throws errc::bad_param unless 0 < eps < 1.
Frame<double> epsilon_pair(double eps);

/// m i.i.d. vectors uniform on the unit sphere of the n-dimensional space.
template <FieldScalar Scalar>
Frame<Scalar> random_unit(Index n, Index m, std::uint64_t seed);

enum class ConstructionKind { orthonormal, eij, complex_eij, simplex, biangular, epsilon_pair, random_unit };

std::string_view to_string(ConstructionKind k);
std::optional<ConstructionKind> parse_construction_kind(std::string_view name);

struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::orthonormal;
  Index n = 1;
  Field field = Field::real;  // honoured by orthonormal and random_unit
  double eps = 0.0;
  Index m = 1;
  std::uint64_t seed = 0;
};

/// Throws errc::bad_param on invalid parameters.
AnyFrame build(const ConstructionSpec& spec);

}  // namespace framekit
