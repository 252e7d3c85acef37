#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "framekit/types.hpp"

namespace framekit {

// SplitMix64 stream. Uniforms use the top 53 bits shifted half a step off
// zero, normals take two uniforms each (Box-Muller, cosine branch only), so a
// seed yields the same sequence on any platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // in (0, 1)
  double uniform() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  template <FieldScalar Scalar>
  Scalar normal_scalar() {
    if constexpr (std::same_as<Scalar, double>) {
      return normal();
    } else {
      const double re = normal();
      const double im = normal();
      return {re, im};
    }
  }

  template <FieldScalar Scalar>
  Vector<Scalar> unit_vector(Index n) {
    Vector<Scalar> v(n);
    do {
      for (Index k = 0; k < n; ++k) v(k) = normal_scalar<Scalar>();
    } while (v.norm() == 0.0);
    return v / v.norm();
  }

 private:
  std::uint64_t state_;
};

}  // namespace framekit
