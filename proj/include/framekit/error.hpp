#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace framekit {

enum class errc {
  not_self_adjoint,
  shape_mismatch,
  not_a_frame,
  not_independent,
  not_unit_norm,
  zero_vector,
  dimension_mismatch,
  not_a_basis,
  bad_param,
  not_psd,
  bad_coefficients,
  too_many,
  rank_deficient,
  budget_too_large,
  singular_operator,
  internal_inconsistency,
};

constexpr std::string_view to_string(errc e) {
  switch (e) {
    case errc::not_self_adjoint: return "NotSelfAdjoint";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::not_a_frame: return "NotAFrame";
    case errc::not_independent: return "NotIndependent";
    case errc::not_unit_norm: return "NotUnitNorm";
    case errc::zero_vector: return "ZeroVector";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::not_a_basis: return "NotABasis";
    case errc::bad_param: return "BadParam";
    case errc::not_psd: return "NotPsd";
    case errc::bad_coefficients: return "BadCoefficients";
    case errc::too_many: return "TooMany";
    case errc::rank_deficient: return "RankDeficient";
    case errc::budget_too_large: return "BudgetTooLarge";
    case errc::singular_operator: return "SingularOperator";
    case errc::internal_inconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace framekit
