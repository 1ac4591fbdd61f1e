#pragma once

#include <stdexcept>
#include <string>

namespace skewpbw {

enum class errc {
  bad_shape,
  non_associative,
  bad_identity,
  ring_mismatch,
  too_large,
  not_additive_well_defined,
  not_multiplicative,
  does_not_fix_one,
  leibniz_fails,
  delta_one_nonzero,
  zero_d,
  non_injective_sigma,
  shape_mismatch,
  unverified,
  overlap_fails,
  budget_exceeded,
  not_proved_nilpotent,
  not_an_ideal,
  inhomogeneous_constant,
  identity_not_degree_zero,
  not_bijective,
  not_graded,
  wrong_shape,
  parse_error,
  param_range,
};

inline char const* to_string(errc code) {
  switch (code) {
    case errc::bad_shape: return "BadShape";
    case errc::non_associative: return "NonAssociative";
    case errc::bad_identity: return "BadIdentity";
    case errc::ring_mismatch: return "RingMismatch";
    case errc::too_large: return "TooLarge";
    case errc::not_additive_well_defined: return "NotAdditiveWellDefined";
    case errc::not_multiplicative: return "NotMultiplicative";
    case errc::does_not_fix_one: return "DoesNotFixOne";
    case errc::leibniz_fails: return "LeibnizFails";
    case errc::delta_one_nonzero: return "DeltaOneNonzero";
    case errc::zero_d: return "ZeroD";
    case errc::non_injective_sigma: return "NonInjectiveSigma";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::unverified: return "Unverified";
    case errc::overlap_fails: return "OverlapFails";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::not_proved_nilpotent: return "NotProvedNilpotent";
    case errc::not_an_ideal: return "NotAnIdeal";
    case errc::inhomogeneous_constant: return "InhomogeneousConstant";
    case errc::identity_not_degree_zero: return "IdentityNotDegreeZero";
    case errc::not_bijective: return "NotBijective";
    case errc::not_graded: return "NotGraded";
    case errc::wrong_shape: return "WrongShape";
    case errc::parse_error: return "ParseError";
    case errc::param_range: return "ParamRange";
  }
  return "Unknown";
}

/// Every failure raised by the library. `code()` names the failing contract,
/// `what()` carries the offending indices or elements.
class error : public std::runtime_error {
 public:
  error(errc code, std::string const& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace skewpbw
