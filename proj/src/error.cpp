#include "peirce/error.hpp"

namespace peirce {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::ModulusTooSmall: return "ModulusTooSmall";
      case ErrorKind::ShapeMismatch: return "ShapeMismatch";
      case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
      case ErrorKind::NotAssociative: return "NotAssociative";
      case ErrorKind::RingMismatch: return "RingMismatch";
      case ErrorKind::ModulusMismatch: return "ModulusMismatch";
      case ErrorKind::LatticeTooLarge: return "LatticeTooLarge";
      case ErrorKind::NotIdempotent: return "NotIdempotent";
      case ErrorKind::MixedTorsion: return "MixedTorsion";
      case ErrorKind::ZeroIdempotent: return "ZeroIdempotent";
      case ErrorKind::NotOrthogonal: return "NotOrthogonal";
      case ErrorKind::NotComplete: return "NotComplete";
      case ErrorKind::NotStrong: return "NotStrong";
      case ErrorKind::ZeroComponent: return "ZeroComponent";
      case ErrorKind::CompositionDomainMismatch:
        return "CompositionDomainMismatch";
      case ErrorKind::CompositionMissing: return "CompositionMissing";
      case ErrorKind::IdentityLawViolation: return "IdentityLawViolation";
      case ErrorKind::NotAMonoid: return "NotAMonoid";
      case ErrorKind::NotAGroup: return "NotAGroup";
      case ErrorKind::NotDirectSum: return "NotDirectSum";
      case ErrorKind::GradingViolation: return "GradingViolation";
      case ErrorKind::NotObjectUnital: return "NotObjectUnital";
      case ErrorKind::CategoryNotHomSetStrong: return "CategoryNotHomSetStrong";
      case ErrorKind::NotUnital: return "NotUnital";
      case ErrorKind::NotRingIso: return "NotRingIso";
      case ErrorKind::NotFunctorial: return "NotFunctorial";
      case ErrorKind::IdentityNotIdentity: return "IdentityNotIdentity";
      case ErrorKind::UnknownSuite: return "UnknownSuite";
      case ErrorKind::CannotTarget: return "CannotTarget";
      case ErrorKind::ParseError: return "ParseError";
      case ErrorKind::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
  }

  Error::Error(ErrorKind kind, std::string const& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        _kind(kind),
        _detail(detail) {}

}  // namespace peirce
