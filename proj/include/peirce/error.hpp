// peirce - finite workbench for rings with enough idempotents and
// category graded rings.
//
// All library failures are reported through peirce::Error, which carries a
// machine readable ErrorKind next to the human readable message.  The kind
// names are part of the CLI contract (they appear verbatim in reports).

#ifndef PEIRCE_ERROR_HPP_
#define PEIRCE_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace peirce {

  enum class ErrorKind {
    // finring
    ModulusTooSmall,
    ShapeMismatch,
    ParameterOutOfRange,
    NotAssociative,
    RingMismatch,
    ModulusMismatch,
    LatticeTooLarge,
    NotIdempotent,
    MixedTorsion,
    // idempotents
    ZeroIdempotent,
    NotOrthogonal,
    NotComplete,
    NotStrong,
    ZeroComponent,
    // smallcat
    CompositionDomainMismatch,
    CompositionMissing,
    IdentityLawViolation,
    NotAMonoid,
    NotAGroup,
    // graded
    NotDirectSum,
    GradingViolation,
    NotObjectUnital,
    CategoryNotHomSetStrong,
    // skewalg
    NotUnital,
    NotRingIso,
    NotFunctorial,
    IdentityNotIdentity,
    // corpus
    UnknownSuite,
    CannotTarget,
    // cli
    ParseError,
    // a library post-condition failed; always a bug
    InvariantViolation
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& detail);

    ErrorKind kind() const noexcept {
      return _kind;
    }

    // The message without the "Kind: " prefix.
    std::string const& detail() const noexcept {
      return _detail;
    }

   private:
    ErrorKind   _kind;
    std::string _detail;
  };

}  // namespace peirce

#endif  // PEIRCE_ERROR_HPP_
