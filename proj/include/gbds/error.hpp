#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gbds {

  //! Every failure raised by the library carries one of these kinds so that
  //! callers (and tests) can branch on the reason without parsing messages.
  enum class ErrorKind {
    ClosureViolation,
    MissingEmptySet,
    NotAMember,
    ForeignIdeal,
    MixedAlgebras,
    IdealTooSmall,
    JNotRegular,
    BadMorphism,
    UnknownLetter,
    MixedSystems,
    NotIdempotent,
    ZeroUngraded,
    NotInDomain,
    NotInIdeal,
    RelativeSystemUnsupported,
    NotEquivalent,
    BoundTooSmall,
    ValidationFailure,
    ParseError,
    UnknownLabel,
    Overflow,
  };

  constexpr std::string_view to_string(ErrorKind k) noexcept {
    switch (k) {
      case ErrorKind::ClosureViolation: return "ClosureViolation";
      case ErrorKind::MissingEmptySet: return "MissingEmptySet";
      case ErrorKind::NotAMember: return "NotAMember";
      case ErrorKind::ForeignIdeal: return "ForeignIdeal";
      case ErrorKind::MixedAlgebras: return "MixedAlgebras";
      case ErrorKind::IdealTooSmall: return "IdealTooSmall";
      case ErrorKind::JNotRegular: return "JNotRegular";
      case ErrorKind::BadMorphism: return "BadMorphism";
      case ErrorKind::UnknownLetter: return "UnknownLetter";
      case ErrorKind::MixedSystems: return "MixedSystems";
      case ErrorKind::NotIdempotent: return "NotIdempotent";
      case ErrorKind::ZeroUngraded: return "ZeroUngraded";
      case ErrorKind::NotInDomain: return "NotInDomain";
      case ErrorKind::NotInIdeal: return "NotInIdeal";
      case ErrorKind::RelativeSystemUnsupported: return "RelativeSystemUnsupported";
      case ErrorKind::NotEquivalent: return "NotEquivalent";
      case ErrorKind::BoundTooSmall: return "BoundTooSmall";
      case ErrorKind::ValidationFailure: return "ValidationFailure";
      case ErrorKind::ParseError: return "ParseError";
      case ErrorKind::UnknownLabel: return "UnknownLabel";
      case ErrorKind::Overflow: return "Overflow";
    }
    return "Unknown";
  }

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& detail)
        : std::runtime_error(std::string(to_string(kind)) + "(" + detail + ")"),
          _kind(kind),
          _detail(detail) {}

    ErrorKind kind() const noexcept {
      return _kind;
    }

    std::string const& detail() const noexcept {
      return _detail;
    }

   private:
    ErrorKind   _kind;
    std::string _detail;
  };

}  // namespace gbds
