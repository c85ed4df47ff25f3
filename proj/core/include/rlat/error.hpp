#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rlat {

  enum class ErrorKind {
    NotAPartialOrder,
    NotALattice,
    NotAssociative,
    UnitNotIdentity,
    ResiduationFails,
    NoMaximum,
    InconsistentTables,
    UnboundVariable,
    MissingConstantF,
    VariableCapExceeded,
    NotECyclic,
    DistributivityViolation,
    EmptySet,
    NotPrime,
    NotNormal,
    OracleSizeGuard,
    NotIntegral,
    NotGBL,
    ParameterMismatch,
    UnknownName,
    SizeGuard,
    SyntaxError,
    UnknownLabel,
    DuplicateBlock,
    CarrierTooLarge,
    // An internal cross-check between two independent computations
    // disagreed. Always a bug in this library.
    CheckFailed
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message),
          _kind(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

  [[noreturn]] inline void fail(ErrorKind kind, std::string const& message) {
    throw Error(kind, message);
  }

  inline void check(bool condition, std::string const& message) {
    if (!condition) {
      throw Error(ErrorKind::CheckFailed, message);
    }
  }

}  // namespace rlat
