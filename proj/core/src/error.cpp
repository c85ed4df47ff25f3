#include "rlat/error.hpp"

namespace rlat {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
      case ErrorKind::NotALattice: return "NotALattice";
      case ErrorKind::NotAssociative: return "NotAssociative";
      case ErrorKind::UnitNotIdentity: return "UnitNotIdentity";
      case ErrorKind::ResiduationFails: return "ResiduationFails";
      case ErrorKind::NoMaximum: return "NoMaximum";
      case ErrorKind::InconsistentTables: return "InconsistentTables";
      case ErrorKind::UnboundVariable: return "UnboundVariable";
      case ErrorKind::MissingConstantF: return "MissingConstantF";
      case ErrorKind::VariableCapExceeded: return "VariableCapExceeded";
      case ErrorKind::NotECyclic: return "NotECyclic";
      case ErrorKind::DistributivityViolation:
        return "DistributivityViolation";
      case ErrorKind::EmptySet: return "EmptySet";
      case ErrorKind::NotPrime: return "NotPrime";
      case ErrorKind::NotNormal: return "NotNormal";
      case ErrorKind::OracleSizeGuard: return "OracleSizeGuard";
      case ErrorKind::NotIntegral: return "NotIntegral";
      case ErrorKind::NotGBL: return "NotGBL";
      case ErrorKind::ParameterMismatch: return "ParameterMismatch";
      case ErrorKind::UnknownName: return "UnknownName";
      case ErrorKind::SizeGuard: return "SizeGuard";
      case ErrorKind::SyntaxError: return "SyntaxError";
      case ErrorKind::UnknownLabel: return "UnknownLabel";
      case ErrorKind::DuplicateBlock: return "DuplicateBlock";
      case ErrorKind::CarrierTooLarge: return "CarrierTooLarge";
      case ErrorKind::CheckFailed: return "CheckFailed";
    }
    return "Unknown";
  }

}  // namespace rlat
