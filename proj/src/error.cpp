#include "waringlab/error.hpp"

namespace waringlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::NonInvertible: return "NonInvertible";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::RefuseExhaustive: return "RefuseExhaustive";
    case ErrorKind::RefuseQuadratic: return "RefuseQuadratic";
    case ErrorKind::CountOverflow: return "CountOverflow";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace waringlab
