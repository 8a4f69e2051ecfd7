#include "treetropy/error.hpp"

namespace treetropy {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::EmptyComponent: return "EmptyComponent";
    case ErrorKind::SingletonComponent: return "SingletonComponent";
    case ErrorKind::OverlapTooLarge: return "OverlapTooLarge";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::Cyclic: return "Cyclic";
    case ErrorKind::NonMaximal: return "NonMaximal";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::NotAdjacent: return "NotAdjacent";
    case ErrorKind::CollapseInvalid: return "CollapseInvalid";
    case ErrorKind::PolicyMismatch: return "PolicyMismatch";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::BadRange: return "BadRange";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::PivotNotFound: return "PivotNotFound";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace treetropy
