#include "tcayley/error.hpp"

namespace tcayley {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadLabel: return "BadLabel";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotALeaf: return "NotALeaf";
    case ErrorCode::NotAStar: return "NotAStar";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::NoAdmissibleEdge: return "NoAdmissibleEdge";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace tcayley
