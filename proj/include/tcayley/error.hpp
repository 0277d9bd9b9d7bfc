#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tcayley {

enum class ErrorCode {
  BadLabel,
  DuplicateEdge,
  CycleDetected,
  Disconnected,
  NotALeaf,
  NotAStar,
  SizeMismatch,
  NoAdmissibleEdge,
  OutOfRange,
  TooLarge,
  Parse,
  Io,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; `code()` tells callers which
// precondition failed. TooLarge is the only "infeasible scale" code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tcayley
