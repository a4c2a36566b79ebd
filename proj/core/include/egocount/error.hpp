#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace egocount {

enum class ErrorCode {
  kParse,
  kIo,
  kInvalidArgument,
  kModeMismatch,
  kInvalidPattern,
  kPatternTooLarge,
  kEmptyObservableSet,
  kCompositionRowSumMismatch,
  kDimensionMismatch,
  kUnlabeledSample,
  kUnsupportedDesign,
  kDisconnectedGraph,
  kBudgetExceeded,
  kUndefinedMetric,
};

/// Stable identifier used in machine-readable error payloads.
std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace egocount
