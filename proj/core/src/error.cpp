#include "egocount/error.hpp"

namespace egocount {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kModeMismatch: return "ModeMismatch";
    case ErrorCode::kInvalidPattern: return "InvalidPattern";
    case ErrorCode::kPatternTooLarge: return "PatternTooLarge";
    case ErrorCode::kEmptyObservableSet: return "EmptyObservableSet";
    case ErrorCode::kCompositionRowSumMismatch: return "CompositionRowSumMismatch";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kUnlabeledSample: return "UnlabeledSample";
    case ErrorCode::kUnsupportedDesign: return "UnsupportedDesign";
    case ErrorCode::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kUndefinedMetric: return "UndefinedMetric";
  }
  return "Unknown";
}

}  // namespace egocount
