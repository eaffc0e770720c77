#include "rainbow/error.hpp"

namespace rainbow {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PathNotInGraph: return "PathNotInGraph";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::ImproperColoring: return "ImproperColoring";
    case ErrorCode::NotSubsetRainbowConnected: return "NotSubsetRainbowConnected";
    case ErrorCode::NotAStar: return "NotAStar";
    case ErrorCode::PairNotLeafPair: return "PairNotLeafPair";
    case ErrorCode::TooFewColors: return "TooFewColors";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::MissingLayerTags: return "MissingLayerTags";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(ErrorCode::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

DisconnectedError::DisconnectedError(std::size_t u, std::size_t v)
    : Error(ErrorCode::Disconnected,
            "no path between " + std::to_string(u) + " and " + std::to_string(v)),
      u_(u),
      v_(v) {}

}  // namespace rainbow
