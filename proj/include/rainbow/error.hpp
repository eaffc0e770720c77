#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rainbow {

enum class ErrorCode {
  IndexOutOfRange,
  SelfLoop,
  Disconnected,
  ParseError,
  PathNotInGraph,
  BudgetExceeded,
  EmptyGraph,
  ImproperColoring,
  NotSubsetRainbowConnected,
  NotAStar,
  PairNotLeafPair,
  TooFewColors,
  InvalidOrder,
  MissingLayerTags,
  DomainMismatch,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Base of every error thrown by the library. The code is stable and is what
// tests and the CLI dispatch on; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Raised when a pair that must be joined by a path is not; carries the pair.
class DisconnectedError : public Error {
 public:
  DisconnectedError(std::size_t u, std::size_t v);

  std::size_t first() const noexcept { return u_; }
  std::size_t second() const noexcept { return v_; }

 private:
  std::size_t u_;
  std::size_t v_;
};

}  // namespace rainbow
