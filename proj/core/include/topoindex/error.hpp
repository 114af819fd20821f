#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace topoindex {

enum class ErrorCode {
  SelfLoop,
  DuplicateEdge,
  VertexOutOfRange,
  Disconnected,
  SizeTooSmall,
  InvalidR,
  Overflow,
  DomainError,
  TooLarge,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure surfaced by the library. The code identifies the contract
/// that was broken; what() carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// ParseError that remembers the 1-based line it was raised on (0 if unknown).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::ParseError,
              line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace topoindex
