#pragma once

#include <stdexcept>
#include <string>

namespace dabru {

// Bad configuration (unknown ground label, malformed datum).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};

// Caller violated a documented precondition.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& m) : std::runtime_error(m) {}
};

// Input outside the mathematical domain of the operation.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};

// Malformed textual input (element/root grammar).
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

// An invariant the library itself guarantees was violated.
struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& m) : std::runtime_error(m) {}
};

}  // namespace dabru
