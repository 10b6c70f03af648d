#pragma once

#include <stdexcept>
#include <string>

namespace bgg {

// Bad structural input: unknown series, rank out of range, incompatible
// real form, size guard exceeded.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Value outside an operation's domain (non-root vector, non-dominant
// weight, mismatched degrees, ...).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A broken internal invariant; never expected on valid input.
struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed command line (exit code 2).
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

inline void check_internal(bool ok, const std::string& msg) {
  if (!ok) throw InternalError(msg);
}

}  // namespace bgg
