#pragma once

#include <stdexcept>
#include <string>

namespace ibd {

// Error taxonomy mirrors the CLI exit-code contract:
//   ConfigError -> 2, FormatError -> 3, NumericError -> 4.

/// Invalid configuration or argument validation failure.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed or truncated input file (model container, trace, labels, ...).
class FormatError : public std::runtime_error {
public:
  explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Runtime numeric failure (empty support, length mismatch, ...).
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ibd
