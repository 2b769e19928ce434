#pragma once

#include <stdexcept>
#include <string>

namespace fracguide {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The operator has no complete eigenbasis, so it cannot be fractionalized.
class DefectiveOperator : public Error {
 public:
  using Error::Error;
};

class ZeroWavevector : public Error {
 public:
  using Error::Error;
};

/// Requested mode is at or beyond cutoff (h >= k).
class EvanescentMode : public Error {
 public:
  using Error::Error;
};

/// Input outside the domain of an operation (point outside the guide, NaN, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Invalid run configuration. `parameter` names the offending flag.
class ConfigError : public Error {
 public:
  ConfigError(std::string parameter, const std::string& what)
      : Error(parameter + ": " + what), parameter_(std::move(parameter)) {}

  const std::string& parameter() const noexcept { return parameter_; }

 private:
  std::string parameter_;
};

}  // namespace fracguide
