#pragma once

#include <stdexcept>
#include <string>

namespace tfc8 {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid user-supplied configuration (degenerate domain, too few points, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A caller broke a documented precondition.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A least-squares or constraint system could not be solved.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// A residual or partial produced a non-finite value.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

}  // namespace tfc8
