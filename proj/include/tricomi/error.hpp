#pragma once

#include <stdexcept>
#include <string>

namespace tricomi {

/// Failure categories. The numeric values are shared with the C API
/// (`tricomi_status` in tricomi.h) and must stay in sync with it.
enum class ErrorCode : int {
  kOk = 0,
  kDomain = 1,       // argument outside the operation's domain
  kPole = 2,         // gamma-function pole
  kConvergence = 3,  // series / panel / lattice truncation did not converge
  kValidation = 4,   // problem data violates a solvability hypothesis
  kIo = 5,
  kConfig = 6,
  kInternal = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::kDomain, what) {}
};

class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error(ErrorCode::kPole, what) {}
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what)
      : Error(ErrorCode::kConvergence, what) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorCode::kValidation, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorCode::kIo, what) {}
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(ErrorCode::kConfig, what) {}
};

}  // namespace tricomi
