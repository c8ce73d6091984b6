#pragma once

#include <stdexcept>
#include <string>

namespace lrb {

// Base for everything this library throws. `code` is a stable,
// machine-readable tag (e.g. "NotAssociative"); `what()` is for humans.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Malformed or inconsistent input (CLI exit code 2).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A configurable cap or budget was exceeded (CLI exit code 3).
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Unreachable on valid inputs.
class VerificationFailed : public Error {
 public:
  explicit VerificationFailed(const std::string& message)
      : Error("VerificationFailed", message) {}
};

}  // namespace lrb
