#pragma once

#include <stdexcept>
#include <string>

namespace parabolica {

/// Malformed or inadmissible input (bad type, node out of range, non-dominant weight...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact identity that must hold did not. Carries the name of the failed check.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(std::string check, const std::string& detail)
      : std::runtime_error(check + ": " + detail), check_(std::move(check)) {}
  const std::string& check() const { return check_; }

 private:
  std::string check_;
};

/// Requested module exceeds the configured dimension cap.
class SizeCapError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace parabolica
