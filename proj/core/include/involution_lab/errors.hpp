#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace involution_lab {

/// Caller supplied a value outside an operation's domain.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A brute-force enumeration would exceed its configured cap.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::string predicted_count)
      : std::runtime_error(what), predicted_count_(std::move(predicted_count)) {}

  /// Decimal string of the predicted output size that tripped the cap.
  const std::string& predicted_count() const noexcept { return predicted_count_; }

 private:
  std::string predicted_count_;
};

/// An identity that must hold by construction did not; indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Period detection could not reach a conclusion within its window.
class InconclusiveError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace involution_lab
