#pragma once

#include <stdexcept>
#include <string>

namespace hns4 {

/// Binary operation on numbers from two different systems.
class SystemMismatchError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A coefficient is NaN or infinite.
class NonFiniteError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Division by zero or by a zero divisor. Carries the divisor's pseudonorm.
class ZeroDivisorError : public std::domain_error {
public:
  ZeroDivisorError(const std::string &what, double pseudonorm)
      : std::domain_error(what), pseudonorm_(pseudonorm) {}

  double pseudonorm() const { return pseudonorm_; }

private:
  double pseudonorm_;
};

} // namespace hns4
