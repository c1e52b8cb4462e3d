#pragma once

#include <stdexcept>
#include <string>

namespace qtorus {

/// Raised when a parameter bundle violates its documented window
/// (gcd(s,t) != 1, label outside 0<n<s, N < 1, precision < 53, ...).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact Laurent division left a nonzero remainder.
class NonExactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two independent numeric routes disagreed beyond the working tolerance.
class PrecisionFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity check (e.g. the two forms of the singlet character) failed
/// where it is required to hold exactly.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The requested comparison order exceeds what color N certifies for a
/// large-N limit; `needed_N` is the smallest color that does certify it.
class StabilizationTooLow : public std::runtime_error {
 public:
  StabilizationTooLow(const std::string& what, long needed_N)
      : std::runtime_error(what), needed_N_(needed_N) {}
  long needed_N() const noexcept { return needed_N_; }

 private:
  long needed_N_;
};

}  // namespace qtorus
