#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dlambert {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside the domain an operation is defined on (zero modulus, gcd(0, 0)).
class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// Rejected problem parameters: not an odd prime, p | g, out-of-range key...
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  NotInvertible(std::uint64_t value, std::uint64_t modulus, std::uint64_t gcd)
      : Error(std::to_string(value) + " is not invertible modulo " +
              std::to_string(modulus) + " (gcd " + std::to_string(gcd) + ")"),
        gcd_(gcd) {}

  std::uint64_t gcd() const { return gcd_; }

 private:
  std::uint64_t gcd_;
};

/// Argument outside the convergence domain of a p-adic series.
class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Something that cannot happen did. Indicates a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace dlambert
