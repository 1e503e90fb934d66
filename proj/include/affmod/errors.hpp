#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace affmod {

/// Two operands live in different polynomial rings.
class RingMismatch : public std::invalid_argument {
 public:
  RingMismatch() : std::invalid_argument("operands belong to different polynomial rings") {}
};

class UnknownVariable : public std::invalid_argument {
 public:
  explicit UnknownVariable(const std::string& name)
      : std::invalid_argument("unknown variable '" + name + "'"), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// Syntax error in an expression; carries the 0-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised in positive characteristic when p / gcd(p, p') fails to be the radical,
/// i.e. some factor has multiplicity divisible by the characteristic.
class UnreliableCharacteristic : public std::domain_error {
 public:
  explicit UnreliableCharacteristic(const std::string& what) : std::domain_error(what) {}
};

/// Input outside the linear-in-one-variable class handled by linear_decompose.
class DecompositionError : public std::invalid_argument {
 public:
  explicit DecompositionError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace affmod
