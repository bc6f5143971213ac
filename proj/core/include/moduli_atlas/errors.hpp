#pragma once

#include <stdexcept>
#include <string>

namespace moduli_atlas {

/// Input outside the domain of an operation (odd H^2, rank != 2, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A 64-bit intermediate would have wrapped.
class OverflowError : public std::overflow_error {
 public:
  OverflowError() : std::overflow_error("integer overflow in lattice arithmetic") {}
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace moduli_atlas
