#pragma once

#include <stdexcept>

namespace supertrop {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Power with exponent <= 0 of a non-invertible scalar.
struct NotInvertible : std::domain_error {
  using std::domain_error::domain_error;
};

/// A hypothesis requiring a tangible (or non-zero) determinant failed.
struct Singular : std::domain_error {
  using std::domain_error::domain_error;
};

/// Order above a configured enumeration cap.
struct OrderTooLarge : std::length_error {
  using std::length_error::length_error;
};

struct OrderMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

} // namespace supertrop
