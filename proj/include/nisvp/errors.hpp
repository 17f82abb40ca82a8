#pragma once

#include <stdexcept>

namespace nisvp {

// Error taxonomy shared across the library. Each type maps to one failure
// category so callers can dispatch on catch clauses instead of messages.

struct ShapeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ZeroDenominator : std::domain_error {
  using std::domain_error::domain_error;
};

struct BadRange : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NoConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LengthMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NegativeDiagonal : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InfeasibleInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadMultiplicities : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexOutOfBounds : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct NotSquare : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NoTrace : std::logic_error {
  using std::logic_error::logic_error;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nisvp
