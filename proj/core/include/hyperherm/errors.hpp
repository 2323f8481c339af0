#pragma once

#include <stdexcept>
#include <string>

namespace hyperherm {

/// Axis lengths or shapes do not line up.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Contraction attempted between two slots of the same variance.
class VarianceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation's documented precondition does not hold for its input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity that must hold by construction failed. Indicates a bug or a
/// transcription error in hard-coded data, never bad user input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace hyperherm
