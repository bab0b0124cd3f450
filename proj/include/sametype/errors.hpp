#pragma once

#include <stdexcept>
#include <string>

namespace sametype {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct AffinelyDependent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A transversal tuple with orientation 0 while general position is not verified.
struct DegenerateTuple : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateBody : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResampleLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SameTypeVerificationFailed : std::logic_error {
  using std::logic_error::logic_error;
};

// A proven inequality failed at runtime: arithmetic bug, not an input problem.
struct TheoremViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct RetryExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AuditFailedRepeatedly : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sametype
