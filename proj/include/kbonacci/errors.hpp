#pragma once

#include <stdexcept>
#include <string>

namespace kbonacci {

// An iteration failed to certify within its cap. Signals a precision or cap
// misconfiguration, not a mathematical failure.
class NonConvergence : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A rounded closed-form value drifted too far from the nearest integer.
// The caller should re-derive roots at higher precision.
class PrecisionExhausted : public std::runtime_error {
  public:
    PrecisionExhausted(const std::string& what, long at_index, double rounding_gap,
                       int precision_bits, int suggested_bits)
        : std::runtime_error(what),
          at_index(at_index),
          rounding_gap(rounding_gap),
          precision_bits(precision_bits),
          suggested_bits(suggested_bits) {}

    long at_index;
    double rounding_gap;
    int precision_bits;
    int suggested_bits;
};

// A linear solve left a residual above tolerance. With distinct roots the
// system is invertible, so this also signals precision exhaustion.
class IllConditioned : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// No index alignment in the search window reproduced the exact sequence.
class CalibrationFailed : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace kbonacci
