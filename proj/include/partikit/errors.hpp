#pragma once

#include <stdexcept>

namespace partikit {

// Input violates a documented precondition (invalid weights, non-coprime
// fdsum arguments, out-of-range residue, division by zero). CLI exit code 2.
struct precondition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An exact identity failed to hold where the math guarantees it (non-rational
// cyclotomic result, non-integer quasi-polynomial value, nonzero remainder in
// an exact division). Reaching this means a bug, not bad input. CLI exit code 3.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace partikit
