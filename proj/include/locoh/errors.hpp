#pragma once

#include <stdexcept>

namespace locoh {

/// Malformed input: bad moduli, shape or modulus mismatches, unreadable specs.
struct value_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Resource limits: group enumeration caps, constraint-matrix caps and
/// intermediate integer overflow. Overflow is detected, never wrapped.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace locoh
