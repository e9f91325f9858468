#pragma once

#include <cstdint>

namespace locoh {

/// Resource limits shared by group enumeration and cohomology solvers.
struct Caps {
    /// Largest group order enumerate() will materialize.
    std::int64_t group_order = 4096;
    /// Largest nominal entry count (rows x cols) of the cocycle-identity
    /// constraint matrix, which has |G|^2*r rows and |G|*r columns.
    std::int64_t constraint_entries = 20'000'000;
};

} // namespace locoh
