#pragma once

/**
 * @file optimize.hpp
 * Peephole coalescing of adjacent gates.
 *
 * Rules, applied until nothing changes:
 *   - consecutive U3 gates on one qubit merge into a single U3;
 *   - CX(a,b) CX(a,b) with nothing on a or b in between cancel;
 *   - U3 gates equal to the identity (up to phase, within 1e-10) vanish.
 * Barriers and measurements are never merged and block every rule on the
 * qubits they touch.
 */

#include <cstddef>

#include "qnc/circuit.hpp"

namespace qnc {

inline constexpr double kIdentityDropTol = 1e-10;

Circuit coalesce(const Circuit &c);

struct GateCounts {
    std::size_t u3 = 0;
    std::size_t cx = 0;
    /// Every entry of the gate list, measurements and barriers included.
    std::size_t total = 0;

    bool operator==(const GateCounts &) const = default;
};

GateCounts gate_count(const Circuit &c);

} // namespace qnc
