#include "qnc/sim.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qnc {

void apply_gate(const Gate &g, std::size_t n_qubits, Ket &state) {
    const std::size_t dim = state.dim();
    switch (g.kind) {
    case GateKind::U3: {
        const Mat2 m = u3_matrix(g);
        const std::size_t stride = std::size_t{1} << (n_qubits - 1 - g.qubits[0]);
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t i = base; i < base + stride; ++i) {
                const Complex a0 = state[i];
                const Complex a1 = state[i + stride];
                state[i] = m(0, 0) * a0 + m(0, 1) * a1;
                state[i + stride] = m(1, 0) * a0 + m(1, 1) * a1;
            }
        }
        break;
    }
    case GateKind::CX: {
        const std::size_t cbit = std::size_t{1} << (n_qubits - 1 - g.qubits[0]);
        const std::size_t tbit = std::size_t{1} << (n_qubits - 1 - g.qubits[1]);
        for (std::size_t i = 0; i < dim; ++i) {
            if ((i & cbit) != 0 && (i & tbit) == 0) {
                std::swap(state[i], state[i | tbit]);
            }
        }
        break;
    }
    case GateKind::Measure:
    case GateKind::Barrier:
        break;
    }
}

Ket simulate(const Circuit &c, const Ket &start) {
    const std::size_t n = c.n_qubits();
    if (n > kMaxStatevectorQubits) {
        throw std::invalid_argument("simulate: more than " +
                                    std::to_string(kMaxStatevectorQubits) + " qubits");
    }
    if (start.dim() != (std::size_t{1} << n)) {
        throw std::invalid_argument("simulate: state dimension " + std::to_string(start.dim()) +
                                    " does not match " + std::to_string(n) + " qubits");
    }
    Ket state = start;
    for (const Gate &g : c.gates()) {
        apply_gate(g, n, state);
    }
    return state;
}

CMatrix circuit_unitary(const Circuit &c) {
    const std::size_t n = c.n_qubits();
    if (n > kMaxUnitaryQubits) {
        throw std::invalid_argument("circuit_unitary: more than " +
                                    std::to_string(kMaxUnitaryQubits) + " qubits");
    }
    const std::size_t dim = std::size_t{1} << n;
    // Every column evolves at once: a gate acts on rows of the accumulated
    // matrix exactly as it acts on amplitudes of a single state.
    CMatrix u = CMatrix::identity(dim);
    Complex *rows = u.entries().data();
    for (const Gate &g : c.gates()) {
        if (g.kind == GateKind::U3) {
            const Mat2 m = u3_matrix(g);
            const std::size_t stride = std::size_t{1} << (n - 1 - g.qubits[0]);
            for (std::size_t base = 0; base < dim; base += 2 * stride) {
                for (std::size_t i = base; i < base + stride; ++i) {
                    Complex *r0 = rows + i * dim;
                    Complex *r1 = rows + (i + stride) * dim;
                    for (std::size_t col = 0; col < dim; ++col) {
                        const Complex a0 = r0[col];
                        const Complex a1 = r1[col];
                        r0[col] = m(0, 0) * a0 + m(0, 1) * a1;
                        r1[col] = m(1, 0) * a0 + m(1, 1) * a1;
                    }
                }
            }
        } else if (g.kind == GateKind::CX) {
            const std::size_t cbit = std::size_t{1} << (n - 1 - g.qubits[0]);
            const std::size_t tbit = std::size_t{1} << (n - 1 - g.qubits[1]);
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & cbit) != 0 && (i & tbit) == 0) {
                    std::swap_ranges(rows + i * dim, rows + (i + 1) * dim, rows + (i | tbit) * dim);
                }
            }
        }
    }
    return u;
}

double success_rate(const Ket &final_state, const Ket &target) {
    return std::norm(inner(target, final_state));
}

double success_rate(const Ket &final_state, std::size_t basis_index) {
    if (basis_index >= final_state.dim()) {
        throw std::invalid_argument("success_rate: basis index out of range");
    }
    return std::norm(final_state[basis_index]);
}

} // namespace qnc
