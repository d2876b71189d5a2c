#include "qnc/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qnc {

Gate Gate::u3(std::size_t q, double theta, double phi, double lambda) {
    return Gate{GateKind::U3, {q}, {theta, phi, lambda}, {}};
}

Gate Gate::x(std::size_t q) { return u3(q, std::numbers::pi, 0.0, std::numbers::pi); }

Gate Gate::h(std::size_t q) { return u3(q, std::numbers::pi / 2, 0.0, std::numbers::pi); }

Gate Gate::cx(std::size_t control, std::size_t target) {
    return Gate{GateKind::CX, {control, target}, {}, {}};
}

Gate Gate::measure(std::size_t q, std::size_t c) {
    return Gate{GateKind::Measure, {q}, {}, {c}};
}

Gate Gate::barrier(std::vector<std::size_t> qs) {
    return Gate{GateKind::Barrier, std::move(qs), {}, {}};
}

bool Gate::touches(std::size_t q) const {
    return std::find(qubits.begin(), qubits.end(), q) != qubits.end();
}

Mat2 u3_matrix(double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return {{Complex(c, 0.0), -std::polar(s, lambda), std::polar(s, phi),
             std::polar(c, phi + lambda)}};
}

Mat2 u3_matrix(const Gate &g) { return u3_matrix(g.angles[0], g.angles[1], g.angles[2]); }

void Circuit::add(Gate g) {
    std::size_t expected = 0;
    switch (g.kind) {
    case GateKind::U3:
    case GateKind::Measure:
        expected = 1;
        break;
    case GateKind::CX:
        expected = 2;
        break;
    case GateKind::Barrier:
        expected = g.qubits.empty() ? 1 : g.qubits.size();
        break;
    }
    if (g.qubits.size() != expected) {
        throw std::invalid_argument("gate has wrong number of qubit operands");
    }
    for (std::size_t i = 0; i < g.qubits.size(); ++i) {
        if (g.qubits[i] >= n_qubits_) {
            throw std::out_of_range("qubit index " + std::to_string(g.qubits[i]) +
                                    " out of range for " + std::to_string(n_qubits_) +
                                    "-qubit circuit");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (g.qubits[i] == g.qubits[j]) {
                throw std::invalid_argument("repeated qubit operand " +
                                            std::to_string(g.qubits[i]));
            }
        }
    }
    if (g.kind == GateKind::Measure) {
        if (g.cbits.size() != 1 || g.cbits[0] >= n_clbits_) {
            throw std::out_of_range("measure: classical bit out of range");
        }
    } else if (!g.cbits.empty()) {
        throw std::invalid_argument("only measure gates carry classical bits");
    }
    for (double a : g.angles) {
        if (!std::isfinite(a)) {
            throw std::invalid_argument("gate angle is not finite");
        }
    }
    gates_.push_back(std::move(g));
}

void Circuit::append(const std::vector<Gate> &gs) {
    for (const auto &g : gs) {
        add(g);
    }
}

void Circuit::append(const Circuit &other) {
    if (other.n_qubits_ != n_qubits_ || other.n_clbits_ > n_clbits_) {
        throw std::invalid_argument("append: register size mismatch");
    }
    append(other.gates_);
}

} // namespace qnc
