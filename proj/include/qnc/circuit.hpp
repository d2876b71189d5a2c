#pragma once

/**
 * @file circuit.hpp
 * Gate netlist representation. The internal alphabet is {U3, CX, MEASURE,
 * BARRIER}; everything else is normalized to it on input.
 */

#include <array>
#include <cstddef>
#include <vector>

#include "qnc/linalg.hpp"

namespace qnc {

enum class GateKind { U3, CX, Measure, Barrier };

struct Gate {
    GateKind kind = GateKind::U3;
    /// U3: {target}; CX: {control, target}; Measure: {qubit}; Barrier: any.
    std::vector<std::size_t> qubits;
    /// theta, phi, lambda (U3 only).
    std::array<double, 3> angles{};
    /// Measure only.
    std::vector<std::size_t> cbits;

    static Gate u3(std::size_t q, double theta, double phi, double lambda);
    static Gate u1(std::size_t q, double lambda) { return u3(q, 0.0, 0.0, lambda); }
    static Gate x(std::size_t q);
    static Gate h(std::size_t q);
    static Gate cx(std::size_t control, std::size_t target);
    static Gate measure(std::size_t q, std::size_t c);
    static Gate barrier(std::vector<std::size_t> qs);

    [[nodiscard]] bool touches(std::size_t q) const;

    bool operator==(const Gate &) const = default;
};

/// Matrix of u3(theta, phi, lambda) in the OpenQASM-2.0 convention.
Mat2 u3_matrix(double theta, double phi, double lambda);
Mat2 u3_matrix(const Gate &g);

class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(std::size_t n_qubits, std::size_t n_clbits = 0)
        : n_qubits_(n_qubits), n_clbits_(n_clbits) {}

    [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
    [[nodiscard]] std::size_t n_clbits() const { return n_clbits_; }
    void set_n_clbits(std::size_t n) { n_clbits_ = n; }

    [[nodiscard]] const std::vector<Gate> &gates() const { return gates_; }
    [[nodiscard]] std::size_t size() const { return gates_.size(); }
    [[nodiscard]] bool empty() const { return gates_.empty(); }

    /// Appends after checking index ranges, distinctness and finite angles.
    void add(Gate g);
    void append(const std::vector<Gate> &gs);
    /// Appends every gate of `other`, which must have the same register sizes.
    void append(const Circuit &other);

    bool operator==(const Circuit &) const = default;

  private:
    std::size_t n_qubits_ = 0;
    std::size_t n_clbits_ = 0;
    std::vector<Gate> gates_;
};

} // namespace qnc
