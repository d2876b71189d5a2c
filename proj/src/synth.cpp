#include "qnc/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qnc {

namespace {

constexpr double kDegenerateTol = 1e-12;

std::size_t bit_of(std::size_t qubit, std::size_t n_qubits) {
    return std::size_t{1} << (n_qubits - 1 - qubit);
}

} // namespace

Mat2 rz(double angle) {
    return Mat2::diag(std::polar(1.0, -angle / 2), std::polar(1.0, angle / 2));
}

Mat2 ry(double angle) {
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    return {{c, -s, s, c}};
}

Mat2 euler_matrix(const Euler &e) {
    Mat2 m = rz(e.beta) * ry(e.gamma) * rz(e.delta);
    const Complex phase = std::polar(1.0, e.alpha);
    for (auto &x : m.m) {
        x *= phase;
    }
    return m;
}

Euler zyz(const Mat2 &u) {
    if (!is_unitary(u, kDefaultTol)) {
        throw std::invalid_argument("zyz: matrix is not unitary");
    }
    Euler e;
    e.alpha = std::arg(u.det()) / 2;
    const Complex unphase = std::polar(1.0, -e.alpha);
    const Complex v00 = u(0, 0) * unphase;
    const Complex v10 = u(1, 0) * unphase;
    const Complex v11 = u(1, 1) * unphase;
    e.gamma = 2 * std::atan2(std::abs(v10), std::abs(v00));
    const bool has_diag = std::abs(v00) > kDegenerateTol;
    const bool has_off = std::abs(v10) > kDegenerateTol;
    // beta + delta = 2 arg(v11), beta - delta = 2 arg(v10)
    if (has_diag && has_off) {
        const double sum = 2 * std::arg(v11);
        const double diff = 2 * std::arg(v10);
        e.beta = (sum + diff) / 2;
        e.delta = (sum - diff) / 2;
    } else if (has_diag) {
        e.beta = 2 * std::arg(v11);
    } else {
        e.beta = 2 * std::arg(v10);
    }
    return e;
}

Gate u3_from_matrix(std::size_t q, const Mat2 &u) {
    const Euler e = zyz(u);
    return Gate::u3(q, e.gamma, e.beta, e.delta);
}

Mat2 sqrt_unitary(const Mat2 &u) {
    const Complex half_tr = (u(0, 0) + u(1, 1)) / 2.0;
    const Complex disc = std::sqrt(half_tr * half_tr - u.det());
    const Complex root1 = std::sqrt(half_tr + disc);
    Complex root2 = std::sqrt(half_tr - disc);
    // (u + r1 r2 I) / (r1 + r2) has eigenvalues r1, r2 by Cayley-Hamilton.
    // Flip the second root if the principal pair nearly cancels (eigenvalues
    // straddling -1); the result is still a square root.
    if (std::abs(root1 + root2) < 0.5) {
        root2 = -root2;
    }
    const Complex s = root1 * root2;
    const Complex t = root1 + root2;
    return {{(u(0, 0) + s) / t, u(0, 1) / t, u(1, 0) / t, (u(1, 1) + s) / t}};
}

std::size_t multi_control_gate_count(std::size_t controls, bool is_x) {
    if (controls == 0) {
        return 1;
    }
    if (controls == 1) {
        return is_x ? 1 : 6;
    }
    // C(V), C(V^dag): 6 each; two C^{c-1}(X); one C^{c-1}(V).
    return 12 + 2 * multi_control_gate_count(controls - 1, true) +
           multi_control_gate_count(controls - 1, false);
}

std::vector<Gate> multi_control_expand(const std::vector<std::size_t> &controls,
                                       std::size_t target, const Mat2 &u) {
    for (std::size_t i = 0; i < controls.size(); ++i) {
        if (controls[i] == target) {
            throw std::invalid_argument("multi_control_expand: target is also a control");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (controls[i] == controls[j]) {
                throw std::invalid_argument("multi_control_expand: repeated control");
            }
        }
    }

    if (controls.empty()) {
        return {u3_from_matrix(target, u)};
    }
    if (controls.size() == 1) {
        const std::size_t c = controls.front();
        if (max_abs_diff(u, Mat2::pauli_x()) <= kDegenerateTol) {
            return {Gate::cx(c, target)};
        }
        // u = e^{ia} A X B X C with ABC = I.
        const Euler e = zyz(u);
        return {
            Gate::u3(target, 0.0, 0.0, (e.delta - e.beta) / 2),
            Gate::cx(c, target),
            Gate::u3(target, -e.gamma / 2, 0.0, -(e.delta + e.beta) / 2),
            Gate::cx(c, target),
            Gate::u3(target, e.gamma / 2, e.beta, 0.0),
            Gate::u1(c, e.alpha),
        };
    }

    const std::size_t last = controls.back();
    const std::vector<std::size_t> rest(controls.begin(), controls.end() - 1);
    const Mat2 v = sqrt_unitary(u);
    std::vector<Gate> out;
    auto emit = [&out](std::vector<Gate> gs) {
        out.insert(out.end(), gs.begin(), gs.end());
    };
    emit(multi_control_expand({last}, target, v));
    emit(multi_control_expand(rest, last, Mat2::pauli_x()));
    emit(multi_control_expand({last}, target, v.adjoint()));
    emit(multi_control_expand(rest, last, Mat2::pauli_x()));
    emit(multi_control_expand(rest, target, v));
    return out;
}

std::vector<Gate> two_level_to_gates(const TwoLevelOp &op, std::size_t n_qubits) {
    if (n_qubits == 0) {
        throw std::invalid_argument("two_level_to_gates: zero qubits");
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (op.j >= dim || op.k >= dim) {
        throw std::out_of_range("two_level_to_gates: basis index out of range");
    }

    std::size_t target = n_qubits - 1;
    std::size_t a = op.k;
    Mat2 u;
    std::vector<Gate> chain;

    if (op.kind == OpKind::Phase) {
        const Complex d = op.block(0, 0);
        u = (a & bit_of(target, n_qubits)) != 0 ? Mat2::diag(1.0, d) : Mat2::diag(d, 1.0);
    } else {
        if (op.j == op.k) {
            throw std::invalid_argument("two_level_to_gates: j == k");
        }
        std::size_t b = op.j;
        const std::size_t diff = a ^ b;
        // Lowest differing bit is the target; walk the other differing bits
        // onto it with CX gates controlled by the target.
        const std::size_t tbit = diff & (~diff + 1);
        target = n_qubits - 1 - log2_exact(tbit);
        for (std::size_t q = 0; q < n_qubits; ++q) {
            const std::size_t sbit = bit_of(q, n_qubits);
            if (q != target && (diff & sbit) != 0) {
                chain.push_back(Gate::cx(target, q));
                if ((a & tbit) != 0) {
                    a ^= sbit;
                } else {
                    b ^= sbit;
                }
            }
        }
        const Mat2 &blk = op.block;
        u = (a & tbit) == 0 ? blk : Mat2{{blk(1, 1), blk(1, 0), blk(0, 1), blk(0, 0)}};
    }

    std::vector<std::size_t> controls;
    std::vector<Gate> flips;
    for (std::size_t q = 0; q < n_qubits; ++q) {
        if (q == target) {
            continue;
        }
        controls.push_back(q);
        if ((a & bit_of(q, n_qubits)) == 0) {
            flips.push_back(Gate::x(q));
        }
    }

    std::vector<Gate> out = chain;
    out.insert(out.end(), flips.begin(), flips.end());
    const auto core = multi_control_expand(controls, target, u);
    out.insert(out.end(), core.begin(), core.end());
    out.insert(out.end(), flips.begin(), flips.end());
    out.insert(out.end(), chain.begin(), chain.end());
    return out;
}

Circuit synth_circuit(const DecompResult &d) {
    Circuit c(d.n_qubits);
    // ops[0] is the leftmost factor, so it executes last.
    for (auto it = d.ops.rbegin(); it != d.ops.rend(); ++it) {
        c.append(two_level_to_gates(*it, d.n_qubits));
    }
    return c;
}

} // namespace qnc
