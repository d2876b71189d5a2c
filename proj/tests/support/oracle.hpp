#pragma once

// Test-only reference implementations. Nothing here calls into the stride
// simulator or the decomposition code; gate matrices are built from explicit
// Kronecker products so they can serve as an independent check.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <queue>
#include <random>
#include <vector>

#include "qnc/circuit.hpp"
#include "qnc/linalg.hpp"

namespace qnc::testing {

inline CMatrix kron(const CMatrix &a, const CMatrix &b) {
    const std::size_t n = a.dim() * b.dim();
    CMatrix out(n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            for (std::size_t k = 0; k < b.dim(); ++k) {
                for (std::size_t l = 0; l < b.dim(); ++l) {
                    out(i * b.dim() + k, j * b.dim() + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

inline CMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    return CMatrix(2, {a, b, c, d});
}

inline CMatrix id2() { return mat2(1, 0, 0, 1); }

/// Single-qubit operator on qubit q of n (qubit 0 leftmost).
inline CMatrix on_qubit(const CMatrix &u, std::size_t q, std::size_t n) {
    CMatrix out = CMatrix::identity(1);
    for (std::size_t i = 0; i < n; ++i) {
        out = kron(out, i == q ? u : id2());
    }
    return out;
}

/// u3 written out from its textbook definition.
inline CMatrix u3_ref(double t, double p, double l) {
    using std::cos, std::sin, std::exp;
    const Complex i(0, 1);
    return mat2(cos(t / 2), -exp(i * l) * sin(t / 2), exp(i * p) * sin(t / 2),
                exp(i * (p + l)) * cos(t / 2));
}

inline CMatrix gate_matrix_ref(const Gate &g, std::size_t n) {
    switch (g.kind) {
    case GateKind::U3:
        return on_qubit(u3_ref(g.angles[0], g.angles[1], g.angles[2]), g.qubits[0], n);
    case GateKind::CX: {
        const CMatrix p0 = mat2(1, 0, 0, 0);
        const CMatrix p1 = mat2(0, 0, 0, 1);
        const CMatrix x = mat2(0, 1, 1, 0);
        CMatrix a = CMatrix::identity(1);
        CMatrix b = CMatrix::identity(1);
        for (std::size_t q = 0; q < n; ++q) {
            a = kron(a, q == g.qubits[0] ? p0 : id2());
            b = kron(b, q == g.qubits[0] ? p1 : (q == g.qubits[1] ? x : id2()));
        }
        CMatrix sum(a.dim());
        for (std::size_t r = 0; r < a.dim(); ++r) {
            for (std::size_t c = 0; c < a.dim(); ++c) {
                sum(r, c) = a(r, c) + b(r, c);
            }
        }
        return sum;
    }
    default:
        return CMatrix::identity(std::size_t{1} << n);
    }
}

/// Product of full gate matrices, later gates on the left.
inline CMatrix oracle_unitary(const Circuit &c) {
    const std::size_t n = c.n_qubits();
    CMatrix u = CMatrix::identity(std::size_t{1} << n);
    for (const Gate &g : c.gates()) {
        u = gate_matrix_ref(g, n) * u;
    }
    return u;
}

inline CMatrix oracle_unitary(const std::vector<Gate> &gates, std::size_t n) {
    Circuit c(n);
    c.append(gates);
    return oracle_unitary(c);
}

inline Complex gaussian_complex(std::mt19937_64 &rng) {
    std::normal_distribution<double> nd(0.0, 1.0);
    const double re = nd(rng);
    const double im = nd(rng);
    return {re, im};
}

/// Haar-like random unitary by Gram-Schmidt on a complex Gaussian matrix.
inline CMatrix random_unitary(std::size_t dim, std::mt19937_64 &rng) {
    std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(dim));
    for (auto &col : cols) {
        for (auto &x : col) {
            x = gaussian_complex(rng);
        }
    }
    for (std::size_t c = 0; c < dim; ++c) {
        for (std::size_t p = 0; p < c; ++p) {
            Complex dot = 0;
            for (std::size_t r = 0; r < dim; ++r) {
                dot += std::conj(cols[p][r]) * cols[c][r];
            }
            for (std::size_t r = 0; r < dim; ++r) {
                cols[c][r] -= dot * cols[p][r];
            }
        }
        double norm = 0;
        for (auto &x : cols[c]) {
            norm += std::norm(x);
        }
        norm = std::sqrt(norm);
        for (auto &x : cols[c]) {
            x /= norm;
        }
    }
    CMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            m(r, c) = cols[c][r];
        }
    }
    return m;
}

inline Mat2 random_mat2(std::mt19937_64 &rng) {
    const CMatrix m = random_unitary(2, rng);
    return {{m(0, 0), m(0, 1), m(1, 0), m(1, 1)}};
}

inline Ket random_state(std::size_t dim, std::mt19937_64 &rng) {
    std::vector<Complex> v(dim);
    double norm = 0;
    for (auto &x : v) {
        x = gaussian_complex(rng);
        norm += std::norm(x);
    }
    for (auto &x : v) {
        x /= std::sqrt(norm);
    }
    return Ket(std::move(v));
}

/// Random circuit of U3 and CX gates.
inline Circuit random_circuit(std::size_t n, std::size_t n_gates, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
    std::uniform_int_distribution<int> kind(0, 2);
    Circuit c(n);
    for (std::size_t i = 0; i < n_gates; ++i) {
        if (n > 1 && kind(rng) == 0) {
            const std::size_t a = qubit(rng);
            std::size_t b = qubit(rng);
            while (b == a) {
                b = qubit(rng);
            }
            c.add(Gate::cx(a, b));
        } else {
            c.add(Gate::u3(qubit(rng), angle(rng), angle(rng), angle(rng)));
        }
    }
    return c;
}

/// Breadth-first hop distances from every vertex.
inline std::vector<std::vector<std::size_t>>
bfs_distances(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>> &edges) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, SIZE_MAX));
    for (std::size_t s = 0; s < n; ++s) {
        std::queue<std::size_t> q;
        q.push(s);
        dist[s][s] = 0;
        while (!q.empty()) {
            const std::size_t v = q.front();
            q.pop();
            for (std::size_t w : adj[v]) {
                if (dist[s][w] == SIZE_MAX) {
                    dist[s][w] = dist[s][v] + 1;
                    q.push(w);
                }
            }
        }
    }
    return dist;
}

inline double max_abs_diff(const CMatrix &a, const CMatrix &b) {
    double d = 0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        d = std::max(d, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return d;
}

} // namespace qnc::testing
