#pragma once

// Benchmark inputs built from their textbook definitions with Kronecker
// products. Each carries the ideal output for the all-zero input.

#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "qnc/pipeline.hpp"
#include "support/oracle.hpp"

namespace qnc::testing {

struct Benchmark {
    std::string name;
    CompileInput input;
    Ket ideal;
};

inline CMatrix hadamard_all(std::size_t n) {
    const double h = 1 / std::sqrt(2.0);
    CMatrix out = CMatrix::identity(1);
    for (std::size_t q = 0; q < n; ++q) {
        out = kron(out, mat2(h, h, h, -h));
    }
    return out;
}

inline CMatrix diagonal(const std::vector<Complex> &d) {
    CMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        m(i, i) = d[i];
    }
    return m;
}

inline CMatrix permutation_matrix(const std::vector<std::size_t> &images) {
    CMatrix m(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        m(images[i], i) = 1;
    }
    return m;
}

/// Phase-oracle form: H^n Z^s H^n. Measures |s> with certainty.
inline CMatrix bernstein_vazirani(std::size_t n, std::size_t secret) {
    std::vector<Complex> phases(std::size_t{1} << n);
    for (std::size_t x = 0; x < phases.size(); ++x) {
        phases[x] = std::popcount(x & secret) % 2 ? -1.0 : 1.0;
    }
    const CMatrix h = hadamard_all(n);
    return h * diagonal(phases) * h;
}

inline CMatrix qft(std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    CMatrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            const double angle = 2 * std::numbers::pi * static_cast<double>(r * c % dim) /
                                 static_cast<double>(dim);
            m(r, c) = std::polar(1 / std::sqrt(static_cast<double>(dim)), angle);
        }
    }
    return m;
}

/// One Grover iteration on two qubits marking |11>, including the initial
/// Hadamards.
inline CMatrix grover2() {
    const CMatrix h = hadamard_all(2);
    const CMatrix oracle = diagonal({1, 1, 1, -1});
    const CMatrix reflect = diagonal({1, -1, -1, -1});
    return h * reflect * h * oracle * h;
}

inline CMatrix bell_unitary() {
    const double h = 1 / std::sqrt(2.0);
    const CMatrix hi = kron(mat2(h, h, h, -h), id2());
    return permutation_matrix({0, 1, 3, 2}) * hi;
}

inline std::vector<Benchmark> standard_benchmarks() {
    auto from_unitary = [](std::string name, const CMatrix &u) {
        return Benchmark{std::move(name), u, apply(u, Ket::basis(u.dim(), 0))};
    };
    std::vector<Benchmark> out;
    out.push_back(from_unitary("Bell", bell_unitary()));
    const double h = 1 / std::sqrt(2.0);
    const Ket ghz({h, 0, 0, 0, 0, 0, 0, h});
    out.push_back({"GHZ3", ghz, ghz});
    out.push_back(from_unitary("BV2", bernstein_vazirani(2, 0b11)));
    out.push_back(from_unitary("BV4", bernstein_vazirani(4, 0b1011)));
    out.push_back(from_unitary("BV6", bernstein_vazirani(6, 0b101101)));
    out.push_back(from_unitary("QFT2", qft(2)));
    out.push_back(from_unitary("QFT3", qft(3)));
    out.push_back(from_unitary("QFT4", qft(4)));
    out.push_back(from_unitary("Grover2", grover2()));
    out.push_back(from_unitary("SWAP", permutation_matrix({0, 2, 1, 3})));
    out.push_back(from_unitary("Toffoli", permutation_matrix({0, 1, 2, 3, 4, 5, 7, 6})));
    out.push_back(from_unitary("Fredkin", permutation_matrix({0, 1, 2, 3, 4, 6, 5, 7})));
    std::mt19937_64 rng(20220);
    for (std::size_t n : {2U, 3U, 4U}) {
        const Ket s = random_state(std::size_t{1} << n, rng);
        out.push_back({"AS" + std::to_string(n), s, s});
    }
    return out;
}

} // namespace qnc::testing
