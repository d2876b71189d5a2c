#include "qnc/pipeline.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "qnc/decompose.hpp"
#include "qnc/sim.hpp"
#include "qnc/synth.hpp"

namespace qnc {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

Circuit synthesize(const CompileInput &input, Scheme scheme) {
    return std::visit(
        overloaded{
            [&](const CMatrix &u) {
                const auto order = basis_order(log2_exact(u.dim()), scheme);
                return synth_circuit(givens_decompose(u, order));
            },
            [&](const Ket &s) {
                const auto order = basis_order(log2_exact(s.dim()), scheme);
                return synth_circuit(state_prep_decompose(s, order));
            },
            [](const Permutation &p) { return synth_circuit(permutation_decompose(p)); },
            [](const Circuit &c) { return c; },
        },
        input);
}

std::size_t embed_index(std::size_t logical_index, std::size_t n_logical,
                        std::size_t n_phys, const LayoutMap &layout) {
    std::size_t phys = 0;
    for (std::size_t q = 0; q < n_logical; ++q) {
        if ((logical_index >> (n_logical - 1 - q)) & 1U) {
            phys |= std::size_t{1} << (n_phys - 1 - layout.log_to_phys[q]);
        }
    }
    return phys;
}

Ket restrict_to_layout(const Ket &phys_state, const CompileResult &r) {
    const std::size_t dim = std::size_t{1} << r.n_logical;
    Ket out(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        out[x] = phys_state[embed_index(x, r.n_logical, r.final_circuit.n_qubits(), r.layout)];
    }
    return out;
}

} // namespace

CompileResult compile(const CompileInput &input, const CompileOptions &opts) {
    CompileResult r;
    r.logical = synthesize(input, opts.scheme);
    r.n_logical = r.logical.n_qubits();

    Circuit placed = r.logical;
    if (opts.topology) {
        r.layout = opts.mapping ? *opts.mapping : LayoutMap::identity(r.n_logical);
        if (r.layout.size() != r.n_logical) {
            throw std::invalid_argument("mapping lists " + std::to_string(r.layout.size()) +
                                        " qubits but the circuit has " +
                                        std::to_string(r.n_logical));
        }
        placed = route_circuit(r.logical, *opts.topology, r.layout);
    } else {
        if (opts.mapping) {
            throw std::invalid_argument("a mapping requires a topology");
        }
        r.layout = LayoutMap::identity(r.n_logical);
    }

    r.before = gate_count(placed);
    r.final_circuit = opts.optimize ? coalesce(placed) : std::move(placed);
    r.after = gate_count(r.final_circuit);

    opts.timing.validate();
    r.estimated_ns = estimate_time(r.final_circuit, opts.timing);
    r.verdict = check_coherence(r.estimated_ns, opts.timing);
    return r;
}

CMatrix logical_unitary(const CompileResult &r) {
    if (r.n_logical > kMaxUnitaryQubits) {
        throw std::invalid_argument("logical_unitary: too many qubits");
    }
    const std::size_t dim = std::size_t{1} << r.n_logical;
    const std::size_t n_phys = r.final_circuit.n_qubits();
    CMatrix m(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        const Ket start =
            Ket::basis(std::size_t{1} << n_phys, embed_index(x, r.n_logical, n_phys, r.layout));
        const Ket col = restrict_to_layout(simulate(r.final_circuit, start), r);
        for (std::size_t y = 0; y < dim; ++y) {
            m(y, x) = col[y];
        }
    }
    return m;
}

Ket logical_state(const CompileResult &r) {
    const std::size_t n_phys = r.final_circuit.n_qubits();
    return restrict_to_layout(simulate(r.final_circuit, Ket::basis(std::size_t{1} << n_phys, 0)),
                              r);
}

Verification verify(const CompileInput &input, const CompileResult &r) {
    Verification v;
    auto check_operator = [&](const CMatrix &ideal) {
        const CMatrix actual = logical_unitary(r);
        v.reconstruction_error = phase_dist(actual, ideal);
        const Ket e0 = Ket::basis(ideal.dim(), 0);
        v.success_rate = success_rate(apply(actual, e0), apply(ideal, e0));
    };
    std::visit(overloaded{
                   [&](const CMatrix &u) { check_operator(u); },
                   [&](const Ket &s) {
                       const Ket actual = logical_state(r);
                       v.reconstruction_error = phase_dist(actual, s);
                       v.success_rate = success_rate(actual, s);
                   },
                   [&](const Permutation &p) { check_operator(p.to_matrix()); },
                   [&](const Circuit &c) { check_operator(circuit_unitary(c)); },
               },
               input);
    return v;
}

void append_measure_all(Circuit &c, const LayoutMap &layout) {
    c.set_n_clbits(std::max(c.n_clbits(), layout.size()));
    for (std::size_t i = 0; i < layout.size(); ++i) {
        c.add(Gate::measure(layout.log_to_phys[i], i));
    }
}

} // namespace qnc
