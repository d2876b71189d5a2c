#include "qnc/layout.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qnc {

ShortestPaths all_pairs_shortest(std::size_t n, const std::set<Edge> &edges) {
    constexpr std::size_t inf = ShortestPaths::kUnreachable;
    ShortestPaths sp;
    sp.n = n;
    sp.dist.assign(n * n, inf);
    sp.next_hop.assign(n * n, inf);

    std::vector<std::vector<std::size_t>> neighbours(n);
    for (std::size_t i = 0; i < n; ++i) {
        sp.dist[i * n + i] = 0;
    }
    for (const auto &[a, b] : edges) {
        if (a >= n || b >= n) {
            throw std::invalid_argument("edge (" + std::to_string(a) + "," +
                                        std::to_string(b) + ") references a vertex >= " +
                                        std::to_string(n));
        }
        if (a == b) {
            throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
        }
        sp.dist[a * n + b] = 1;
        sp.dist[b * n + a] = 1;
        neighbours[a].push_back(b);
        neighbours[b].push_back(a);
    }

    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t ik = sp.dist[i * n + k];
            if (ik == inf) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                const std::size_t kj = sp.dist[k * n + j];
                if (kj != inf && ik + kj < sp.dist[i * n + j]) {
                    sp.dist[i * n + j] = ik + kj;
                }
            }
        }
    }

    for (auto &nb : neighbours) {
        std::sort(nb.begin(), nb.end());
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t d = sp.dist[a * n + b];
            if (d == inf) {
                throw std::invalid_argument("topology is disconnected: no path between " +
                                            std::to_string(a) + " and " +
                                            std::to_string(b));
            }
            if (a == b) {
                sp.next_hop[a * n + b] = a;
                continue;
            }
            for (std::size_t v : neighbours[a]) {
                if (sp.dist[v * n + b] + 1 == d) {
                    sp.next_hop[a * n + b] = v;
                    break;
                }
            }
        }
    }
    return sp;
}

Topology::Topology(std::size_t n_phys, const std::vector<Edge> &edges) : n_(n_phys) {
    if (n_phys == 0) {
        throw std::invalid_argument("topology needs at least one qubit");
    }
    for (auto [a, b] : edges) {
        edges_.insert({std::min(a, b), std::max(a, b)});
    }
    paths_ = all_pairs_shortest(n_, edges_);
}

Topology Topology::line(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        e.emplace_back(i, i + 1);
    }
    return Topology(n, e);
}

Topology Topology::grid(std::size_t rows, std::size_t cols) {
    std::vector<Edge> e;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            const std::size_t v = r * cols + c;
            if (c + 1 < cols) {
                e.emplace_back(v, v + 1);
            }
            if (r + 1 < rows) {
                e.emplace_back(v, v + cols);
            }
        }
    }
    return Topology(rows * cols, e);
}

Topology Topology::complete(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            e.emplace_back(a, b);
        }
    }
    return Topology(n, e);
}

bool Topology::adjacent(std::size_t a, std::size_t b) const {
    return edges_.contains({std::min(a, b), std::max(a, b)});
}

std::size_t Topology::dist(std::size_t a, std::size_t b) const {
    if (a >= n_ || b >= n_) {
        throw std::out_of_range("Topology::dist: vertex out of range");
    }
    return paths_.dist[a * n_ + b];
}

std::size_t Topology::next_hop(std::size_t a, std::size_t b) const {
    if (a >= n_ || b >= n_) {
        throw std::out_of_range("Topology::next_hop: vertex out of range");
    }
    return paths_.next_hop[a * n_ + b];
}

std::vector<std::size_t> Topology::path(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> p{a};
    while (a != b) {
        a = next_hop(a, b);
        p.push_back(a);
    }
    return p;
}

LayoutMap LayoutMap::identity(std::size_t n) {
    LayoutMap m;
    m.log_to_phys.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        m.log_to_phys[i] = i;
    }
    return m;
}

void LayoutMap::validate(std::size_t n_phys) const {
    std::vector<bool> used(n_phys, false);
    for (std::size_t i = 0; i < log_to_phys.size(); ++i) {
        const std::size_t p = log_to_phys[i];
        if (p >= n_phys) {
            throw std::out_of_range("mapping: logical qubit " + std::to_string(i) +
                                    " -> physical " + std::to_string(p) +
                                    " exceeds machine size " + std::to_string(n_phys));
        }
        if (used[p]) {
            throw std::invalid_argument("mapping: physical qubit " + std::to_string(p) +
                                        " assigned twice");
        }
        used[p] = true;
    }
}

std::size_t routed_cnot_count(std::size_t d) {
    if (d == 0) {
        throw std::invalid_argument("routed_cnot_count: distance must be positive");
    }
    return 3 * (std::size_t{1} << (d - 1)) - 2;
}

namespace {

void route_cnot_into(std::size_t control, std::size_t target, const Topology &t,
                     std::vector<Gate> &out) {
    if (t.adjacent(control, target)) {
        out.push_back(Gate::cx(control, target));
        return;
    }
    const std::size_t k = t.next_hop(control, target);
    route_cnot_into(k, target, t, out);
    out.push_back(Gate::cx(control, k));
    route_cnot_into(k, target, t, out);
    out.push_back(Gate::cx(control, k));
}

} // namespace

std::vector<Gate> route_cnot(std::size_t control, std::size_t target, const Topology &t) {
    if (control == target) {
        throw std::invalid_argument("route_cnot: control equals target");
    }
    if (control >= t.n_phys() || target >= t.n_phys()) {
        throw std::out_of_range("route_cnot: qubit outside topology");
    }
    std::vector<Gate> out;
    out.reserve(routed_cnot_count(t.dist(control, target)));
    route_cnot_into(control, target, t, out);
    return out;
}

Circuit route_circuit(const Circuit &c, const Topology &t, const LayoutMap &m) {
    if (m.size() != c.n_qubits()) {
        throw std::invalid_argument("route_circuit: mapping covers " +
                                    std::to_string(m.size()) + " qubits, circuit has " +
                                    std::to_string(c.n_qubits()));
    }
    if (c.n_qubits() > t.n_phys()) {
        throw std::invalid_argument("route_circuit: circuit needs " +
                                    std::to_string(c.n_qubits()) +
                                    " qubits, topology has " + std::to_string(t.n_phys()));
    }
    m.validate(t.n_phys());

    Circuit out(t.n_phys(), c.n_clbits());
    for (const Gate &g : c.gates()) {
        if (g.kind == GateKind::CX) {
            out.append(route_cnot(m.log_to_phys[g.qubits[0]], m.log_to_phys[g.qubits[1]], t));
            continue;
        }
        Gate mapped = g;
        for (auto &q : mapped.qubits) {
            q = m.log_to_phys[q];
        }
        out.add(std::move(mapped));
    }
    return out;
}

} // namespace qnc
