#include "qnc/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "qnc/synth.hpp"

namespace qnc {

namespace {

bool is_identity_up_to_phase(const Mat2 &m) {
    // ||m - e^{i phi} I||_F^2 minimized over phi
    double sq = 2.0 - 2.0 * std::abs(m(0, 0) + m(1, 1));
    for (const auto &x : m.m) {
        sq += std::norm(x);
    }
    return std::sqrt(std::max(0.0, sq)) <= kIdentityDropTol;
}

/// One left-to-right pass. Each qubit keeps a stack of the surviving gates
/// touching it; an incoming gate can only combine with the top of its stacks.
Circuit coalesce_pass(const Circuit &c) {
    std::vector<Gate> out;
    std::vector<bool> alive;
    std::vector<std::vector<std::size_t>> stacks(c.n_qubits());

    auto kill_top = [&](std::size_t idx) {
        alive[idx] = false;
        for (std::size_t q : out[idx].qubits) {
            stacks[q].pop_back();
        }
    };
    auto push = [&](const Gate &g) {
        out.push_back(g);
        alive.push_back(true);
        for (std::size_t q : g.qubits) {
            stacks[q].push_back(out.size() - 1);
        }
    };

    for (const Gate &g : c.gates()) {
        if (g.kind == GateKind::U3) {
            const std::size_t q = g.qubits[0];
            if (!stacks[q].empty() && out[stacks[q].back()].kind == GateKind::U3) {
                const std::size_t top = stacks[q].back();
                const Mat2 merged = u3_matrix(g) * u3_matrix(out[top]);
                if (is_identity_up_to_phase(merged)) {
                    kill_top(top);
                } else {
                    out[top] = u3_from_matrix(q, merged);
                }
                continue;
            }
            if (!is_identity_up_to_phase(u3_matrix(g))) {
                push(g);
            }
            continue;
        }
        if (g.kind == GateKind::CX) {
            const auto &sa = stacks[g.qubits[0]];
            const auto &sb = stacks[g.qubits[1]];
            if (!sa.empty() && !sb.empty() && sa.back() == sb.back() &&
                out[sa.back()].kind == GateKind::CX && out[sa.back()].qubits == g.qubits) {
                kill_top(sa.back());
                continue;
            }
        }
        push(g);
    }

    Circuit result(c.n_qubits(), c.n_clbits());
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (alive[i]) {
            result.add(std::move(out[i]));
        }
    }
    return result;
}

} // namespace

Circuit coalesce(const Circuit &c) {
    Circuit cur = coalesce_pass(c);
    while (true) {
        Circuit next = coalesce_pass(cur);
        if (next.size() == cur.size()) {
            return cur;
        }
        cur = std::move(next);
    }
}

GateCounts gate_count(const Circuit &c) {
    GateCounts counts;
    for (const Gate &g : c.gates()) {
        if (g.kind == GateKind::U3) {
            ++counts.u3;
        } else if (g.kind == GateKind::CX) {
            ++counts.cx;
        }
    }
    counts.total = c.size();
    return counts;
}

} // namespace qnc
