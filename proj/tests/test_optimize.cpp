#include "qnc/optimize.hpp"

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "qnc/layout.hpp"
#include "support/oracle.hpp"

using namespace qnc;
using qnc::testing::oracle_unitary;

TEST(Coalesce, CancellingPairs) {
    Circuit xx(1);
    xx.add(Gate::x(0));
    xx.add(Gate::x(0));
    EXPECT_EQ(coalesce(xx).size(), 0U);

    Circuit cc(2);
    cc.add(Gate::cx(0, 1));
    cc.add(Gate::cx(0, 1));
    EXPECT_EQ(coalesce(cc).size(), 0U);

    Circuit reversed(2);
    reversed.add(Gate::cx(0, 1));
    reversed.add(Gate::cx(1, 0));
    EXPECT_EQ(coalesce(reversed).size(), 2U);
}

TEST(Coalesce, MergesU3Runs) {
    Circuit c(1);
    c.add(Gate::u3(0, 0.3, 0.1, -0.2));
    c.add(Gate::u3(0, 1.1, -0.7, 0.4));
    c.add(Gate::u3(0, -0.5, 2.0, 0.0));
    const Circuit out = coalesce(c);
    ASSERT_EQ(out.size(), 1U);
    EXPECT_LE(phase_dist(oracle_unitary(out), oracle_unitary(c)), 1e-10);
}

TEST(Coalesce, RoutedMirrorShrinks) {
    const Topology line = Topology::line(3);
    auto routed = route_cnot(0, 2, line);
    Circuit c(3);
    c.append(routed);
    c.append(std::vector<Gate>(routed.rbegin(), routed.rend()));
    ASSERT_EQ(c.size(), 8U);
    const Circuit out = coalesce(c);
    EXPECT_LT(out.size(), 8U);
    EXPECT_EQ(out.size(), 0U);
    EXPECT_LE(phase_dist(oracle_unitary(out), oracle_unitary(c)), 1e-10);
}

TEST(Coalesce, BarrierBlocks) {
    Circuit c(2);
    c.add(Gate::cx(0, 1));
    c.add(Gate::barrier({0, 1}));
    c.add(Gate::cx(0, 1));
    c.add(Gate::x(1));
    c.add(Gate::barrier({1}));
    c.add(Gate::x(1));
    EXPECT_EQ(coalesce(c), c);

    Circuit m(1, 1);
    m.add(Gate::x(0));
    m.add(Gate::measure(0, 0));
    m.add(Gate::x(0));
    EXPECT_EQ(coalesce(m).size(), 3U);
}

TEST(Coalesce, InterveningGateOnTargetKeepsCx) {
    Circuit c(3);
    c.add(Gate::cx(0, 1));
    c.add(Gate::cx(2, 1));
    c.add(Gate::cx(0, 1));
    EXPECT_EQ(coalesce(c).size(), 3U);
}

TEST(Coalesce, FuzzSoundMonotoneIdempotent) {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> coin(0, 3);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + trial % 4;
        Circuit c = qnc::testing::random_circuit(n, 30, rng);
        // sprinkle exact inverses so there is something to cancel
        Circuit padded(n);
        for (const Gate &g : c.gates()) {
            padded.add(g);
            if (coin(rng) == 0) {
                if (g.kind == GateKind::CX) {
                    padded.add(g);
                } else {
                    padded.add(Gate::u3(g.qubits[0], -g.angles[0], -g.angles[2], -g.angles[1]));
                }
            }
        }
        const Circuit once = coalesce(padded);
        EXPECT_LE(once.size(), padded.size());
        EXPECT_LE(phase_dist(oracle_unitary(once), oracle_unitary(padded)), 1e-9);
        EXPECT_EQ(coalesce(once), once);
    }
}

TEST(GateCount, Values) {
    EXPECT_EQ(gate_count(Circuit(2)), (GateCounts{0, 0, 0}));

    Circuit bell(2, 2);
    bell.add(Gate::h(0));
    bell.add(Gate::cx(0, 1));
    EXPECT_EQ(gate_count(bell), (GateCounts{1, 1, 2}));
    bell.add(Gate::measure(0, 0));
    bell.add(Gate::barrier({0, 1}));
    EXPECT_EQ(gate_count(bell), (GateCounts{1, 1, 4}));
}
