#include "qnc/formats.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <numeric>
#include <random>

#include "support/oracle.hpp"

using namespace qnc;

namespace {

const char *kQft2Text = R"(0.5  0.5        0.5  0.5
0.5  (0.0,0.5)  -0.5 (0.0,-0.5)
0.5  -0.5       0.5  -0.5
0.5  (0.0,-0.5) -0.5 (0.0,0.5)
)";

ParseErrc code_of(auto &&fn) {
    try {
        fn();
    } catch (const ParseError &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected ParseError";
    return ParseErrc::Syntax;
}

} // namespace

TEST(ComplexTokens, BracketedPair) {
    const auto v = parse_complex_tokens("(1.0, 2)");
    ASSERT_EQ(v.size(), 1U);
    EXPECT_EQ(v[0], Complex(1.0, 2.0));
    const auto w = parse_complex_tokens("  ( -0.5 ,\n 3e-1 )  7");
    ASSERT_EQ(w.size(), 2U);
    EXPECT_EQ(w[0], Complex(-0.5, 0.3));
    EXPECT_EQ(w[1], Complex(7.0, 0.0));
}

TEST(ParseUnitary, Qft2FromText) {
    const CMatrix f = parse_unitary(kQft2Text);
    ASSERT_EQ(f.dim(), 4U);
    EXPECT_EQ(f(1, 1), Complex(0.0, 0.5));
    EXPECT_EQ(f(3, 1), Complex(0.0, -0.5));
    EXPECT_EQ(f(2, 1), Complex(-0.5, 0.0));
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            // F_2[r][c] = i^{rc} / 2
            const Complex expected = std::pow(Complex(0, 1), static_cast<int>(r * c)) * 0.5;
            EXPECT_NEAR(std::abs(f(r, c) - expected), 0.0, 1e-15);
        }
    }
}

TEST(ParseUnitary, Identity) { EXPECT_EQ(parse_unitary("1 0 0 1"), CMatrix::identity(2)); }

TEST(ParseUnitary, DistinctDiagnostics) {
    EXPECT_EQ(code_of([] { parse_unitary("1 0 0"); }), ParseErrc::NonSquare);
    EXPECT_EQ(code_of([] { parse_unitary("1 0 0 0 1 0 0 0 1"); }), ParseErrc::NotPowerOfTwo);
    EXPECT_EQ(code_of([] { parse_unitary("1 0 0 abc"); }), ParseErrc::MalformedToken);
    EXPECT_EQ(code_of([] { parse_unitary("1 0 (0,1"); }), ParseErrc::MalformedToken);
    EXPECT_EQ(code_of([] { parse_unitary("1 1 0 1"); }), ParseErrc::NotUnitary);
}

TEST(ParseUnitary, RejectsPerturbedUnitaries) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<std::size_t> pick(0, 15);
    for (int trial = 0; trial < 50; ++trial) {
        CMatrix u = qnc::testing::random_unitary(4, rng);
        u(pick(rng) / 4, pick(rng) % 4) += Complex(1e-3, -2e-3);
        std::string text;
        for (const auto &x : u.entries()) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "(%.17g,%.17g) ", x.real(), x.imag());
            text += buf;
        }
        EXPECT_EQ(code_of([&] { parse_unitary(text); }), ParseErrc::NotUnitary);
    }
}

TEST(ParseState, Ghz3) {
    const Ket s = parse_state("0.7071067811865476 0 0 0 0 0 0 0.7071067811865476");
    ASSERT_EQ(s.dim(), 8U);
    EXPECT_NEAR(s[0].real(), 1 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(s[7].real(), 1 / std::sqrt(2.0), 1e-15);
}

TEST(ParseState, SmallStates) {
    EXPECT_EQ(parse_state("1 0")[0], Complex(1, 0));
    const Ket k = parse_state("0.6 (0,0.8)");
    EXPECT_NEAR(k.norm(), 1.0, 1e-15);
    EXPECT_EQ(k[1], Complex(0, 0.8));
}

TEST(ParseState, Errors) {
    EXPECT_EQ(code_of([] { parse_state("1 0 0"); }), ParseErrc::BadLength);
    EXPECT_EQ(code_of([] { parse_state("1 1"); }), ParseErrc::NotNormalized);
    EXPECT_EQ(code_of([] { parse_state("1 x"); }), ParseErrc::MalformedToken);
}

TEST(ParsePermutation, ValidAndInvalid) {
    EXPECT_EQ(parse_permutation("0 1 2 3").images, (std::vector<std::size_t>{0, 1, 2, 3}));
    const Permutation swap = parse_permutation("0 2 1 3");
    const CMatrix expected(4, {1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1});
    EXPECT_EQ(swap.to_matrix(), expected);
    EXPECT_EQ(code_of([] { parse_permutation("1 0 2"); }), ParseErrc::NotPowerOfTwo);
    EXPECT_EQ(code_of([] { parse_permutation("0 0 1 2"); }), ParseErrc::InvalidPermutation);
    EXPECT_EQ(code_of([] { parse_permutation("0 1 2 4"); }), ParseErrc::InvalidPermutation);
}

TEST(ParsePermutation, MatrixIsUnitaryZeroOne) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::size_t> img(8);
        std::iota(img.begin(), img.end(), 0);
        std::shuffle(img.begin(), img.end(), rng);
        std::string text;
        for (auto i : img) {
            text += std::to_string(i) + " ";
        }
        const CMatrix m = parse_permutation(text).to_matrix();
        EXPECT_TRUE(is_unitary(m, 1e-12));
        for (const auto &x : m.entries()) {
            EXPECT_TRUE(x == Complex(0) || x == Complex(1));
        }
    }
}

TEST(ParseTopology, LineAndErrors) {
    const Topology line = parse_topology("5\n0 1\n1 2\n2 3\n3 4\n");
    EXPECT_EQ(line.n_phys(), 5U);
    EXPECT_EQ(line.edges().size(), 4U);
    EXPECT_EQ(line.dist(0, 4), 4U);

    const Topology two = parse_topology("2\n0 1\n1 0\n");
    EXPECT_EQ(two.edges().size(), 1U);

    EXPECT_EQ(code_of([] { parse_topology("4\n0 1\n2 3\n"); }), ParseErrc::Disconnected);
    EXPECT_EQ(code_of([] { parse_topology("3\n0 5\n"); }), ParseErrc::OutOfRange);
    EXPECT_EQ(code_of([] { parse_topology("3\n0 1 2\n"); }), ParseErrc::Syntax);
}

TEST(ParseMapping, Basics) {
    EXPECT_EQ(parse_mapping("0 1 2").log_to_phys, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(parse_mapping("2 0 1").log_to_phys[0], 2U);
    EXPECT_EQ(code_of([] { parse_mapping("0 0 1"); }), ParseErrc::DuplicateIndex);
    // range is checked against a topology at use
    EXPECT_THROW(parse_mapping("0 7").validate(3), std::out_of_range);
}

TEST(ParseQasm, BellCircuit) {
    const Circuit c = parse_qasm(R"(OPENQASM 2.0;
include "qelib1.inc";
qreg q[2];
creg c[2];
h q[0];
cx q[0],q[1];
)");
    ASSERT_EQ(c.size(), 2U);
    EXPECT_EQ(c.n_qubits(), 2U);
    EXPECT_EQ(c.n_clbits(), 2U);
    EXPECT_EQ(c.gates()[0], Gate::h(0));
    EXPECT_EQ(c.gates()[1], Gate::cx(0, 1));
}

TEST(ParseQasm, NormalizesSingleQubitGates) {
    const Circuit c = parse_qasm(R"(OPENQASM 2.0;
include "qelib1.inc";
qreg r[1];
creg m[1];
u1(pi/4) r[0];
u2(0, -pi) r[0];  // trailing comment
x r[0];
barrier r;
measure r[0] -> m[0];
)");
    ASSERT_EQ(c.size(), 5U);
    EXPECT_EQ(c.gates()[0], Gate::u3(0, 0, 0, std::numbers::pi / 4));
    EXPECT_EQ(c.gates()[1], Gate::u3(0, std::numbers::pi / 2, 0, -std::numbers::pi));
    EXPECT_EQ(c.gates()[2], Gate::x(0));
    EXPECT_EQ(c.gates()[3].kind, GateKind::Barrier);
    EXPECT_EQ(c.gates()[4], Gate::measure(0, 0));
}

TEST(ParseQasm, Errors) {
    const std::string head = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\n";
    try {
        parse_qasm(head + "ccx q[0],q[1],q[2];\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.code(), ParseErrc::UnsupportedGate);
        EXPECT_EQ(e.line(), 4U);
    }
    EXPECT_EQ(code_of([&] { parse_qasm(head + "qreg r[2];\n"); }), ParseErrc::MultipleRegisters);
    try {
        parse_qasm(head + "h q[0];\n\ncx q[0] q[1];\n");
        FAIL();
    } catch (const ParseError &e) {
        EXPECT_EQ(e.code(), ParseErrc::Syntax);
        EXPECT_EQ(e.line(), 6U);
    }
    EXPECT_EQ(code_of([&] { parse_qasm(head + "u3(1,2) q[0];\n"); }), ParseErrc::Syntax);
    EXPECT_EQ(code_of([&] { parse_qasm(head + "h q[9];\n"); }), ParseErrc::OutOfRange);
    EXPECT_EQ(code_of([&] { parse_qasm("qreg q[1];\n"); }), ParseErrc::Syntax);
}

TEST(EmitQasm, FixedFormat) {
    EXPECT_EQ(emit_qasm(Circuit(1)), "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\n");
    Circuit c(2);
    c.add(Gate::cx(0, 1));
    EXPECT_EQ(emit_qasm(c),
              "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncx q[0],q[1];\n");
    Circuit d(1);
    d.add(Gate::u3(0, std::numbers::pi, 0, -0.1));
    EXPECT_NE(emit_qasm(d).find("u3(3.1415926535897931,0,-0.10000000000000001) q[0];"),
              std::string::npos);
}

TEST(EmitQasm, RoundTripProperty) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        Circuit c = qnc::testing::random_circuit(4, 40, rng);
        Circuit with_extras(4, 2);
        with_extras.append(c.gates());
        with_extras.add(Gate::barrier({0, 2, 3}));
        with_extras.add(Gate::measure(3, 1));
        const Circuit back = parse_qasm(emit_qasm(with_extras));
        // %.17g round-trips doubles exactly
        EXPECT_EQ(back, with_extras);
    }
}
