#include "qnc/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "qnc/formats.hpp"
#include "qnc/pipeline.hpp"

namespace qnc {

namespace {

struct CliArgs {
    std::string unitary;
    std::string state;
    std::string perm;
    std::string qasm_in;
    std::string topology;
    std::string mapping;
    std::string encoding = "gray";
    std::string timing_config;
    std::string out;
    bool no_optimize = false;
    bool verify = false;
    bool measure = false;
};

std::string fmt(const char *spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

void print_counts(std::ostream &os, const char *label, const GateCounts &c) {
    os << label << "u3=" << c.u3 << " cx=" << c.cx << " total=" << c.total << '\n';
}

int compile_and_report(const CliArgs &a, std::ostream &out, std::ostream &err) {
    CompileInput input;
    if (!a.unitary.empty()) {
        input = parse_unitary(read_file(a.unitary));
    } else if (!a.state.empty()) {
        input = parse_state(read_file(a.state));
    } else if (!a.perm.empty()) {
        input = parse_permutation(read_file(a.perm));
    } else {
        input = parse_qasm(read_file(a.qasm_in));
    }

    CompileOptions opts;
    opts.scheme = a.encoding == "natural" ? Scheme::Natural : Scheme::Gray;
    opts.optimize = !a.no_optimize;
    if (!a.topology.empty()) {
        opts.topology = parse_topology(read_file(a.topology));
    }
    if (!a.mapping.empty()) {
        const bool is_file = std::filesystem::is_regular_file(a.mapping);
        opts.mapping = parse_mapping(is_file ? read_file(a.mapping) : a.mapping);
    }
    if (!a.timing_config.empty()) {
        opts.timing = parse_timing_config(read_file(a.timing_config));
    }

    const CompileResult r = compile(input, opts);
    Circuit emitted = r.final_circuit;
    if (a.measure) {
        append_measure_all(emitted, r.layout);
    }
    const std::string qasm = emit_qasm(emitted);

    std::ostream *report = &err;
    if (a.out.empty()) {
        out << qasm;
    } else {
        std::ofstream f(a.out, std::ios::binary);
        if (!f || !(f << qasm) || !f.flush()) {
            err << "error: cannot write '" << a.out << "'\n";
            return 1;
        }
        report = &out;
    }

    std::ostream &rep = *report;
    rep << "qubits: logical=" << r.n_logical << " physical=" << r.final_circuit.n_qubits()
        << '\n';
    print_counts(rep, "gates before optimization: ", r.before);
    print_counts(rep, "gates after optimization:  ", r.after);
    rep << "estimated execution time: " << fmt("%.1f", r.estimated_ns) << " ns\n";
    rep << "coherence: ";
    if (r.verdict.pass) {
        rep << "PASS";
    } else {
        rep << "WARN (exceeds coherence time by factor " << fmt("%.3f", r.verdict.ratio)
            << ")";
    }
    rep << '\n';
    if (a.verify) {
        const Verification v = verify(input, r);
        rep << "reconstruction error: " << fmt("%.3e", v.reconstruction_error) << '\n';
        rep << "success rate: " << fmt("%.12f", v.success_rate) << '\n';
    }
    return 0;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"qnc: compile unitaries, states, permutations or OpenQASM-2.0 circuits "
                 "into routed OpenQASM-2.0 netlists"};
    app.name("qnc");
    CliArgs a;

    auto *in_unitary = app.add_option("--unitary", a.unitary, "Unitary matrix file");
    auto *in_state = app.add_option("--state", a.state, "Target state vector file");
    auto *in_perm = app.add_option("--perm", a.perm, "Permutation file (single-line notation)");
    auto *in_qasm = app.add_option("--qasm-in", a.qasm_in, "OpenQASM-2.0 input circuit");
    in_unitary->excludes(in_state, in_perm, in_qasm);
    in_state->excludes(in_unitary, in_perm, in_qasm);
    in_perm->excludes(in_unitary, in_state, in_qasm);
    in_qasm->excludes(in_unitary, in_state, in_perm);

    auto *topo = app.add_option("--topology", a.topology, "Machine topology file");
    app.add_option("--mapping", a.mapping, "Initial layout: \"p0 p1 ...\" or a file")
        ->needs(topo);
    app.add_option("--encoding", a.encoding, "Basis ordering")
        ->check(CLI::IsMember({"natural", "gray"}));
    app.add_flag("--no-optimize", a.no_optimize, "Skip gate coalescing");
    app.add_option("--timing-config", a.timing_config, "key=value timing model file");
    app.add_flag("--verify", a.verify, "Check the output with the statevector simulator");
    app.add_option("--out", a.out, "Output QASM file (default: stdout)");
    app.add_flag("--measure", a.measure, "Append measurement of every logical qubit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err);
    }
    if (a.unitary.empty() && a.state.empty() && a.perm.empty() && a.qasm_in.empty()) {
        err << "error: one of --unitary, --state, --perm, --qasm-in is required\n";
        return 2;
    }

    try {
        return compile_and_report(a, out, err);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace qnc
