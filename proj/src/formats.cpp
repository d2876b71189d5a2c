#include "qnc/formats.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

namespace qnc {

ParseError::ParseError(ParseErrc code, const std::string &what, std::size_t line)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      code_(code), line_(line) {}

CMatrix Permutation::to_matrix() const {
    CMatrix m(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) {
        m(images[i], i) = 1.0;
    }
    return m;
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
    }
    while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
    }
    return s;
}

std::optional<double> to_double(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

std::optional<std::size_t> to_index(std::string_view s) {
    s = trim(s);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        return std::nullopt;
    }
    return v;
}

std::vector<std::string_view> split_ws(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) {
            ++i;
        }
        const std::size_t start = i;
        while (i < text.size() && !is_space(text[i])) {
            ++i;
        }
        if (i > start) {
            out.push_back(text.substr(start, i - start));
        }
    }
    return out;
}

std::vector<std::size_t> parse_indices(std::string_view text, const char *what) {
    std::vector<std::size_t> out;
    for (auto tok : split_ws(text)) {
        auto v = to_index(tok);
        if (!v) {
            throw ParseError(ParseErrc::MalformedToken, std::string(what) +
                                                            ": malformed integer '" +
                                                            std::string(tok) + "'");
        }
        out.push_back(*v);
    }
    return out;
}

} // namespace

std::vector<Complex> parse_complex_tokens(std::string_view text) {
    std::vector<Complex> out;
    std::size_t i = 0;
    while (true) {
        while (i < text.size() && is_space(text[i])) {
            ++i;
        }
        if (i >= text.size()) {
            break;
        }
        if (text[i] == '(') {
            const std::size_t close = text.find(')', i);
            if (close == std::string_view::npos) {
                throw ParseError(ParseErrc::MalformedToken, "unterminated complex value");
            }
            const std::string_view body = text.substr(i + 1, close - i - 1);
            const std::size_t comma = body.find(',');
            if (comma == std::string_view::npos) {
                throw ParseError(ParseErrc::MalformedToken,
                                 "complex value '(" + std::string(body) +
                                     ")' needs the form (re,im)");
            }
            auto re = to_double(body.substr(0, comma));
            auto im = to_double(body.substr(comma + 1));
            if (!re || !im) {
                throw ParseError(ParseErrc::MalformedToken,
                                 "malformed complex value '(" + std::string(body) + ")'");
            }
            out.emplace_back(*re, *im);
            i = close + 1;
        } else {
            const std::size_t start = i;
            while (i < text.size() && !is_space(text[i]) && text[i] != '(') {
                ++i;
            }
            const std::string_view tok = text.substr(start, i - start);
            auto v = to_double(tok);
            if (!v) {
                throw ParseError(ParseErrc::MalformedToken,
                                 "malformed number '" + std::string(tok) + "'");
            }
            out.emplace_back(*v, 0.0);
        }
    }
    return out;
}

CMatrix parse_unitary(std::string_view text) {
    auto values = parse_complex_tokens(text);
    const std::size_t count = values.size();
    auto dim = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(count))));
    if (count == 0 || dim * dim != count) {
        throw ParseError(ParseErrc::NonSquare,
                         "unitary has " + std::to_string(count) +
                             " entries, which is not a perfect square");
    }
    if (dim < 2 || !is_power_of_two(dim)) {
        throw ParseError(ParseErrc::NotPowerOfTwo,
                         "unitary dimension " + std::to_string(dim) +
                             " is not a power of two >= 2");
    }
    CMatrix m(dim, std::move(values));
    if (!is_unitary(m, kInputTol)) {
        throw ParseError(ParseErrc::NotUnitary, "matrix is not unitary");
    }
    return m;
}

Ket parse_state(std::string_view text) {
    auto values = parse_complex_tokens(text);
    if (values.size() < 2 || !is_power_of_two(values.size())) {
        throw ParseError(ParseErrc::BadLength, "state has " + std::to_string(values.size()) +
                                                   " amplitudes; need 2^n with n >= 1");
    }
    Ket k(std::move(values));
    if (std::abs(k.norm() - 1.0) > kInputTol) {
        throw ParseError(ParseErrc::NotNormalized,
                         "state norm is " + std::to_string(k.norm()) + ", expected 1");
    }
    return k;
}

Permutation parse_permutation(std::string_view text) {
    Permutation p{parse_indices(text, "permutation")};
    const std::size_t n = p.size();
    if (n < 2 || !is_power_of_two(n)) {
        throw ParseError(ParseErrc::NotPowerOfTwo, "permutation length " + std::to_string(n) +
                                                       " is not a power of two >= 2");
    }
    std::vector<bool> seen(n, false);
    for (std::size_t img : p.images) {
        if (img >= n) {
            throw ParseError(ParseErrc::InvalidPermutation,
                             "image " + std::to_string(img) + " out of range");
        }
        if (seen[img]) {
            throw ParseError(ParseErrc::InvalidPermutation,
                             "image " + std::to_string(img) + " repeated");
        }
        seen[img] = true;
    }
    return p;
}

Topology parse_topology(std::string_view text) {
    std::optional<std::size_t> n;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto toks = split_ws(line);
        if (toks.empty()) {
            continue;
        }
        std::vector<std::size_t> vals;
        for (auto t : toks) {
            auto v = to_index(t);
            if (!v) {
                throw ParseError(ParseErrc::MalformedToken,
                                 "malformed integer '" + std::string(t) + "'", line_no);
            }
            vals.push_back(*v);
        }
        if (!n) {
            if (vals.size() != 1 || vals[0] == 0) {
                throw ParseError(ParseErrc::Syntax, "first line must be a positive qubit count",
                                 line_no);
            }
            n = vals[0];
            continue;
        }
        if (vals.size() != 2) {
            throw ParseError(ParseErrc::Syntax, "edge line must be 'a b'", line_no);
        }
        if (vals[0] >= *n || vals[1] >= *n || vals[0] == vals[1]) {
            throw ParseError(ParseErrc::OutOfRange,
                             "invalid edge " + std::to_string(vals[0]) + " " +
                                 std::to_string(vals[1]) + " for " + std::to_string(*n) +
                                 " qubits",
                             line_no);
        }
        edges.emplace_back(vals[0], vals[1]);
    }
    if (!n) {
        throw ParseError(ParseErrc::Syntax, "empty topology");
    }
    try {
        return Topology(*n, edges);
    } catch (const std::invalid_argument &e) {
        throw ParseError(ParseErrc::Disconnected, e.what());
    }
}

LayoutMap parse_mapping(std::string_view text) {
    LayoutMap m{parse_indices(text, "mapping")};
    if (m.log_to_phys.empty()) {
        throw ParseError(ParseErrc::BadLength, "empty mapping");
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (m.log_to_phys[i] == m.log_to_phys[j]) {
                throw ParseError(ParseErrc::DuplicateIndex,
                                 "physical qubit " + std::to_string(m.log_to_phys[i]) +
                                     " assigned to logical " + std::to_string(j) + " and " +
                                     std::to_string(i));
            }
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// OpenQASM 2.0
// ---------------------------------------------------------------------------

namespace {

/// Recursive-descent evaluator for gate parameter expressions.
class ExprParser {
  public:
    ExprParser(std::string_view s, std::size_t line) : s_(s), line_(line) {}

    double parse() {
        const double v = sum();
        skip();
        if (i_ != s_.size()) {
            fail("unexpected '" + std::string(s_.substr(i_)) + "'");
        }
        return v;
    }

  private:
    [[noreturn]] void fail(const std::string &msg) const {
        throw ParseError(ParseErrc::Syntax, "bad parameter expression: " + msg, line_);
    }

    void skip() {
        while (i_ < s_.size() && is_space(s_[i_])) {
            ++i_;
        }
    }

    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    double sum() {
        double v = product();
        while (true) {
            if (eat('+')) {
                v += product();
            } else if (eat('-')) {
                v -= product();
            } else {
                return v;
            }
        }
    }

    double product() {
        double v = unary();
        while (true) {
            if (eat('*')) {
                v *= unary();
            } else if (eat('/')) {
                v /= unary();
            } else {
                return v;
            }
        }
    }

    double unary() {
        if (eat('-')) {
            return -unary();
        }
        if (eat('+')) {
            return unary();
        }
        const double base = primary();
        if (eat('^')) {
            return std::pow(base, unary());
        }
        return base;
    }

    double primary() {
        skip();
        if (eat('(')) {
            const double v = sum();
            if (!eat(')')) {
                fail("missing ')'");
            }
            return v;
        }
        if (i_ >= s_.size()) {
            fail("unexpected end");
        }
        if (std::isalpha(static_cast<unsigned char>(s_[i_])) != 0) {
            const std::size_t start = i_;
            while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_])) != 0) {
                ++i_;
            }
            const std::string name(s_.substr(start, i_ - start));
            if (name == "pi") {
                return std::numbers::pi;
            }
            if (!eat('(')) {
                fail("unknown identifier '" + name + "'");
            }
            const double arg = sum();
            if (!eat(')')) {
                fail("missing ')'");
            }
            if (name == "sin") return std::sin(arg);
            if (name == "cos") return std::cos(arg);
            if (name == "tan") return std::tan(arg);
            if (name == "exp") return std::exp(arg);
            if (name == "ln") return std::log(arg);
            if (name == "sqrt") return std::sqrt(arg);
            fail("unknown function '" + name + "'");
        }
        const char *begin = s_.data() + i_;
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(begin, s_.data() + s_.size(), v);
        if (ec != std::errc{}) {
            fail("expected a number");
        }
        i_ += static_cast<std::size_t>(ptr - begin);
        return v;
    }

    std::string_view s_;
    std::size_t line_;
    std::size_t i_ = 0;
};

struct Register {
    std::string name;
    std::size_t size = 0;
};

struct Statement {
    std::string_view text;
    std::size_t line = 0;
};

std::vector<Statement> split_statements(std::string_view src) {
    std::vector<Statement> out;
    std::string_view::size_type i = 0;
    std::size_t line = 1;
    std::size_t start = 0;
    std::size_t start_line = 1;
    bool in_stmt = false;
    while (i < src.size()) {
        const char c = src[i];
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            while (i < src.size() && src[i] != '\n') {
                ++i;
            }
            continue;
        }
        if (c == '\n') {
            ++line;
        }
        if (!in_stmt && !is_space(c)) {
            in_stmt = true;
            start = i;
            start_line = line;
        }
        if (c == ';') {
            out.push_back({src.substr(start, i - start), start_line});
            in_stmt = false;
        }
        ++i;
    }
    if (in_stmt) {
        throw ParseError(ParseErrc::Syntax, "missing ';'", start_line);
    }
    return out;
}

/// Statement text with comments removed.
std::string strip_comments(std::string_view s) {
    std::string out;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] == '/' && i + 1 < s.size() && s[i + 1] == '/') {
            while (i < s.size() && s[i] != '\n') {
                ++i;
            }
            continue;
        }
        out.push_back(s[i++]);
    }
    return out;
}

std::string_view take_identifier(std::string_view &s) {
    s = trim(s);
    std::size_t i = 0;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) != 0 || s[i] == '_')) {
        ++i;
    }
    auto id = s.substr(0, i);
    s.remove_prefix(i);
    return id;
}

Register parse_register_decl(std::string_view rest, std::size_t line) {
    auto name = take_identifier(rest);
    rest = trim(rest);
    if (name.empty() || rest.size() < 3 || rest.front() != '[' || rest.back() != ']') {
        throw ParseError(ParseErrc::Syntax, "register declaration must be 'name[size]'", line);
    }
    auto size = to_index(rest.substr(1, rest.size() - 2));
    if (!size || *size == 0) {
        throw ParseError(ParseErrc::Syntax, "bad register size", line);
    }
    return {std::string(name), *size};
}

/// Resolves "name[i]" to {i} or "name" to every index of the register.
std::vector<std::size_t> parse_operand(std::string_view arg, const Register &reg,
                                       std::size_t line) {
    arg = trim(arg);
    auto name = take_identifier(arg);
    arg = trim(arg);
    if (name != reg.name) {
        throw ParseError(ParseErrc::Syntax,
                         "unknown register '" + std::string(name) + "'", line);
    }
    if (arg.empty()) {
        std::vector<std::size_t> all(reg.size);
        for (std::size_t i = 0; i < reg.size; ++i) {
            all[i] = i;
        }
        return all;
    }
    if (arg.size() < 3 || arg.front() != '[' || arg.back() != ']') {
        throw ParseError(ParseErrc::Syntax, "malformed operand", line);
    }
    auto idx = to_index(arg.substr(1, arg.size() - 2));
    if (!idx || *idx >= reg.size) {
        throw ParseError(ParseErrc::OutOfRange, "index out of range for register '" +
                                                    reg.name + "'",
                         line);
    }
    return {*idx};
}

std::vector<std::string_view> split_commas(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ',') {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

} // namespace

Circuit parse_qasm(std::string_view text) {
    const auto statements = split_statements(text);
    std::optional<Register> qreg;
    std::optional<Register> creg;
    std::vector<std::pair<Gate, std::size_t>> pending;
    bool seen_header = false;

    for (const auto &st : statements) {
        const std::string body = strip_comments(st.text);
        std::string_view rest = trim(body);
        const std::size_t line = st.line;
        if (rest.empty()) {
            continue;
        }
        const std::string_view head = take_identifier(rest);
        rest = trim(rest);

        if (head == "OPENQASM") {
            if (seen_header || rest != "2.0") {
                throw ParseError(ParseErrc::Syntax, "expected 'OPENQASM 2.0' header", line);
            }
            seen_header = true;
            continue;
        }
        if (!seen_header) {
            throw ParseError(ParseErrc::Syntax, "missing 'OPENQASM 2.0' header", line);
        }
        if (head == "include") {
            if (rest.size() < 2 || rest.front() != '"' || rest.back() != '"') {
                throw ParseError(ParseErrc::Syntax, "include needs a quoted file name", line);
            }
            continue;
        }
        if (head == "qreg" || head == "creg") {
            auto &slot = head == "qreg" ? qreg : creg;
            if (slot) {
                throw ParseError(ParseErrc::MultipleRegisters,
                                 "only one " + std::string(head) + " is supported", line);
            }
            slot = parse_register_decl(rest, line);
            continue;
        }
        if (!qreg) {
            throw ParseError(ParseErrc::Syntax, "gate before qreg declaration", line);
        }

        if (head == "measure") {
            const auto arrow = rest.find("->");
            if (arrow == std::string_view::npos || !creg) {
                throw ParseError(ParseErrc::Syntax, "measure needs 'q -> c' and a creg", line);
            }
            auto qs = parse_operand(rest.substr(0, arrow), *qreg, line);
            auto cs = parse_operand(rest.substr(arrow + 2), *creg, line);
            if (qs.size() != cs.size()) {
                throw ParseError(ParseErrc::Syntax, "measure operand sizes differ", line);
            }
            for (std::size_t i = 0; i < qs.size(); ++i) {
                pending.emplace_back(Gate::measure(qs[i], cs[i]), line);
            }
            continue;
        }
        if (head == "barrier") {
            std::vector<std::size_t> qs;
            for (auto arg : split_commas(rest)) {
                for (auto q : parse_operand(arg, *qreg, line)) {
                    qs.push_back(q);
                }
            }
            pending.emplace_back(Gate::barrier(std::move(qs)), line);
            continue;
        }

        std::vector<double> params;
        if (!rest.empty() && rest.front() == '(') {
            std::size_t depth = 0;
            std::size_t match = std::string_view::npos;
            for (std::size_t i = 0; i < rest.size(); ++i) {
                if (rest[i] == '(') {
                    ++depth;
                } else if (rest[i] == ')' && --depth == 0) {
                    match = i;
                    break;
                }
            }
            if (match == std::string_view::npos) {
                throw ParseError(ParseErrc::Syntax, "unbalanced parentheses", line);
            }
            for (auto p : split_commas(rest.substr(1, match - 1))) {
                params.push_back(ExprParser(p, line).parse());
            }
            rest = trim(rest.substr(match + 1));
        }

        std::size_t want_params = 0;
        std::size_t want_args = 1;
        if (head == "u3") {
            want_params = 3;
        } else if (head == "u2") {
            want_params = 2;
        } else if (head == "u1") {
            want_params = 1;
        } else if (head == "cx") {
            want_args = 2;
        } else if (head == "x" || head == "h") {
            // no parameters
        } else {
            throw ParseError(ParseErrc::UnsupportedGate,
                             "unsupported gate '" + std::string(head) + "'", line);
        }
        if (params.size() != want_params) {
            throw ParseError(ParseErrc::Syntax,
                             std::string(head) + " takes " + std::to_string(want_params) +
                                 " parameter(s)",
                             line);
        }
        const auto args = split_commas(rest);
        if (args.size() != want_args) {
            throw ParseError(ParseErrc::Syntax,
                             std::string(head) + " takes " + std::to_string(want_args) +
                                 " operand(s)",
                             line);
        }
        if (head == "cx") {
            auto c = parse_operand(args[0], *qreg, line);
            auto t = parse_operand(args[1], *qreg, line);
            if (c.size() != 1 || t.size() != 1) {
                throw ParseError(ParseErrc::Syntax, "cx needs indexed operands", line);
            }
            if (c[0] == t[0]) {
                throw ParseError(ParseErrc::Syntax, "cx control equals target", line);
            }
            pending.emplace_back(Gate::cx(c[0], t[0]), line);
            continue;
        }
        for (auto q : parse_operand(args[0], *qreg, line)) {
            Gate g;
            if (head == "u3") {
                g = Gate::u3(q, params[0], params[1], params[2]);
            } else if (head == "u2") {
                g = Gate::u3(q, std::numbers::pi / 2, params[0], params[1]);
            } else if (head == "u1") {
                g = Gate::u3(q, 0.0, 0.0, params[0]);
            } else if (head == "x") {
                g = Gate::x(q);
            } else {
                g = Gate::h(q);
            }
            pending.emplace_back(std::move(g), line);
        }
    }

    if (!seen_header) {
        throw ParseError(ParseErrc::Syntax, "missing 'OPENQASM 2.0' header");
    }
    if (!qreg) {
        throw ParseError(ParseErrc::Syntax, "no qreg declared");
    }
    Circuit c(qreg->size, creg ? creg->size : 0);
    for (auto &[g, line] : pending) {
        try {
            c.add(std::move(g));
        } catch (const std::exception &e) {
            throw ParseError(ParseErrc::Syntax, e.what(), line);
        }
    }
    return c;
}

namespace {

std::string fmt_angle(double v) {
    char buf[32];
    // adding +0.0 turns -0 into 0
    std::snprintf(buf, sizeof buf, "%.17g", v + 0.0);
    return buf;
}

} // namespace

std::string emit_qasm(const Circuit &c) {
    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "include \"qelib1.inc\";\n";
    os << "qreg q[" << c.n_qubits() << "];\n";
    if (c.n_clbits() > 0) {
        os << "creg c[" << c.n_clbits() << "];\n";
    }
    for (const Gate &g : c.gates()) {
        switch (g.kind) {
        case GateKind::U3:
            os << "u3(" << fmt_angle(g.angles[0]) << ',' << fmt_angle(g.angles[1]) << ','
               << fmt_angle(g.angles[2]) << ") q[" << g.qubits[0] << "];\n";
            break;
        case GateKind::CX:
            os << "cx q[" << g.qubits[0] << "],q[" << g.qubits[1] << "];\n";
            break;
        case GateKind::Measure:
            os << "measure q[" << g.qubits[0] << "] -> c[" << g.cbits[0] << "];\n";
            break;
        case GateKind::Barrier:
            os << "barrier ";
            for (std::size_t i = 0; i < g.qubits.size(); ++i) {
                os << (i ? "," : "") << "q[" << g.qubits[i] << ']';
            }
            os << ";\n";
            break;
        }
    }
    return os.str();
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) {
        throw std::runtime_error("error reading '" + path + "'");
    }
    return ss.str();
}

} // namespace qnc
