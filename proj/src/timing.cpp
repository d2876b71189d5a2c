#include "qnc/timing.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "qnc/formats.hpp"

namespace qnc {

void TimingModel::validate() const {
    for (double v : {t_fc, t_gd, t_gf, u3_pulses.fc, u3_pulses.gd, u3_pulses.gf,
                     cx_pulses.fc, cx_pulses.gd, cx_pulses.gf}) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument("timing model values must be finite and >= 0");
        }
    }
    if (!(t_coherence > 0.0) || !std::isfinite(t_coherence)) {
        throw std::invalid_argument("timing model coherence time must be > 0");
    }
}

namespace {

std::string trim_copy(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

} // namespace

TimingModel parse_timing_config(std::string_view text) {
    TimingModel m;
    const std::map<std::string, double *> fields = {
        {"t_fc", &m.t_fc},          {"t_gd", &m.t_gd},          {"t_gf", &m.t_gf},
        {"t_coherence", &m.t_coherence},
        {"u3_fc", &m.u3_pulses.fc}, {"u3_gd", &m.u3_pulses.gd}, {"u3_gf", &m.u3_pulses.gf},
        {"cx_fc", &m.cx_pulses.fc}, {"cx_gd", &m.cx_pulses.gd}, {"cx_gf", &m.cx_pulses.gf},
    };
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
        if (trim_copy(line).empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError(ParseErrc::Syntax, "expected key=value", line_no);
        }
        const std::string key = trim_copy(line.substr(0, eq));
        const std::string value = trim_copy(line.substr(eq + 1));
        auto it = fields.find(key);
        if (it == fields.end()) {
            throw ParseError(ParseErrc::Syntax, "unknown timing key '" + key + "'", line_no);
        }
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size()) {
            throw ParseError(ParseErrc::MalformedToken, "bad number '" + value + "'", line_no);
        }
        *it->second = v;
    }
    m.validate();
    return m;
}

double estimate_time(const Circuit &c, const TimingModel &m) {
    const double u3 = m.duration(m.u3_pulses);
    const double cx = m.duration(m.cx_pulses);
    double total = 0.0;
    for (const Gate &g : c.gates()) {
        if (g.kind == GateKind::U3) {
            total += u3;
        } else if (g.kind == GateKind::CX) {
            total += cx;
        }
    }
    return total;
}

CoherenceVerdict check_coherence(double t_est, const TimingModel &m) {
    if (!(m.t_coherence > 0.0)) {
        throw std::invalid_argument("check_coherence: coherence time must be > 0");
    }
    const double ratio = t_est / m.t_coherence;
    return {t_est <= m.t_coherence, ratio};
}

} // namespace qnc
