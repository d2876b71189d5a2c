#pragma once

/**
 * @file timing.hpp
 * Serial execution-time estimate from per-gate pulse counts.
 *
 * Each U3 and CX is modelled as a fixed number of frame changes (FC),
 * Gaussian-derivative pulses (GD) and Gaussian-flattop pulses (GF). The
 * defaults are placeholders, not calibrated machine data; override them
 * with a key=value config file.
 */

#include <cstddef>
#include <string_view>

#include "qnc/circuit.hpp"

namespace qnc {

struct PulseCounts {
    double fc = 0;
    double gd = 0;
    double gf = 0;
};

struct TimingModel {
    double t_fc = 0.0;   // ns
    double t_gd = 160.0; // ns
    double t_gf = 160.0; // ns
    PulseCounts u3_pulses{2, 2, 0};
    PulseCounts cx_pulses{1, 2, 2};
    double t_coherence = 100000.0; // ns

    [[nodiscard]] double duration(const PulseCounts &p) const {
        return p.fc * t_fc + p.gd * t_gd + p.gf * t_gf;
    }
    /// Throws std::invalid_argument on negative values or non-positive coherence.
    void validate() const;
};

/**
 * Parses key=value lines ('#' starts a comment). Keys: t_fc, t_gd, t_gf,
 * t_coherence, u3_fc, u3_gd, u3_gf, cx_fc, cx_gd, cx_gf. Unset keys keep
 * their defaults.
 */
TimingModel parse_timing_config(std::string_view text);

/// Sum of gate durations in ns; measurements and barriers cost nothing.
double estimate_time(const Circuit &c, const TimingModel &m);

struct CoherenceVerdict {
    bool pass = true;
    /// t_est / t_coherence
    double ratio = 0.0;
};

CoherenceVerdict check_coherence(double t_est, const TimingModel &m);

} // namespace qnc
