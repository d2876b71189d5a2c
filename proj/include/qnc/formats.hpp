#pragma once

/**
 * @file formats.hpp
 * Text input formats and the OpenQASM-2.0 subset used as the intermediate
 * representation.
 *
 * Matrix and state files are whitespace-separated tokens, each either a real
 * literal ("0.5", "-1e-3") or a bracketed complex pair "(re, im)". Matrices
 * are row-major; basis index bit (n-1-q) belongs to qubit q, i.e. qubit 0 is
 * the most significant bit.
 */

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qnc/circuit.hpp"
#include "qnc/layout.hpp"
#include "qnc/linalg.hpp"

namespace qnc {

enum class ParseErrc {
    MalformedToken,
    NonSquare,
    NotPowerOfTwo,
    NotUnitary,
    BadLength,
    NotNormalized,
    InvalidPermutation,
    OutOfRange,
    Disconnected,
    DuplicateIndex,
    UnsupportedGate,
    Syntax,
    MultipleRegisters,
};

class ParseError : public std::runtime_error {
  public:
    ParseError(ParseErrc code, const std::string &what, std::size_t line = 0);

    [[nodiscard]] ParseErrc code() const { return code_; }
    /// 1-based source line, 0 when not applicable.
    [[nodiscard]] std::size_t line() const { return line_; }

  private:
    ParseErrc code_;
    std::size_t line_;
};

/// Tolerance used to accept parsed unitaries and states.
inline constexpr double kInputTol = 1e-6;

/// Cauchy single-line notation: basis state i is sent to images[i].
struct Permutation {
    std::vector<std::size_t> images;

    [[nodiscard]] std::size_t size() const { return images.size(); }
    /// Column i has its single 1 at row images[i].
    [[nodiscard]] CMatrix to_matrix() const;
};

/// Splits text into complex values. Throws ParseError(MalformedToken).
std::vector<Complex> parse_complex_tokens(std::string_view text);

CMatrix parse_unitary(std::string_view text);
Ket parse_state(std::string_view text);
Permutation parse_permutation(std::string_view text);
Topology parse_topology(std::string_view text);
LayoutMap parse_mapping(std::string_view text);

/// Accepts u1, u2, u3, cx, x, h, barrier, measure over one qreg and at most
/// one creg, normalizing single-qubit gates to U3.
Circuit parse_qasm(std::string_view text);

/// Deterministic emission; angles use 17 significant digits.
std::string emit_qasm(const Circuit &c);

/// Reads a whole file. Throws std::runtime_error on I/O failure.
std::string read_file(const std::string &path);

} // namespace qnc
