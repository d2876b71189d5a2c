#pragma once

/**
 * @file encoding.hpp
 * Orderings of the 2^n computational basis vectors. The order drives which
 * column is processed next and which rows are paired during elimination.
 */

#include <cstddef>
#include <vector>

namespace qnc {

enum class Scheme { Natural, Gray };

/// Reflected binary Gray code: i XOR (i >> 1).
constexpr std::size_t gray_code(std::size_t i) { return i ^ (i >> 1); }

struct BasisOrder {
    std::vector<std::size_t> codes;
    Scheme scheme = Scheme::Gray;

    [[nodiscard]] std::size_t size() const { return codes.size(); }
    /// Inverse lookup: position of basis index `code` in `codes`.
    [[nodiscard]] std::vector<std::size_t> positions() const;
};

inline constexpr std::size_t kMaxEncodingQubits = 12;

/// Throws std::invalid_argument unless 1 <= n <= kMaxEncodingQubits.
BasisOrder basis_order(std::size_t n, Scheme scheme);

} // namespace qnc
