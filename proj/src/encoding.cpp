#include "qnc/encoding.hpp"

#include <stdexcept>
#include <string>

namespace qnc {

std::vector<std::size_t> BasisOrder::positions() const {
    std::vector<std::size_t> pos(codes.size());
    for (std::size_t p = 0; p < codes.size(); ++p) {
        pos[codes[p]] = p;
    }
    return pos;
}

BasisOrder basis_order(std::size_t n, Scheme scheme) {
    if (n < 1 || n > kMaxEncodingQubits) {
        throw std::invalid_argument("basis_order: qubit count " + std::to_string(n) +
                                    " outside [1, " +
                                    std::to_string(kMaxEncodingQubits) + "]");
    }
    const std::size_t dim = std::size_t{1} << n;
    BasisOrder order;
    order.scheme = scheme;
    order.codes.resize(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        order.codes[i] = scheme == Scheme::Gray ? gray_code(i) : i;
    }
    return order;
}

} // namespace qnc
