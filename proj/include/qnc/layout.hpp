#pragma once

/**
 * @file layout.hpp
 * Physical-qubit connectivity, logical-to-physical placement and CX routing.
 *
 * Routing keeps the placement fixed. A CX between non-adjacent physical
 * qubits j and l is rewritten through the first hop k on the canonical
 * shortest path with
 *
 *     CX(j,l) = CX(k,l) CX(j,k) CX(k,l) CX(j,k)
 *
 * applied recursively to CX(k,l). The identity returns k to its original
 * value, so no qubit is left displaced after the operation.
 */

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "qnc/circuit.hpp"

namespace qnc {

using Edge = std::pair<std::size_t, std::size_t>;

struct ShortestPaths {
    static constexpr std::size_t kUnreachable = static_cast<std::size_t>(-1);

    /// Hop counts, row-major n x n.
    std::vector<std::size_t> dist;
    /// First vertex after `a` on the canonical shortest path a -> b (b itself
    /// when adjacent, a when a == b). Ties go to the lowest-index neighbour.
    std::vector<std::size_t> next_hop;
    std::size_t n = 0;
};

/// Floyd-Warshall over unit-weight undirected edges. Throws
/// std::invalid_argument if the graph is disconnected or an edge is invalid.
ShortestPaths all_pairs_shortest(std::size_t n, const std::set<Edge> &edges);

class Topology {
  public:
    Topology() = default;
    /// Edges are normalized to (min, max) and deduplicated.
    Topology(std::size_t n_phys, const std::vector<Edge> &edges);

    static Topology line(std::size_t n);
    static Topology grid(std::size_t rows, std::size_t cols);
    static Topology complete(std::size_t n);

    [[nodiscard]] std::size_t n_phys() const { return n_; }
    [[nodiscard]] const std::set<Edge> &edges() const { return edges_; }
    [[nodiscard]] bool adjacent(std::size_t a, std::size_t b) const;
    [[nodiscard]] std::size_t dist(std::size_t a, std::size_t b) const;
    [[nodiscard]] std::size_t next_hop(std::size_t a, std::size_t b) const;
    /// Canonical shortest path, endpoints included.
    [[nodiscard]] std::vector<std::size_t> path(std::size_t a, std::size_t b) const;

  private:
    std::size_t n_ = 0;
    std::set<Edge> edges_;
    ShortestPaths paths_;
};

struct LayoutMap {
    /// log_to_phys[i] = physical qubit holding logical qubit i.
    std::vector<std::size_t> log_to_phys;

    static LayoutMap identity(std::size_t n);

    [[nodiscard]] std::size_t size() const { return log_to_phys.size(); }
    /// Throws unless injective and every image is < n_phys.
    void validate(std::size_t n_phys) const;
};

/// Number of CX gates route_cnot emits for hop distance d: 3 * 2^(d-1) - 2.
std::size_t routed_cnot_count(std::size_t d);

std::vector<Gate> route_cnot(std::size_t control, std::size_t target, const Topology &t);

/// Relabels every gate onto physical qubits and expands non-adjacent CX
/// gates. The result is sized to the whole machine.
Circuit route_circuit(const Circuit &c, const Topology &t, const LayoutMap &m);

} // namespace qnc
