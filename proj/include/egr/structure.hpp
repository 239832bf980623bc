#pragma once

#include <stdexcept>
#include <vector>

#include "egr/hypergraph.hpp"

namespace egr {

struct BlockDecomposition {
    std::vector<std::vector<Vertex>> blocks;         // sorted by smallest vertex
    std::vector<std::vector<VertexPair>> blockEdges; // parallel to blocks
    std::vector<Vertex> cutVertices;
};

/// The unique decomposition into 2-connected blocks and bridge edges.
/// Isolated vertices belong to no block.
BlockDecomposition blocks(const Graph& g);

struct CoreResult {
    std::vector<Vertex> surviving;
    std::vector<std::pair<Vertex, int>> removalOrder; // (vertex, degree at removal)
};

/// (alpha+1)-core: iteratively remove vertices of degree <= alpha (smallest
/// id first; the result is order-independent).
CoreResult core(const Graph& g, int alpha);

/// Thrown when an operation requires a C_{>=k}-free graph; carries a witness.
class LongCycleError : public std::runtime_error {
public:
    explicit LongCycleError(std::vector<Vertex> cycle)
        : std::runtime_error("contains cycle of length " + std::to_string(cycle.size())),
          cycle_(std::move(cycle)) {}
    const std::vector<Vertex>& cycle() const { return cycle_; }

private:
    std::vector<Vertex> cycle_;
};

struct KopylovResult {
    bool found = false;
    int s = 0;
    std::vector<Vertex> S;
};

/// Scan s from k-2 down to k-t (t = floor((k-1)/2)) for a (k-s)-disintegration
/// whose survivors fit in s vertices; S is the survivor set padded with the
/// last-removed vertices. Requires g 2-connected, n >= k and no cycle of
/// length >= k; a "none" result on valid input would refute the theorem at
/// this instance and is reported as found = false.
KopylovResult find_kopylov_set(const Graph& g, int k);

struct HamiltonResult {
    bool connected = false;
    bool exceptionShape = false; // K_{n-1} plus one vertex of degree 2
};

/// Spanning-path test between every vertex pair (bitmask DP, n <= 12 unless
/// forced), plus the Lemma 5.6 exception-shape classification.
HamiltonResult is_hamilton_connected(const Graph& g, bool force = false);

enum class ShadowEquality { none, completeHypergraph, completeComplement };

struct ShadowIneqResult {
    bool holds = false;
    ShadowEquality equality = ShadowEquality::none;
    long long lhs = 0;
    long long rhs = 0;
};

/// |H| + |pairs of [w] uncovered by the 2-shadow| <= C(w,2) for w <= r+2 and
/// <= C(w,r) for w >= r+2, with the equality classification of Lemma 5.5.
ShadowIneqResult shadow_inequality_check(const Hypergraph& h, int w);

/// C(x,2) where x >= r-1 solves x(x-1)...(x-r+1)/r! = b (bisection, abs tol
/// 1e-9, near-integers snapped within 1e-7). Returns 0 for b = 0.
double kk_fractional_bound(long long b, int r);

} // namespace egr
