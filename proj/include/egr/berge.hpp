#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "egr/hypergraph.hpp"

namespace egr {

/// A Berge cycle or path: distinct base vertices v_1..v_l (cycle) or
/// v_1..v_{l+1} (path) plus distinct witness edges e_1..e_l with
/// {v_i, v_{i+1}} ⊆ e_i (indices mod l for a cycle).
struct BergeWitness {
    enum class Kind { cycle, path };
    Kind kind = Kind::cycle;
    std::vector<Vertex> baseVertices;
    std::vector<Edge> witnessEdges;

    int length() const { return static_cast<int>(witnessEdges.size()); }
};

struct VerifyResult {
    bool ok = false;
    std::string reason; // empty when ok
    explicit operator bool() const { return ok; }
};

/// Check all BergeWitness invariants against h. A witness edge absent from h
/// is a dangling reference and throws.
VerifyResult verify_witness(const Hypergraph& h, const BergeWitness& w);

struct SearchBudget {
    long long maxNodes = 0; // 0 = unlimited
    double maxSeconds = 0;  // 0 = unlimited
    bool force = false;     // lift the exact-mode instance caps
};

// Exact search refuses larger instances unless a budget or force is given.
inline constexpr int kExactMaxN = 24;
inline constexpr int kExactMaxEdges = 64;

struct BergeSearchResult {
    int length = 0; // 0 when no structure of the requested kind exists
    std::optional<BergeWitness> witness;
    bool exact = true; // false: budget exhausted, length is a lower bound
    long long nodes = 0;
};

/// Maximum-length Berge cycle or path, exhaustive DFS over base-vertex
/// sequences with an incrementally maintained pair-edge matching. Among
/// maximum witnesses the lexicographically smallest base sequence is
/// returned. A Berge cycle needs length >= 2; a path of length 0 is a
/// single vertex.
BergeSearchResult longest_berge(const Hypergraph& h, BergeWitness::Kind kind,
                                const SearchBudget& budget = {});

struct CycleDecision {
    bool found = false;
    bool exact = true; // false: budget exhausted before a definite answer
    long long nodes = 0;
};

/// Does h contain a Berge cycle of length >= k? Early-exits on success.
CycleDecision exists_berge_cycle_geq(const Hypergraph& h, int k,
                                     const SearchBudget& budget = {});

/// Same question restricted to cycles whose witness uses h.edges[anchor].
CycleDecision exists_berge_cycle_geq_through(const Hypergraph& h, int k, int anchor,
                                             const SearchBudget& budget = {});

/// For each candidate c: does base + c stay free of Berge cycles of length
/// >= k? One anchored decision per candidate over a shared edge catalog;
/// equivalent to !exists_berge_cycle_geq_through(base + c, k, index of c).
/// If requiredEdge >= 0 the decision only counts cycles whose edge system
/// uses that base edge (valid when base minus it is already known clean).
std::vector<char> addable_edges(const Hypergraph& base, int k, const std::vector<Edge>& cands,
                                int requiredEdge = -1);

struct GraphCycleResult {
    int length = 0; // 0 when acyclic
    std::vector<Vertex> cycle;
    bool exact = true;
    long long nodes = 0;
};

/// Exact longest cycle of a graph (lex-min witness), same engine as
/// longest_berge through the 2-uniform view.
GraphCycleResult longest_graph_cycle(const Graph& g, const SearchBudget& budget = {});

/// Raised by lift_to_berge when the residual matching is infeasible; carries
/// a pair set S with |S| >= |B_S|.
class HallViolation : public std::runtime_error {
public:
    explicit HallViolation(std::vector<VertexPair> pairs);
    const std::vector<VertexPair>& violatingPairs() const { return pairs_; }

private:
    std::vector<VertexPair> pairs_;
};

/// Lift a cycle of the graph A ∪ ∂₂B to a Berge cycle on the same base
/// vertices: A-edges map to their representative hyperedges from sdrpPairs,
/// B-edges to distinct hyperedges of m via bipartite matching.
BergeWitness lift_to_berge(const MixedHypergraph& m,
                           const std::map<VertexPair, Edge>& sdrpPairs,
                           const std::vector<Vertex>& graphCycle);

// One line "CYCLE l" or "PATH l", base vertices space-separated, then one
// edge per line.
std::string serialize(const BergeWitness& w);
BergeWitness parse_witness(const std::string& text);

} // namespace egr
