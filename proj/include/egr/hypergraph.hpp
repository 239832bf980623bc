#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace egr {

using Vertex = int;
using Edge = std::vector<Vertex>;           // sorted, distinct vertices
using VertexPair = std::pair<Vertex, Vertex>; // u < v

/// Thrown by the text-format parsers; carries the offending 1-based line.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// An r-uniform hypergraph on vertices 0..n-1. Edges are kept sorted
/// (within each edge and across the edge list) and duplicate-free.
/// Immutable after construction.
struct Hypergraph {
    int n = 0;
    int r = 2;
    std::vector<Edge> edges;

    static Hypergraph make(int n, int r, std::vector<Edge> edges);

    bool hasEdge(const Edge& e) const;
    long long size() const { return static_cast<long long>(edges.size()); }
};

/// A simple graph: unordered pairs, no loops or duplicates.
struct Graph {
    int n = 0;
    std::vector<VertexPair> edges; // sorted, unique, u < v

    static Graph make(int n, std::vector<VertexPair> edges);

    bool hasEdge(Vertex u, Vertex v) const;
    long long size() const { return static_cast<long long>(edges.size()); }
    std::vector<std::vector<Vertex>> adjacency() const;
};

/// A (2,r) mixed hypergraph (A, B) with the Sperner property:
/// no pair edge is a subset of a hyperedge.
struct MixedHypergraph {
    int n = 0;
    int r = 3;
    std::vector<VertexPair> pairEdges; // A
    std::vector<Edge> hyperEdges;      // B

    static MixedHypergraph make(int n, int r, std::vector<VertexPair> pairs,
                                std::vector<Edge> hypers);

    long long size() const {
        return static_cast<long long>(pairEdges.size() + hyperEdges.size());
    }
    /// The graph A ∪ ∂₂B on the same vertex set.
    Graph shadowGraph() const;
};

/// A family of distinct p-element vertex subsets.
struct EdgeSetFamily {
    int p = 0;
    std::vector<Edge> members; // sorted, unique

    long long size() const { return static_cast<long long>(members.size()); }
    bool contains(const Edge& e) const;
};

/// All p-subsets contained in at least one edge of h. Requires 1 <= p <= r.
EdgeSetFamily shadow(const Hypergraph& h, int p);

/// View a shadow back as a p-uniform hypergraph on the same vertex set.
Hypergraph shadowAsHypergraph(const Hypergraph& h, int p);

/// All pairs of [0,w) contained in no edge of h. Requires h.n <= w.
EdgeSetFamily complement_shadow2(const Hypergraph& h, int w);

// Text format. Header "n r", one edge per line, '#' comments.
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph parse_hypergraph(const std::string& text);
std::string serialize(const Hypergraph& h);

// Mixed format. Header "n 2 r", then "P u v" and "H v1 ... vr" lines.
MixedHypergraph parse_mixed(std::istream& in);
MixedHypergraph parse_mixed(const std::string& text);
std::string serialize(const MixedHypergraph& m);

// Colex rank of a sorted r-subset among all r-subsets, and its inverse.
// Gives the bitset position used by the fixed-width edge-set representation.
long long edgeRank(const Edge& e);
Edge edgeUnrank(long long rank, int r);

/// Edge set of an n<=16 hypergraph as a bitset over C(n,r) colex positions.
/// Must agree with the ordered-tuple representation (tested).
std::vector<uint64_t> edgeBitset(const Hypergraph& h);
Hypergraph hypergraphFromBitset(int n, int r, const std::vector<uint64_t>& bits);

} // namespace egr
