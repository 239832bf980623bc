#pragma once

#include <cstdint>
#include <vector>

#include "egr/hypergraph.hpp"

namespace egr {

/// A vertex-labeled system of edge families, each edge a vertex bitmask.
/// Graphs are one family of 2-sets, r-graphs one family of r-sets, mixed
/// hypergraphs a pair-family plus an r-set family. Requires n <= 16.
struct SetSystem {
    int n = 0;
    std::vector<std::vector<uint32_t>> families;

    static SetSystem of(const Graph& g);
    static SetSystem of(const Hypergraph& h);
    static SetSystem of(const MixedHypergraph& m);
};

/// Canonical form of a graph (n <= 16): the lexicographically greatest
/// per-position adjacency code sequence over all vertex orderings, found by
/// refinement-pruned permutation search with twin elimination.
std::vector<uint32_t> canonical_graph(const Graph& g);

/// Same value computed by brute force over all n! orderings (n <= 8).
/// Kept as the independent route for the dual-method agreement check.
std::vector<uint32_t> canonical_graph_bruteforce(const Graph& g);

/// Vertex twin classes: u and v share a class when swapping them maps every
/// family onto itself. Returns a union-find root per vertex; any permutation
/// within a class is an automorphism.
std::vector<int> twin_classes(const SetSystem& s);

/// Canonical encoding of a set system (n <= 16), pruned permutation search.
std::vector<uint32_t> canonical_system(const SetSystem& s);

/// Brute-force route over all n! orderings (n <= 8).
std::vector<uint32_t> canonical_system_bruteforce(const SetSystem& s);

inline std::vector<uint32_t> canonical_form(const Hypergraph& h) {
    return canonical_system(SetSystem::of(h));
}
inline std::vector<uint32_t> canonical_form(const MixedHypergraph& m) {
    return canonical_system(SetSystem::of(m));
}

bool isomorphic(const Hypergraph& a, const Hypergraph& b);

} // namespace egr
