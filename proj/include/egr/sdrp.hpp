#pragma once

#include <string>
#include <vector>

#include "egr/hypergraph.hpp"

namespace egr {

/// A system of distinct representative pairs: distinct pairs {x_i,y_i} with
/// {x_i,y_i} ⊆ f_i for distinct edges f_i, and no pair contained in any edge
/// of the residual H ∖ {f_1..f_s}.
struct Sdrp {
    std::vector<VertexPair> pairs;
    std::vector<Edge> representatives;
    Hypergraph residual;
    /// true when the size is provably maximum (exhaustive route). The local
    /// route used beyond the exact cap only guarantees a valid SDRP.
    bool certifiedMax = true;

    int size() const { return static_cast<int>(pairs.size()); }
};

// Exhaustive extraction handles up to this many edges; larger instances use
// matching-driven local search plus Hall-guided augmentation, uncertified.
inline constexpr int kSdrpExactMaxEdges = 20;

Sdrp max_sdrp(const Hypergraph& h);

struct HallCheckResult {
    bool ok = false;
    std::vector<VertexPair> violating; // S with |S| >= |B_S| when !ok
    explicit operator bool() const { return ok; }
};

enum class HallMethod { automatic, exhaustive, matching };

/// Strict Hall condition of the residual: every nonempty set S of shadow
/// pairs satisfies |S| < |B_S|, B_S the residual edges containing a pair of
/// S. Exhaustive over subsets when the shadow has <= 20 pairs; otherwise via
/// the equivalent per-edge deletion matching criterion (strict Hall holds
/// iff for every residual edge b a pair-saturating matching exists with b
/// removed).
HallCheckResult hall_check(const Hypergraph& residual, HallMethod method = HallMethod::automatic);

// Lines "x y -> v1 ... vr", then "RESIDUAL" followed by hypergraph format.
std::string serialize(const Sdrp& s);

} // namespace egr
