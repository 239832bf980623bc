#pragma once

#include <optional>
#include <string>
#include <vector>

#include "egr/hypergraph.hpp"

namespace egr {

/// Parameter bundle for the bound functions: n = (k-2)p + m with
/// 1 <= m <= k-2, p = floor((n-1)/(k-2)), t = floor((k-1)/2).
struct ExtremalParams {
    int n = 0, k = 0, r = 0;
    int p = 0, m = 0, t = 0;

    static ExtremalParams make(int n, int k, int r);

    /// Regime of the exact hypergraph theorem (r >= 3, k >= r+4).
    bool theoremRegime() const { return r >= 3 && k >= r + 4; }
};

/// floor((n-1)/(k-2)) * C(k-1,2) + C(m,2); k >= 3, n >= 1.
long long eval_f_graph(int n, int k);

/// p*C(k-1,r) + (m-1 if m <= r else C(m,r)); r >= 3, k >= r+3, n >= 1.
long long eval_fr(int n, int k, int r);

/// p*C(k-1,r) + (C(m,2) if m <= r+1 else C(m,r)); same domain as eval_fr.
long long eval_fr_plus(int n, int k, int r);

/// max{C(s,2), C(s,r)} + (n-s)*max{k-s, C(k-s,r-1)}; 2 <= k-s <= t, n >= s.
long long eval_ur(int n, int k, int r, int s);

/// Vertex classes A = [0,a), C = [a,k-a), B = [k-a,n); all A-B pairs plus a
/// clique on A ∪ C. Requires k >= 4, n >= k, 1 <= a < k/2.
Graph build_hnka(int n, int k, int a);

/// Explicit layout for the clique-tree builders. Blocks are listed in the
/// order the running-intersection condition is checked. For the cut-edge
/// construction, treeEdges/blowups use 1-based component indices; for the
/// mixed construction, blockIsHyper selects the clique kind per block.
struct ConstructionSpec {
    enum class Kind { C41, C42, C63, Hnka };

    struct Blowup {
        int alpha = 0, alphaPrime = 0;
        std::vector<Vertex> a, aPrime;
    };

    Kind kind = Kind::C41;
    std::vector<std::vector<Vertex>> blocks;
    std::vector<std::pair<int, int>> treeEdges;
    std::vector<Blowup> blowups;
    std::vector<bool> blockIsHyper;
    int hn = 0, hk = 0, ha = 0;
};

// Line format: "KIND C41|C42|C63|HNKA", "BLOCK v1 ... v_{k-1}",
// "TREE a a'", "BLOWUP a:v1,v2,... a':v1,...", "CHOICE i graph|hyper",
// "HNKA n k a". '#' starts a comment.
ConstructionSpec parse_construction_spec(const std::string& text);
std::string serialize(const ConstructionSpec& spec);

/// Default chain layout: block i shares its lowest vertex with the highest
/// vertex of block i-1; the m-block (when present) comes last.
std::vector<std::vector<Vertex>> chain_layout(int n, int k, bool mBlock);

/// Union of complete r-graphs on p blocks of size k-1 plus one of size m,
/// pairwise overlapping in a tree pattern. Requires m >= r+1 or the m = 1
/// degenerate shape; 2 <= m <= r is rejected in favor of the cut-edge
/// construction. Edge count = p*C(k-1,r) + C(m,r).
Hypergraph build_construction41(int n, int k, int r,
                                const std::optional<std::vector<std::vector<Vertex>>>& layout = std::nullopt);

/// Builds the default spec used by build_construction42: chained blocks in
/// one component, m-1 singleton components, star tree, blow-up sets taken
/// from the first block.
ConstructionSpec default_c42_spec(int n, int k, int r);

/// p complete (k-1)-blocks in a forest-of-cliques layout plus m-1 cut
/// r-edges blown up along a tree on the m components. Requires m <= r.
/// Edge count = p*C(k-1,r) + m - 1.
Hypergraph build_construction42(int n, int k, int r,
                                const std::optional<ConstructionSpec>& spec = std::nullopt);

/// Per-block choice maximizing the edge count (r-clique when it beats the
/// graph clique), used as the default for build_construction63.
std::vector<bool> maximal_c63_choices(int n, int k, int r);

/// Mixed (2,r) clique tree: each block carries either a graph clique or a
/// complete r-graph. Hyper blocks need size >= r. With maximal choices the
/// size equals eval_fr_plus(n,k,r).
MixedHypergraph build_construction63(int n, int k, int r,
                                     const std::optional<std::vector<bool>>& choices = std::nullopt,
                                     const std::optional<std::vector<std::vector<Vertex>>>& layout = std::nullopt);

enum class Verdict { Construction41, Construction42, Neither };

/// Structural evidence reassembling a recognized instance: the complete
/// blocks, the components of their union, the cut edges, and the component
/// signature phi(f) of each cut edge.
struct RecognitionResult {
    Verdict verdict = Verdict::Neither;
    std::vector<std::vector<Vertex>> blocks;
    std::vector<std::vector<Vertex>> components;
    std::vector<Edge> cutEdges;
    std::vector<std::vector<int>> phi;
};

/// Decides whether h is (up to relabeling) an instance of one of the two
/// extremal constructions for parameter k. The m = 1 shape, common to both,
/// reports Construction42 with no cut edges. At m = r+1 the recognizer also
/// accepts the transversal shape where the cut edges form K_{r+1}^{(r)}
/// across the components, reported as Construction41.
RecognitionResult recognize_extremal(const Hypergraph& h, int k);

} // namespace egr
