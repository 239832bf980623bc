#include "egr/sdrp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace egr {

namespace {

std::vector<VertexPair> pairsOf(const Edge& e) {
    std::vector<VertexPair> ps;
    for (size_t a = 0; a < e.size(); ++a)
        for (size_t b = a + 1; b < e.size(); ++b) ps.push_back({e[a], e[b]});
    return ps;
}

// Bipartite container graph: candidate pairs vs edges containing them.
struct PairStructure {
    std::vector<VertexPair> pairs;                 // sorted shadow pairs
    std::map<VertexPair, int> pairIdx;
    std::vector<std::vector<int>> pairsOfEdge;     // edge -> pair indices
    std::vector<std::vector<int>> edgesOfPair;     // pair -> edge indices

    explicit PairStructure(const std::vector<Edge>& edges) {
        std::set<VertexPair> ps;
        for (const Edge& e : edges)
            for (VertexPair p : pairsOf(e)) ps.insert(p);
        pairs.assign(ps.begin(), ps.end());
        for (int i = 0; i < static_cast<int>(pairs.size()); ++i) pairIdx[pairs[i]] = i;
        pairsOfEdge.resize(edges.size());
        edgesOfPair.resize(pairs.size());
        for (int e = 0; e < static_cast<int>(edges.size()); ++e)
            for (VertexPair p : pairsOf(edges[e])) {
                int j = pairIdx[p];
                pairsOfEdge[e].push_back(j);
                edgesOfPair[j].push_back(e);
            }
    }
};

// Kuhn matching from `lefts` into right candidates; returns matched count.
// rightOf[l] / leftOf[r] report the matching.
int kuhn(int nLeft, int nRight, const std::vector<std::vector<int>>& adj,
         std::vector<int>& rightOf, std::vector<int>& leftOf) {
    rightOf.assign(nLeft, -1);
    leftOf.assign(nRight, -1);
    std::vector<char> vis(nRight);
    auto aug = [&](auto&& self, int l) -> bool {
        for (int r : adj[l]) {
            if (vis[r]) continue;
            vis[r] = 1;
            if (leftOf[r] == -1 || self(self, leftOf[r])) {
                leftOf[r] = l;
                rightOf[l] = r;
                return true;
            }
        }
        return false;
    };
    int matched = 0;
    for (int l = 0; l < nLeft; ++l) {
        std::fill(vis.begin(), vis.end(), 0);
        if (aug(aug, l)) ++matched;
    }
    return matched;
}

// Exhaustive include/exclude DFS over edges. Excluding an edge forbids all
// its pairs as representatives; a node is viable only while the included
// edges still match into the allowed pairs.
class ExactSolver {
public:
    explicit ExactSolver(const Hypergraph& h) : h_(h), ps_(h.edges), m_((int)h.edges.size()) {
        forbid_.assign(ps_.pairs.size(), 0);
        state_.assign(m_, 0);
    }

    // best assignment: representative edge index -> pair index (or -1)
    std::vector<int> solve() {
        best_ = -1;
        dfs(0, 0);
        return bestAssign_;
    }

private:
    const Hypergraph& h_;
    PairStructure ps_;
    int m_;
    std::vector<int> forbid_; // # excluded edges containing the pair
    std::vector<char> state_; // 0 undecided/included, 1 excluded
    int best_ = -1;
    std::vector<int> bestAssign_;

    bool feasible(int nIncluded, const std::vector<int>& included, std::vector<int>& rightOf) {
        std::vector<std::vector<int>> adj(nIncluded);
        for (int i = 0; i < nIncluded; ++i)
            for (int j : ps_.pairsOfEdge[included[i]])
                if (forbid_[j] == 0) adj[i].push_back(j);
        std::vector<int> leftOf;
        return kuhn(nIncluded, (int)ps_.pairs.size(), adj, rightOf, leftOf) == nIncluded;
    }

    void dfs(int i, int nExcluded) {
        std::vector<int> included;
        for (int e = 0; e < i; ++e)
            if (!state_[e]) included.push_back(e);
        int cnt = static_cast<int>(included.size());
        if (cnt + (m_ - i) <= best_) return;
        std::vector<int> rightOf;
        if (!feasible(cnt, included, rightOf)) return;
        if (i == m_) {
            best_ = cnt;
            bestAssign_.assign(m_, -1);
            for (int k = 0; k < cnt; ++k) bestAssign_[included[k]] = rightOf[k];
            return;
        }
        state_[i] = 0; // include
        dfs(i + 1, nExcluded);
        state_[i] = 1; // exclude
        for (int j : ps_.pairsOfEdge[i]) ++forbid_[j];
        dfs(i + 1, nExcluded + 1);
        for (int j : ps_.pairsOfEdge[i]) --forbid_[j];
        state_[i] = 0;
    }
};

Sdrp assemble(const Hypergraph& h, const std::vector<int>& assign,
              const std::vector<VertexPair>& allPairs, bool certified) {
    Sdrp s;
    std::vector<Edge> residual;
    for (int e = 0; e < static_cast<int>(h.edges.size()); ++e) {
        if (assign[e] >= 0) {
            s.pairs.push_back(allPairs[assign[e]]);
            s.representatives.push_back(h.edges[e]);
        } else {
            residual.push_back(h.edges[e]);
        }
    }
    s.residual = Hypergraph::make(h.n, h.r, std::move(residual));
    s.certifiedMax = certified;
    return s;
}

// Matching-driven local route for instances beyond the exact cap: shrink the
// candidate set until it matches, then re-absorb residual edges whenever the
// strict Hall condition points at a deficient set.
Sdrp localSdrp(const Hypergraph& h) {
    PairStructure ps(h.edges);
    int m = static_cast<int>(h.edges.size());
    std::vector<char> excluded(m, 0);
    std::vector<int> assign(m, -1);

    auto rematch = [&]() -> bool {
        std::vector<int> forbid(ps.pairs.size(), 0);
        for (int e = 0; e < m; ++e)
            if (excluded[e])
                for (int j : ps.pairsOfEdge[e]) ++forbid[j];
        std::vector<int> included;
        for (int e = 0; e < m; ++e)
            if (!excluded[e]) included.push_back(e);
        std::vector<std::vector<int>> adj(included.size());
        for (size_t i = 0; i < included.size(); ++i)
            for (int j : ps.pairsOfEdge[included[i]])
                if (!forbid[j]) adj[i].push_back(j);
        std::vector<int> rightOf, leftOf;
        int got = kuhn((int)included.size(), (int)ps.pairs.size(), adj, rightOf, leftOf);
        assign.assign(m, -1);
        bool full = got == static_cast<int>(included.size());
        for (size_t i = 0; i < included.size(); ++i) {
            if (rightOf[i] >= 0)
                assign[included[i]] = rightOf[i];
            else
                excluded[included[i]] = 1; // shrink and retry
        }
        return full;
    };
    while (!rematch()) {}

    // Hall-guided augmentation (the Lemma 5.2 improvement step).
    for (int round = 0; round < m; ++round) {
        std::vector<Edge> residual;
        std::vector<int> residualIdx;
        for (int e = 0; e < m; ++e)
            if (excluded[e]) {
                residual.push_back(h.edges[e]);
                residualIdx.push_back(e);
            }
        HallCheckResult hc = hall_check(Hypergraph::make(h.n, h.r, residual));
        if (hc.ok) break;
        // B_S: residual edges containing a pair of the violating set
        std::set<VertexPair> sset(hc.violating.begin(), hc.violating.end());
        std::vector<int> bs;
        for (size_t i = 0; i < residual.size(); ++i)
            for (VertexPair p : pairsOf(residual[i]))
                if (sset.count(p)) {
                    bs.push_back(residualIdx[i]);
                    break;
                }
        // match every B_S edge to a distinct violating pair it contains
        std::vector<VertexPair> sp(sset.begin(), sset.end());
        std::vector<std::vector<int>> adj(bs.size());
        for (size_t i = 0; i < bs.size(); ++i)
            for (size_t j = 0; j < sp.size(); ++j) {
                const Edge& e = h.edges[bs[i]];
                if (std::binary_search(e.begin(), e.end(), sp[j].first) &&
                    std::binary_search(e.begin(), e.end(), sp[j].second))
                    adj[i].push_back((int)j);
            }
        std::vector<int> rightOf, leftOf;
        if (kuhn((int)bs.size(), (int)sp.size(), adj, rightOf, leftOf) !=
            static_cast<int>(bs.size()))
            break; // cannot complete the augmentation; accept local result
        for (size_t i = 0; i < bs.size(); ++i) {
            excluded[bs[i]] = 0;
            assign[bs[i]] = ps.pairIdx[sp[rightOf[i]]];
        }
    }
    return assemble(h, assign, ps.pairs, false);
}

} // namespace

Sdrp max_sdrp(const Hypergraph& h) {
    if (h.edges.empty()) {
        Sdrp s;
        s.residual = Hypergraph::make(h.n, h.r, {});
        return s;
    }
    if (static_cast<int>(h.edges.size()) > kSdrpExactMaxEdges) return localSdrp(h);
    PairStructure ps(h.edges);
    // perfect assignment first: every edge represented leaves no residual
    {
        std::vector<int> rightOf, leftOf;
        int got = kuhn((int)h.edges.size(), (int)ps.pairs.size(), ps.pairsOfEdge, rightOf, leftOf);
        if (got == static_cast<int>(h.edges.size()))
            return assemble(h, rightOf, ps.pairs, true);
    }
    ExactSolver solver(h);
    Sdrp s = assemble(h, solver.solve(), ps.pairs, true);
    if (!hall_check(s.residual).ok)
        throw std::logic_error("maximum SDRP residual violates the strict Hall condition");
    return s;
}

HallCheckResult hall_check(const Hypergraph& residual, HallMethod method) {
    HallCheckResult res;
    PairStructure ps(residual.edges);
    int np = static_cast<int>(ps.pairs.size());
    int ne = static_cast<int>(residual.edges.size());
    if (np == 0) {
        res.ok = true;
        return res;
    }
    bool exhaustive = method == HallMethod::exhaustive ||
                      (method == HallMethod::automatic && np <= 20);
    if (exhaustive) {
        if (np > 25) throw std::invalid_argument("exhaustive hall_check limited to 25 pairs");
        int words = (ne + 63) / 64;
        std::vector<std::vector<uint64_t>> mask(np, std::vector<uint64_t>(words, 0));
        for (int j = 0; j < np; ++j)
            for (int e : ps.edgesOfPair[j]) mask[j][e / 64] |= 1ULL << (e % 64);
        for (uint32_t sub = 1; sub < (1u << np); ++sub) {
            std::vector<uint64_t> u(words, 0);
            int sz = 0, cov = 0;
            for (int j = 0; j < np; ++j)
                if ((sub >> j) & 1) {
                    ++sz;
                    for (int w = 0; w < words; ++w) u[w] |= mask[j][w];
                }
            for (int w = 0; w < words; ++w) cov += __builtin_popcountll(u[w]);
            if (sz >= cov) {
                for (int j = 0; j < np; ++j)
                    if ((sub >> j) & 1) res.violating.push_back(ps.pairs[j]);
                res.ok = false;
                return res;
            }
        }
        res.ok = true;
        return res;
    }
    // Per-edge deletion: strict Hall <=> for every edge b, all pairs match
    // into the remaining edges.
    for (int b = 0; b < ne; ++b) {
        std::vector<std::vector<int>> adj(np);
        for (int j = 0; j < np; ++j)
            for (int e : ps.edgesOfPair[j])
                if (e != b) adj[j].push_back(e);
        std::vector<int> rightOf, leftOf;
        std::vector<char> vis(ne);
        auto aug = [&](auto&& self, int l) -> bool {
            for (int r : adj[l]) {
                if (vis[r]) continue;
                vis[r] = 1;
                if (leftOf[r] == -1 || self(self, leftOf[r])) {
                    leftOf[r] = l;
                    rightOf[l] = r;
                    return true;
                }
            }
            return false;
        };
        rightOf.assign(np, -1);
        leftOf.assign(ne, -1);
        for (int j = 0; j < np; ++j) {
            std::fill(vis.begin(), vis.end(), 0);
            if (!aug(aug, j)) {
                // Koenig-style deficient set: j plus pairs alternating-reachable
                res.ok = false;
                for (int j2 = 0; j2 <= j; ++j2) {
                    bool in = j2 == j || (rightOf[j2] >= 0 && vis[rightOf[j2]]);
                    if (in) res.violating.push_back(ps.pairs[j2]);
                }
                return res;
            }
        }
    }
    res.ok = true;
    return res;
}

std::string serialize(const Sdrp& s) {
    std::ostringstream os;
    for (size_t i = 0; i < s.pairs.size(); ++i) {
        os << s.pairs[i].first << " " << s.pairs[i].second << " ->";
        for (Vertex v : s.representatives[i]) os << " " << v;
        os << "\n";
    }
    os << "RESIDUAL\n" << serialize(s.residual);
    return os.str();
}

} // namespace egr
