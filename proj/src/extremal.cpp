#include "egr/extremal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "egr/binomial.hpp"

namespace egr {

namespace {

void requireArg(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// All r-subsets of a sorted vertex set, appended to out.
void appendClique(const std::vector<Vertex>& vs, int r, std::vector<Edge>& out) {
    int v = static_cast<int>(vs.size());
    if (v < r) return;
    std::vector<int> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        Edge e(r);
        for (int i = 0; i < r; ++i) e[i] = vs[idx[i]];
        out.push_back(std::move(e));
        int i = r - 1;
        while (i >= 0 && idx[i] == v - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

void appendPairClique(const std::vector<Vertex>& vs, std::vector<VertexPair>& out) {
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            out.push_back({std::min(vs[i], vs[j]), std::max(vs[i], vs[j])});
}

// Checks the running-intersection condition over the given order; exact = true
// demands |prefix ∩ V_i| == 1, otherwise <= 1. Also checks vertex ranges and
// that the union is exactly [0,n).
void checkLayout(const std::vector<std::vector<Vertex>>& blocks, int n, bool exact) {
    std::vector<char> seen(n, 0);
    for (size_t i = 0; i < blocks.size(); ++i) {
        std::set<Vertex> uniq(blocks[i].begin(), blocks[i].end());
        requireArg(uniq.size() == blocks[i].size(), "layout block has repeated vertices");
        for (Vertex v : blocks[i])
            requireArg(v >= 0 && v < n, "layout vertex out of range");
        if (i > 0) {
            int shared = 0;
            for (Vertex v : blocks[i]) shared += seen[v];
            if (exact)
                requireArg(shared == 1, "layout blocks must overlap the prefix in exactly one vertex");
            else
                requireArg(shared <= 1, "layout blocks overlap the prefix in more than one vertex");
        }
        for (Vertex v : blocks[i]) seen[v] = 1;
    }
}

std::vector<Vertex> sortedCopy(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

ExtremalParams ExtremalParams::make(int n, int k, int r) {
    requireArg(n >= 1, "n must be positive");
    requireArg(k >= 3, "k must be at least 3");
    requireArg(r >= 2, "r must be at least 2");
    ExtremalParams e;
    e.n = n;
    e.k = k;
    e.r = r;
    e.p = (n - 1) / (k - 2);
    e.m = n - (k - 2) * e.p;
    e.t = (k - 1) / 2;
    return e;
}

long long eval_f_graph(int n, int k) {
    requireArg(k >= 3, "k must be at least 3");
    requireArg(n >= 1, "n must be positive");
    long long p = (n - 1) / (k - 2);
    long long m = n - (k - 2) * p;
    return p * binom(k - 1, 2) + binom(m, 2);
}

long long eval_fr(int n, int k, int r) {
    requireArg(r >= 3, "r must be at least 3");
    requireArg(k >= r + 3, "k must be at least r+3");
    requireArg(n >= 1, "n must be positive");
    long long p = (n - 1) / (k - 2);
    long long m = n - (k - 2) * p;
    return p * binom(k - 1, r) + (m <= r ? m - 1 : binom(m, r));
}

long long eval_fr_plus(int n, int k, int r) {
    requireArg(r >= 3, "r must be at least 3");
    requireArg(k >= r + 3, "k must be at least r+3");
    requireArg(n >= 1, "n must be positive");
    long long p = (n - 1) / (k - 2);
    long long m = n - (k - 2) * p;
    return p * binom(k - 1, r) + (m <= r + 1 ? binom(m, 2) : binom(m, r));
}

long long eval_ur(int n, int k, int r, int s) {
    requireArg(r >= 2, "r must be at least 2");
    int t = (k - 1) / 2;
    requireArg(k - s >= 2 && k - s <= t, "s must satisfy 2 <= k-s <= (k-1)/2");
    requireArg(n >= s, "n must be at least s");
    return std::max(binom(s, 2), binom(s, r)) +
           static_cast<long long>(n - s) * std::max<long long>(k - s, binom(k - s, r - 1));
}

Graph build_hnka(int n, int k, int a) {
    requireArg(k >= 4, "k must be at least 4");
    requireArg(n >= k, "n must be at least k");
    requireArg(a >= 1 && 2 * a < k, "a must satisfy 1 <= a < k/2");
    std::vector<VertexPair> edges;
    for (int u = 0; u < a; ++u)
        for (int v = k - a; v < n; ++v) edges.push_back({u, v});
    for (int u = 0; u < k - a; ++u)
        for (int v = u + 1; v < k - a; ++v) edges.push_back({u, v});
    return Graph::make(n, std::move(edges));
}

std::vector<std::vector<Vertex>> chain_layout(int n, int k, bool mBlock) {
    ExtremalParams e = ExtremalParams::make(n, k, 3);
    std::vector<std::vector<Vertex>> blocks;
    for (int i = 0; i < e.p; ++i) {
        std::vector<Vertex> b(k - 1);
        std::iota(b.begin(), b.end(), i * (k - 2));
        blocks.push_back(std::move(b));
    }
    if (mBlock && e.m >= 2) {
        std::vector<Vertex> b(e.m);
        std::iota(b.begin(), b.end(), e.p * (k - 2));
        blocks.push_back(std::move(b));
    }
    return blocks;
}

Hypergraph build_construction41(int n, int k, int r,
                                const std::optional<std::vector<std::vector<Vertex>>>& layout) {
    ExtremalParams e = ExtremalParams::make(n, k, r);
    requireArg(r >= 3, "r must be at least 3");
    requireArg(e.m == 1 || e.m >= r + 1,
               "2 <= m <= r: use Construction 4.2 for these parameters");
    std::vector<std::vector<Vertex>> blocks =
        layout ? *layout : chain_layout(n, k, /*mBlock=*/true);
    size_t expect = static_cast<size_t>(e.p) + (e.m >= 2 ? 1 : 0);
    requireArg(blocks.size() == expect, "layout must have p blocks of size k-1 plus the m-block");
    int big = 0, mid = 0;
    for (const auto& b : blocks) {
        int sz = static_cast<int>(b.size());
        if (sz == k - 1) ++big;
        else if (e.m >= 2 && sz == e.m) ++mid;
        else requireArg(false, "layout block has wrong size");
    }
    requireArg(big == e.p && mid == (e.m >= 2 ? 1 : 0),
               "layout needs p blocks of size k-1 and exactly one m-element block");
    checkLayout(blocks, n, /*exact=*/true);
    size_t covered = 0;
    for (const auto& b : blocks) covered += b.size();
    requireArg(static_cast<int>(covered) - static_cast<int>(blocks.size()) + 1 == n,
               "layout does not cover all n vertices");

    std::vector<Edge> edges;
    for (const auto& b : blocks) appendClique(sortedCopy(b), r, edges);
    return Hypergraph::make(n, r, std::move(edges));
}

ConstructionSpec default_c42_spec(int n, int k, int r) {
    ExtremalParams e = ExtremalParams::make(n, k, r);
    ConstructionSpec spec;
    spec.kind = ConstructionSpec::Kind::C42;
    spec.blocks = chain_layout(n, k, /*mBlock=*/false);
    for (int a = 2; a <= e.m; ++a) {
        spec.treeEdges.push_back({1, a});
        ConstructionSpec::Blowup bl;
        bl.alpha = 1;
        bl.alphaPrime = a;
        for (int v = 0; v < r - 1; ++v) bl.a.push_back(v);
        bl.aPrime = {e.p * (k - 2) + (a - 1)};
        spec.blowups.push_back(std::move(bl));
    }
    return spec;
}

Hypergraph build_construction42(int n, int k, int r,
                                const std::optional<ConstructionSpec>& specOpt) {
    ExtremalParams e = ExtremalParams::make(n, k, r);
    requireArg(r >= 3, "r must be at least 3");
    requireArg(e.m <= r, "m >= r+1: use Construction 4.1 for these parameters");
    ConstructionSpec spec = specOpt ? *specOpt : default_c42_spec(n, k, r);

    requireArg(static_cast<int>(spec.blocks.size()) == e.p, "spec must have exactly p blocks");
    for (const auto& b : spec.blocks)
        requireArg(static_cast<int>(b.size()) == k - 1, "spec block has wrong size");
    checkLayout(spec.blocks, n, /*exact=*/false);

    // Components of the block union, then leftover vertices as singletons.
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (const auto& b : spec.blocks) {
        int target = -1;
        for (Vertex v : b)
            if (comp[v] != -1) target = comp[v];
        if (target == -1) target = nc++;
        for (Vertex v : b) comp[v] = target;
    }
    for (int v = 0; v < n; ++v)
        if (comp[v] == -1) comp[v] = nc++;
    requireArg(nc == e.m, "spec blocks must leave exactly m components");
    std::vector<std::vector<Vertex>> comps(nc);
    for (int v = 0; v < n; ++v) comps[comp[v]].push_back(v);

    requireArg(static_cast<int>(spec.treeEdges.size()) == e.m - 1,
               "spec must have exactly m-1 tree edges");
    requireArg(spec.blowups.size() == spec.treeEdges.size(),
               "spec needs one blow-up per tree edge");

    // T must be a tree on [m] and each edge must be blow-up feasible.
    std::vector<int> uf(e.m);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) { while (uf[x] != x) x = uf[x] = uf[uf[x]]; return x; };
    for (auto [a, b] : spec.treeEdges) {
        requireArg(a >= 1 && a <= e.m && b >= 1 && b <= e.m && a != b,
                   "tree edge endpoints must be distinct component indices in [1,m]");
        requireArg(static_cast<int>(comps[a - 1].size() + comps[b - 1].size()) >= r,
                   "tree edge joins components with fewer than r vertices combined");
        int ra = find(a - 1), rb = find(b - 1);
        requireArg(ra != rb, "tree edges form a cycle");
        uf[ra] = rb;
    }

    std::vector<Edge> edges;
    for (const auto& b : spec.blocks) appendClique(sortedCopy(b), r, edges);

    for (size_t i = 0; i < spec.blowups.size(); ++i) {
        const auto& bl = spec.blowups[i];
        requireArg(bl.alpha == spec.treeEdges[i].first && bl.alphaPrime == spec.treeEdges[i].second,
                   "blow-up does not match its tree edge");
        requireArg(!bl.a.empty() && !bl.aPrime.empty(), "blow-up sides must be nonempty");
        requireArg(static_cast<int>(bl.a.size() + bl.aPrime.size()) == r,
                   "blow-up sides must have r vertices combined");
        auto checkSide = [&](const std::vector<Vertex>& side, int alpha) {
            const auto& cv = comps[alpha - 1];
            for (Vertex v : side)
                requireArg(std::find(cv.begin(), cv.end(), v) != cv.end(),
                           "blow-up vertex outside its component");
            if (cv.size() > 1) {
                bool inOne = false;
                for (const auto& b : spec.blocks) {
                    size_t hit = 0;
                    for (Vertex v : side)
                        if (std::find(b.begin(), b.end(), v) != b.end()) ++hit;
                    if (hit == side.size()) { inOne = true; break; }
                }
                requireArg(inOne, "blow-up side must lie within a single block");
            }
        };
        checkSide(bl.a, bl.alpha);
        checkSide(bl.aPrime, bl.alphaPrime);
        Edge f = bl.a;
        f.insert(f.end(), bl.aPrime.begin(), bl.aPrime.end());
        std::sort(f.begin(), f.end());
        edges.push_back(std::move(f));
    }
    return Hypergraph::make(n, r, std::move(edges));
}

std::vector<bool> maximal_c63_choices(int n, int k, int r) {
    auto blocks = chain_layout(n, k, /*mBlock=*/true);
    std::vector<bool> choices;
    for (const auto& b : blocks) {
        int v = static_cast<int>(b.size());
        choices.push_back(binom(v, r) >= binom(v, 2) && v >= r);
    }
    return choices;
}

MixedHypergraph build_construction63(int n, int k, int r,
                                     const std::optional<std::vector<bool>>& choicesOpt,
                                     const std::optional<std::vector<std::vector<Vertex>>>& layout) {
    ExtremalParams e = ExtremalParams::make(n, k, r);
    requireArg(r >= 3, "r must be at least 3");
    std::vector<std::vector<Vertex>> blocks =
        layout ? *layout : chain_layout(n, k, /*mBlock=*/true);
    size_t expect = static_cast<size_t>(e.p) + (e.m >= 2 ? 1 : 0);
    requireArg(blocks.size() == expect, "layout must have p blocks of size k-1 plus the m-block");
    int big = 0, mid = 0;
    for (const auto& b : blocks) {
        int sz = static_cast<int>(b.size());
        if (sz == k - 1) ++big;
        else if (e.m >= 2 && sz == e.m) ++mid;
        else requireArg(false, "layout block has wrong size");
    }
    requireArg(big == e.p && mid == (e.m >= 2 ? 1 : 0),
               "layout needs p blocks of size k-1 and exactly one m-element block");
    checkLayout(blocks, n, /*exact=*/true);

    std::vector<bool> choices = choicesOpt ? *choicesOpt : maximal_c63_choices(n, k, r);
    requireArg(choices.size() == blocks.size(), "one clique-kind choice per block required");

    std::vector<VertexPair> pairs;
    std::vector<Edge> hypers;
    for (size_t i = 0; i < blocks.size(); ++i) {
        auto b = sortedCopy(blocks[i]);
        if (choices[i]) {
            requireArg(static_cast<int>(b.size()) >= r,
                       "block smaller than r cannot carry an r-clique");
            appendClique(b, r, hypers);
        } else {
            appendPairClique(b, pairs);
        }
    }
    return MixedHypergraph::make(n, r, std::move(pairs), std::move(hypers));
}

namespace {

// Maximal W ⊇ e with a complete induced sub-r-graph: grow by any vertex v
// for which every r-subset of W ∪ {v} through v is an edge.
std::vector<Vertex> completeClosure(const Hypergraph& h, const Edge& seed) {
    std::vector<Vertex> w = seed;
    bool grew = true;
    while (grew) {
        grew = false;
        for (Vertex v = 0; v < h.n && !grew; ++v) {
            if (std::find(w.begin(), w.end(), v) != w.end()) continue;
            std::vector<Vertex> rest = w;
            int need = h.r - 1;
            if (static_cast<int>(rest.size()) < need) continue;
            bool all = true;
            std::vector<int> idx(need);
            std::iota(idx.begin(), idx.end(), 0);
            int sz = static_cast<int>(rest.size());
            while (all) {
                Edge cand(need + 1);
                for (int i = 0; i < need; ++i) cand[i] = rest[idx[i]];
                cand[need] = v;
                std::sort(cand.begin(), cand.end());
                if (!h.hasEdge(cand)) all = false;
                int i = need - 1;
                while (i >= 0 && idx[i] == sz - need + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
            }
            if (all) {
                w.push_back(v);
                std::sort(w.begin(), w.end());
                grew = true;
            }
        }
    }
    return w;
}

// Greedy running-intersection check: the given vertex sets can be ordered so
// each meets the union of its predecessors in exactly one vertex (connected
// clique tree), starting anywhere.
bool isCliqueTree(const std::vector<std::vector<Vertex>>& sets) {
    if (sets.size() <= 1) return true;
    size_t q = sets.size();
    std::vector<char> used(q, 0);
    std::set<Vertex> uni(sets[0].begin(), sets[0].end());
    used[0] = 1;
    for (size_t step = 1; step < q; ++step) {
        bool found = false;
        for (size_t i = 0; i < q && !found; ++i) {
            if (used[i]) continue;
            int shared = 0;
            for (Vertex v : sets[i]) shared += uni.count(v);
            if (shared == 1) {
                used[i] = 1;
                uni.insert(sets[i].begin(), sets[i].end());
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

bool edgeInside(const Edge& e, const std::vector<Vertex>& w) {
    for (Vertex v : e)
        if (!std::binary_search(w.begin(), w.end(), v)) return false;
    return true;
}

} // namespace

RecognitionResult recognize_extremal(const Hypergraph& h, int k) {
    RecognitionResult res;
    int r = h.r, n = h.n;
    if (k < r + 3 || n < 1) return res;
    ExtremalParams e = ExtremalParams::make(n, k, r);
    if (h.size() != eval_fr(n, k, r)) return res;

    // Distinct maximal complete closures covering every edge; edges whose
    // closure stays at r vertices are cut-edge candidates.
    std::set<std::vector<Vertex>> closureSet;
    std::vector<Edge> cut;
    for (const Edge& f : h.edges) {
        bool covered = false;
        for (const auto& w : closureSet)
            if (edgeInside(f, w)) { covered = true; break; }
        if (covered) continue;
        auto w = completeClosure(h, f);
        if (static_cast<int>(w.size()) > r)
            closureSet.insert(std::move(w));
        else
            cut.push_back(f);
    }
    std::vector<std::vector<Vertex>> blocks(closureSet.begin(), closureSet.end());

    // Blocks may pairwise share at most one vertex.
    for (size_t i = 0; i < blocks.size(); ++i)
        for (size_t j = i + 1; j < blocks.size(); ++j) {
            int shared = 0;
            for (Vertex v : blocks[i]) shared += std::binary_search(blocks[j].begin(), blocks[j].end(), v);
            if (shared > 1) return res;
        }

    long long blockEdges = 0;
    for (const auto& b : blocks) blockEdges += binom(static_cast<long long>(b.size()), r);
    if (blockEdges + static_cast<long long>(cut.size()) != h.size()) return res;

    res.blocks = blocks;
    res.cutEdges = cut;

    if (e.m >= r + 1) {
        // p blocks of size k-1 plus one of size m, either attached as a
        // clique tree (the literal construction) or, at m = r+1, laid as
        // K_{r+1}^{(r)} across the components with one vertex in each.
        if (!cut.empty()) return res;
        if (static_cast<int>(blocks.size()) != e.p + 1) return res;
        int big = 0, mIdx = -1;
        for (size_t i = 0; i < blocks.size(); ++i) {
            if (static_cast<int>(blocks[i].size()) == k - 1 && (e.m != k - 1 || big < e.p)) ++big;
            else if (static_cast<int>(blocks[i].size()) == e.m && mIdx == -1) mIdx = static_cast<int>(i);
            else return res;
        }
        if (big != e.p || mIdx == -1) return res;
        size_t covered = 0;
        for (const auto& b : blocks) covered += b.size();
        if (static_cast<int>(covered) - static_cast<int>(blocks.size()) + 1 != n) return res;

        if (isCliqueTree(blocks)) {
            res.components = {std::vector<Vertex>(n)};
            std::iota(res.components[0].begin(), res.components[0].end(), 0);
            res.verdict = Verdict::Construction41;
            return res;
        }
        if (e.m != r + 1) return res;

        // Transversal shape: components of the (k-1)-blocks plus singletons,
        // each meeting the m-closure in exactly one vertex.
        const std::vector<Vertex>& mBlock = blocks[mIdx];
        std::vector<std::vector<Vertex>> kBlocks;
        for (size_t i = 0; i < blocks.size(); ++i)
            if (static_cast<int>(i) != mIdx) kBlocks.push_back(blocks[i]);
        std::vector<int> comp(n, -1);
        int nc = 0;
        for (const auto& b : kBlocks) {
            int target = -1;
            for (Vertex v : b)
                if (comp[v] != -1) target = comp[v];
            if (target == -1) target = nc++;
            for (Vertex v : b)
                if (comp[v] == -1) comp[v] = target;
                else if (comp[v] != target)
                    for (int u = 0; u < n; ++u)
                        if (comp[u] == comp[v]) comp[u] = target;
        }
        for (int v = 0; v < n; ++v)
            if (comp[v] == -1) comp[v] = nc++;
        std::set<int> labels(comp.begin(), comp.end());
        if (static_cast<int>(labels.size()) != e.m) return res;
        std::set<int> touched;
        for (Vertex v : mBlock) touched.insert(comp[v]);
        if (static_cast<int>(touched.size()) != e.m) return res;
        for (int lbl : labels) {
            std::vector<std::vector<Vertex>> mine;
            size_t cv = 0, total = 0;
            for (const auto& b : kBlocks)
                if (comp[b[0]] == lbl) { mine.push_back(b); cv += b.size(); }
            for (int v = 0; v < n; ++v) total += comp[v] == lbl;
            if (mine.empty()) {
                if (total != 1) return res;
            } else if (static_cast<int>(cv) - static_cast<int>(mine.size()) + 1 !=
                           static_cast<int>(total) ||
                       !isCliqueTree(mine)) {
                return res;
            }
        }
        std::map<int, std::vector<Vertex>> byComp;
        for (int v = 0; v < n; ++v) byComp[comp[v]].push_back(v);
        for (auto& [lbl, vs] : byComp) res.components.push_back(vs);
        std::vector<Edge> want;
        appendClique(mBlock, r, want);
        res.cutEdges = want;
        for (const Edge& f : want) {
            std::set<int> phi;
            for (Vertex v : f) phi.insert(comp[v]);
            res.phi.push_back(std::vector<int>(phi.begin(), phi.end()));
        }
        res.verdict = Verdict::Construction41;
        return res;
    }

    // From here the (k-1)-blocks must be exactly the p closures.
    if (static_cast<int>(blocks.size()) != e.p) return res;
    for (const auto& b : blocks)
        if (static_cast<int>(b.size()) != k - 1) return res;

    // Components of the block union plus leftover singletons.
    std::vector<int> comp(n, -1);
    int nc = 0;
    {
        std::vector<int> uf(blocks.size());
        std::iota(uf.begin(), uf.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        std::vector<int> owner(n, -1);
        for (size_t i = 0; i < blocks.size(); ++i)
            for (Vertex v : blocks[i]) {
                if (owner[v] != -1) uf[find(owner[v])] = find(static_cast<int>(i));
                owner[v] = static_cast<int>(i);
            }
        std::map<int, int> label;
        for (size_t i = 0; i < blocks.size(); ++i) {
            int rt = find(static_cast<int>(i));
            if (!label.count(rt)) label[rt] = nc++;
        }
        for (size_t i = 0; i < blocks.size(); ++i)
            for (Vertex v : blocks[i]) comp[v] = label[find(static_cast<int>(i))];
        for (int v = 0; v < n; ++v)
            if (comp[v] == -1) comp[v] = nc++;
    }
    if (nc != e.m) return res;
    std::vector<std::vector<Vertex>> comps(nc);
    for (int v = 0; v < n; ++v) comps[comp[v]].push_back(v);
    res.components = comps;

    // Each component's blocks must form a clique tree covering it.
    for (int a = 0; a < nc; ++a) {
        std::vector<std::vector<Vertex>> mine;
        size_t covered = 0;
        for (const auto& b : blocks)
            if (comp[b[0]] == a) {
                mine.push_back(b);
                covered += b.size();
            }
        if (mine.empty()) {
            if (comps[a].size() != 1) return res;
            continue;
        }
        if (static_cast<int>(covered) - static_cast<int>(mine.size()) + 1 !=
            static_cast<int>(comps[a].size()))
            return res;
        if (!isCliqueTree(mine)) return res;
    }

    for (const Edge& f : cut) {
        std::set<int> phi;
        for (Vertex v : f) phi.insert(comp[v]);
        res.phi.push_back(std::vector<int>(phi.begin(), phi.end()));
    }

    if (static_cast<int>(cut.size()) != e.m - 1) return res;

    // Cut edges must sit on a tree over the components, each touching exactly
    // two of them, with each side inside a single block when non-singleton.
    std::vector<int> uf(e.m);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) { while (uf[x] != x) x = uf[x] = uf[uf[x]]; return x; };
    for (size_t i = 0; i < cut.size(); ++i) {
        if (res.phi[i].size() != 2) return res;
        int a = res.phi[i][0], b = res.phi[i][1];
        int ra = find(a), rb = find(b);
        if (ra == rb) return res;
        uf[ra] = rb;
        for (int c : {a, b}) {
            if (comps[c].size() == 1) continue;
            std::vector<Vertex> side;
            for (Vertex v : cut[i])
                if (comp[v] == c) side.push_back(v);
            bool inOne = false;
            for (const auto& blk : blocks) {
                if (comp[blk[0]] != c) continue;
                size_t hit = 0;
                for (Vertex v : side)
                    if (std::binary_search(blk.begin(), blk.end(), v)) ++hit;
                if (hit == side.size()) { inOne = true; break; }
            }
            if (!inOne) return res;
        }
    }
    res.verdict = Verdict::Construction42;
    return res;
}

ConstructionSpec parse_construction_spec(const std::string& text) {
    ConstructionSpec spec;
    std::istringstream in(text);
    std::string line;
    int lineNo = 0;
    bool sawKind = false;
    while (std::getline(in, line)) {
        ++lineNo;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "KIND") {
            std::string k;
            if (!(ls >> k)) throw ParseError(lineNo, "KIND needs a value");
            if (k == "C41") spec.kind = ConstructionSpec::Kind::C41;
            else if (k == "C42") spec.kind = ConstructionSpec::Kind::C42;
            else if (k == "C63") spec.kind = ConstructionSpec::Kind::C63;
            else if (k == "HNKA") spec.kind = ConstructionSpec::Kind::Hnka;
            else throw ParseError(lineNo, "unknown kind '" + k + "'");
            sawKind = true;
        } else if (tag == "BLOCK") {
            std::vector<Vertex> b;
            Vertex v;
            while (ls >> v) b.push_back(v);
            if (b.empty()) throw ParseError(lineNo, "BLOCK needs vertices");
            spec.blocks.push_back(std::move(b));
        } else if (tag == "TREE") {
            int a, b;
            if (!(ls >> a >> b)) throw ParseError(lineNo, "TREE needs two component indices");
            spec.treeEdges.push_back({a, b});
        } else if (tag == "BLOWUP") {
            auto side = [&](const std::string& tok, int& alpha, std::vector<Vertex>& out) {
                auto colon = tok.find(':');
                if (colon == std::string::npos)
                    throw ParseError(lineNo, "BLOWUP side needs 'alpha:v1,v2,...'");
                alpha = std::stoi(tok.substr(0, colon));
                std::istringstream vs(tok.substr(colon + 1));
                std::string piece;
                while (std::getline(vs, piece, ','))
                    if (!piece.empty()) out.push_back(std::stoi(piece));
                if (out.empty()) throw ParseError(lineNo, "BLOWUP side has no vertices");
            };
            std::string t1, t2;
            if (!(ls >> t1 >> t2)) throw ParseError(lineNo, "BLOWUP needs two sides");
            ConstructionSpec::Blowup bl;
            side(t1, bl.alpha, bl.a);
            side(t2, bl.alphaPrime, bl.aPrime);
            spec.blowups.push_back(std::move(bl));
        } else if (tag == "CHOICE") {
            int i;
            std::string kindTok;
            if (!(ls >> i >> kindTok) || (kindTok != "graph" && kindTok != "hyper"))
                throw ParseError(lineNo, "CHOICE needs an index and 'graph' or 'hyper'");
            if (i < 1) throw ParseError(lineNo, "CHOICE index is 1-based");
            if (static_cast<size_t>(i) > spec.blockIsHyper.size())
                spec.blockIsHyper.resize(i, false);
            spec.blockIsHyper[i - 1] = kindTok == "hyper";
        } else if (tag == "HNKA") {
            if (!(ls >> spec.hn >> spec.hk >> spec.ha))
                throw ParseError(lineNo, "HNKA needs n k a");
        } else {
            throw ParseError(lineNo, "unknown directive '" + tag + "'");
        }
    }
    if (!sawKind) throw ParseError(lineNo, "missing KIND line");
    return spec;
}

std::string serialize(const ConstructionSpec& spec) {
    std::ostringstream out;
    switch (spec.kind) {
        case ConstructionSpec::Kind::C41: out << "KIND C41\n"; break;
        case ConstructionSpec::Kind::C42: out << "KIND C42\n"; break;
        case ConstructionSpec::Kind::C63: out << "KIND C63\n"; break;
        case ConstructionSpec::Kind::Hnka: out << "KIND HNKA\n"; break;
    }
    if (spec.kind == ConstructionSpec::Kind::Hnka) {
        out << "HNKA " << spec.hn << ' ' << spec.hk << ' ' << spec.ha << '\n';
        return out.str();
    }
    for (const auto& b : spec.blocks) {
        out << "BLOCK";
        for (Vertex v : b) out << ' ' << v;
        out << '\n';
    }
    for (auto [a, b] : spec.treeEdges) out << "TREE " << a << ' ' << b << '\n';
    auto side = [&](int alpha, const std::vector<Vertex>& vs) {
        out << alpha << ':';
        for (size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
    };
    for (const auto& bl : spec.blowups) {
        out << "BLOWUP ";
        side(bl.alpha, bl.a);
        out << ' ';
        side(bl.alphaPrime, bl.aPrime);
        out << '\n';
    }
    for (size_t i = 0; i < spec.blockIsHyper.size(); ++i)
        out << "CHOICE " << i + 1 << ' ' << (spec.blockIsHyper[i] ? "hyper" : "graph") << '\n';
    return out.str();
}

} // namespace egr
