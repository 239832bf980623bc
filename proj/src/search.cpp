#include "egr/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "egr/binomial.hpp"
#include "egr/canonical.hpp"
#include "egr/extremal.hpp"
#include "json.hpp"

namespace egr {

namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// ---------------------------------------------------------------- graph case

// Longest simple path between every vertex pair, in vertices, via the
// per-start subset DP. n <= 9.
void pathTable(int n, const std::vector<uint16_t>& adj, int maxlen[9][9]) {
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) maxlen[u][v] = 0;
    std::vector<uint16_t> ends(static_cast<size_t>(1) << n);
    for (int u = 0; u < n; ++u) {
        std::fill(ends.begin(), ends.end(), 0);
        ends[1u << u] = static_cast<uint16_t>(1u << u);
        for (uint32_t mask = 1u << u; mask < (1u << n); ++mask) {
            uint16_t e = ends[mask];
            if (!e || !(mask & (1u << u))) continue;
            int len = __builtin_popcount(mask);
            for (uint16_t bits = e; bits;) {
                int w = __builtin_ctz(bits);
                bits &= bits - 1;
                if (len > maxlen[u][w]) maxlen[u][w] = len;
                uint16_t ext = adj[w] & static_cast<uint16_t>(~mask);
                while (ext) {
                    int x = __builtin_ctz(ext);
                    ext &= ext - 1;
                    ends[mask | (1u << x)] |= static_cast<uint16_t>(1u << x);
                }
            }
        }
    }
}

// Levelwise breadth-first enumeration of isomorphism classes of C_{>=k}-free
// graphs: level m holds one canonical representative per class with m edges,
// each carrying the list of still-addable edges. A class whose size plus
// addable count cannot reach the incumbent is dropped (counting bound; the
// addable set only shrinks under edge addition).
struct GraphClass {
    std::vector<int> edges;   // indices into the universe
    std::vector<int> addable; // universe indices still individually addable
};

Graph chainCliqueGraph(int n, int k) {
    std::vector<VertexPair> es;
    for (const auto& b : chain_layout(n, k, /*mBlock=*/true))
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = i + 1; j < b.size(); ++j)
                es.push_back({std::min(b[i], b[j]), std::max(b[i], b[j])});
    return Graph::make(n, std::move(es));
}

// ------------------------------------------------------------ r-graph case


// --------------------------------------------------------------- mixed case

Hypergraph asTwoUniform(int n, const std::vector<VertexPair>& pairs) {
    std::vector<Edge> es;
    es.reserve(pairs.size());
    for (auto [u, v] : pairs) es.push_back({u, v});
    return Hypergraph::make(n, 2, std::move(es));
}

// Mixed (2,r) families: items index pairs first, then r-sets. The shadow is
// the union of pair edges and the 2-shadows of the r-sets; addability asks
// that no shadow cycle of length >= k appears, decided per fresh shadow pair
// by an anchored search in the 2-uniform view.
struct MixedUniverse {
    int n, k, r;
    std::vector<VertexPair> pairs;
    std::vector<Edge> hypers;

    int P() const { return static_cast<int>(pairs.size()); }

    std::vector<VertexPair> itemPairs(int item) const {
        if (item < P()) return {pairs[item]};
        const Edge& e = hypers[item - P()];
        std::vector<VertexPair> ps;
        for (size_t i = 0; i < e.size(); ++i)
            for (size_t j = i + 1; j < e.size(); ++j) ps.push_back({e[i], e[j]});
        return ps;
    }

    bool sperner(int a, int b) const {
        // compatible unless one is a pair inside the other hyperedge
        int pi = -1, hi = -1;
        if (a < P()) pi = a; else hi = a;
        if (b < P()) pi = b; else hi = b;
        if (pi < 0 || hi < 0) return true;
        const Edge& e = hypers[hi - P()];
        auto [u, v] = pairs[pi];
        return !(std::binary_search(e.begin(), e.end(), u) &&
                 std::binary_search(e.begin(), e.end(), v));
    }

    std::set<VertexPair> shadowOf(const std::vector<int>& items) const {
        std::set<VertexPair> sh;
        for (int it : items)
            for (auto q : itemPairs(it)) sh.insert(q);
        return sh;
    }

    bool addable(const std::set<VertexPair>& shadow, int item) const {
        std::vector<VertexPair> fresh;
        for (auto q : itemPairs(item))
            if (!shadow.count(q)) fresh.push_back(q);
        if (fresh.empty()) return true;
        std::vector<VertexPair> all(shadow.begin(), shadow.end());
        all.insert(all.end(), fresh.begin(), fresh.end());
        Hypergraph sh = asTwoUniform(n, all);
        for (auto q : fresh) {
            Edge qe = {q.first, q.second};
            int anchor = static_cast<int>(
                std::lower_bound(sh.edges.begin(), sh.edges.end(), qe) - sh.edges.begin());
            if (exists_berge_cycle_geq_through(sh, k, anchor, {0, 0, true}).found) return false;
        }
        return true;
    }

    MixedHypergraph materialize(const std::vector<int>& items) const {
        std::vector<VertexPair> ps;
        std::vector<Edge> hs;
        for (int it : items) {
            if (it < P()) ps.push_back(pairs[it]);
            else hs.push_back(hypers[it - P()]);
        }
        return MixedHypergraph::make(n, r, std::move(ps), std::move(hs));
    }
};

std::vector<Edge> allRSets(int n, int r) {
    std::vector<Edge> out;
    for (long long rank = 0; rank < binom(n, r); ++rank) out.push_back(edgeUnrank(rank, r));
    return out;
}

// ---------------------------------------------------- isomorphism-class sets
// Per-level duplicate detection for the class BFS. Full canonical forms are
// expensive on the early positions where nothing discriminates, so classes
// are bucketed by a color-refinement invariant and equality inside a bucket
// is settled by an explicit backtracking isomorphism test (duplicates are
// the common case and admit a mapping quickly; distinct systems in the same
// bucket are rare and die on the first edge mismatch).

using FamilyMasks = std::vector<std::vector<uint32_t>>; // per family, edge bit masks

uint64_t mix64(uint64_t a, uint64_t b) {
    return a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
}

// Three rounds of vertex color refinement over the incidence structure.
std::vector<uint64_t> refinedColors(int n, const FamilyMasks& fams) {
    std::vector<uint64_t> col(n, 1);
    std::vector<uint64_t> esig, acc;
    std::vector<std::vector<uint64_t>> around(n);
    for (int round = 0; round < 3; ++round) {
        for (auto& a : around) a.clear();
        for (size_t f = 0; f < fams.size(); ++f)
            for (uint32_t m : fams[f]) {
                esig.clear();
                for (uint32_t b = m; b;) {
                    int v = std::countr_zero(b);
                    b &= b - 1;
                    esig.push_back(col[v]);
                }
                std::sort(esig.begin(), esig.end());
                uint64_t h = mix64(0xabcd, f + 1);
                for (uint64_t c : esig) h = mix64(h, c);
                for (uint32_t b = m; b;) {
                    int v = std::countr_zero(b);
                    b &= b - 1;
                    around[v].push_back(h);
                }
            }
        for (int v = 0; v < n; ++v) {
            std::sort(around[v].begin(), around[v].end());
            uint64_t h = col[v];
            for (uint64_t c : around[v]) h = mix64(h, c);
            col[v] = h;
        }
    }
    return col;
}

struct RepSystem {
    FamilyMasks fams;
    std::vector<uint64_t> col;
};

// Color-respecting vertex bijection test; edges are checked the moment all
// their vertices are mapped, so mismatching branches die early.
bool isomorphicSystems(int n, const RepSystem& a, const RepSystem& b) {
    std::vector<std::vector<uint32_t>> bSets(b.fams.size());
    for (size_t f = 0; f < b.fams.size(); ++f) {
        bSets[f] = b.fams[f];
        std::sort(bSets[f].begin(), bSets[f].end());
    }
    // map vertices rare colors first so branching stays narrow
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::map<uint64_t, int> freq;
    for (uint64_t c : a.col) ++freq[c];
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        auto kx = std::pair(freq[a.col[x]], a.col[x]);
        auto ky = std::pair(freq[a.col[y]], a.col[y]);
        return kx != ky ? kx < ky : x < y;
    });
    // per a-edge, how many vertices remain unmapped
    struct ERec {
        int family;
        uint32_t mask;
        int remaining;
    };
    std::vector<ERec> aEdges;
    std::vector<std::vector<int>> incident(n);
    for (size_t f = 0; f < a.fams.size(); ++f)
        for (uint32_t m : a.fams[f]) {
            int idx = static_cast<int>(aEdges.size());
            aEdges.push_back({static_cast<int>(f), m, std::popcount(m)});
            for (uint32_t bits = m; bits;) {
                int v = std::countr_zero(bits);
                bits &= bits - 1;
                incident[v].push_back(idx);
            }
        }
    std::vector<int> img(n, -1);
    uint32_t usedB = 0;
    auto dfs = [&](auto&& self, int pos) -> bool {
        if (pos == n) return true;
        int v = order[pos];
        for (int w = 0; w < n; ++w) {
            if ((usedB >> w & 1) || b.col[w] != a.col[v]) continue;
            img[v] = w;
            usedB |= uint32_t{1} << w;
            for (int ei : incident[v]) --aEdges[ei].remaining;
            bool ok = true;
            for (int ei : incident[v]) {
                if (aEdges[ei].remaining) continue;
                uint32_t mapped = 0;
                for (uint32_t bits = aEdges[ei].mask; bits;) {
                    int x = std::countr_zero(bits);
                    bits &= bits - 1;
                    mapped |= uint32_t{1} << img[x];
                }
                const auto& set = bSets[aEdges[ei].family];
                if (!std::binary_search(set.begin(), set.end(), mapped)) {
                    ok = false;
                    break;
                }
            }
            if (ok && self(self, pos + 1)) return true;
            for (int ei : incident[v]) ++aEdges[ei].remaining;
            usedB &= ~(uint32_t{1} << w);
            img[v] = -1;
        }
        return false;
    };
    return dfs(dfs, 0);
}

// One-per-class set of small set systems keyed by the refinement invariant.
class IsoSet {
public:
    explicit IsoSet(int n) : n_(n) {}

    // true when the system's class was not seen before (and records it)
    bool insert(FamilyMasks fams) {
        RepSystem rep;
        rep.col = refinedColors(n_, fams);
        rep.fams = std::move(fams);
        std::vector<uint64_t> key;
        for (const auto& f : rep.fams) key.push_back(f.size());
        std::vector<uint64_t> sorted = rep.col;
        std::sort(sorted.begin(), sorted.end());
        key.insert(key.end(), sorted.begin(), sorted.end());
        std::vector<RepSystem>& bucket = buckets_[std::move(key)];
        for (const RepSystem& other : bucket)
            if (isomorphicSystems(n_, rep, other)) return false;
        bucket.push_back(std::move(rep));
        return true;
    }

private:
    int n_;
    std::map<std::vector<uint64_t>, std::vector<RepSystem>> buckets_;
};

FamilyMasks masksOfEdges(const std::vector<Edge>& es) {
    FamilyMasks fams(1);
    for (const Edge& e : es) {
        uint32_t m = 0;
        for (Vertex v : e) m |= uint32_t{1} << v;
        fams[0].push_back(m);
    }
    return fams;
}

FamilyMasks masksOfItems(const MixedUniverse& uni, const std::vector<int>& items) {
    FamilyMasks fams(2);
    for (int it : items) {
        uint32_t m = 0;
        if (it < uni.P()) {
            m = (uint32_t{1} << uni.pairs[it].first) | (uint32_t{1} << uni.pairs[it].second);
            fams[0].push_back(m);
        } else {
            for (Vertex v : uni.hypers[it - uni.P()]) m |= uint32_t{1} << v;
            fams[1].push_back(m);
        }
    }
    return fams;
}

} // namespace

SearchResult exact_eg_graph(int n, int k) {
    if (n < 1 || n > 9) throw std::invalid_argument("exact_eg_graph requires 1 <= n <= 9");
    if (k < 4) throw std::invalid_argument("exact_eg_graph requires k >= 4");

    std::vector<VertexPair> uni;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) uni.push_back({u, v});

    // Incumbent from the clique-chain construction, verified cycle-free.
    long long best;
    if (n < k) {
        best = binom(n, 2);
    } else {
        Graph seedG = chainCliqueGraph(n, k);
        if (longest_graph_cycle(seedG, {}).length >= k)
            throw std::logic_error("seed construction has a long cycle");
        best = seedG.size();
    }

    auto toGraph = [&](const std::vector<int>& es) {
        std::vector<VertexPair> ps;
        for (int e : es) ps.push_back(uni[e]);
        return Graph::make(n, ps);
    };

    SearchResult res;
    GraphClass root;
    root.addable.resize(uni.size());
    std::iota(root.addable.begin(), root.addable.end(), 0);
    std::vector<GraphClass> frontier{root};
    int level = 0;
    std::vector<uint16_t> adj(n);
    int ml[9][9];
    while (!frontier.empty()) {
        std::vector<GraphClass> next;
        std::set<std::vector<uint32_t>> seen;
        for (const GraphClass& g : frontier) {
            ++res.nodesExpanded;
            if (level + static_cast<long long>(g.addable.size()) < best) continue;
            std::fill(adj.begin(), adj.end(), 0);
            for (int e : g.edges) {
                auto [u, v] = uni[e];
                adj[u] |= static_cast<uint16_t>(1u << v);
                adj[v] |= static_cast<uint16_t>(1u << u);
            }
            // additions in one orbit of the twin-swap automorphisms give
            // isomorphic children; expand one representative per orbit
            std::vector<int> twin = twin_classes(SetSystem::of(toGraph(g.edges)));
            std::set<std::pair<int, int>> orbits;
            for (int e : g.addable) {
                auto [u, v] = uni[e];
                if (!orbits.insert({std::min(twin[u], twin[v]), std::max(twin[u], twin[v])})
                         .second)
                    continue;
                GraphClass child;
                child.edges = g.edges;
                child.edges.push_back(e);
                if (!seen.insert(canonical_graph(toGraph(child.edges))).second) continue;
                adj[u] |= static_cast<uint16_t>(1u << v);
                adj[v] |= static_cast<uint16_t>(1u << u);
                pathTable(n, adj, ml);
                for (int c : g.addable) {
                    if (c == e) continue;
                    auto [a, b] = uni[c];
                    if (ml[a][b] <= k - 1) child.addable.push_back(c);
                }
                adj[u] &= static_cast<uint16_t>(~(1u << v));
                adj[v] &= static_cast<uint16_t>(~(1u << u));
                next.push_back(std::move(child));
            }
        }
        if (next.empty()) break;
        frontier = std::move(next);
        ++level;
    }
    if (level < best) throw std::logic_error("search missed the seed construction");
    res.value = level;
    res.exact = true;
    for (const GraphClass& g : frontier) {
        Graph cg = toGraph(g.edges);
        if (longest_graph_cycle(cg, {}).length >= k)
            throw std::logic_error("extremal candidate has a long cycle");
        res.extremalGraphs.push_back(cg);
    }
    return res;
}

SearchResult exact_eg_hypergraph(int n, int k, int r, const SearchBudget& budget) {
    if (r < 3) throw std::invalid_argument("r must be at least 3");
    if (n < 1 || k < 4) throw std::invalid_argument("need n >= 1 and k >= 4");
    if (binom(n, r) > 165 && !budget.force)
        throw std::invalid_argument("instance too large for exhaustive search; use force");

    std::vector<Edge> uni = allRSets(n, r);

    // Incumbent: complete hypergraph below k, else the matching construction.
    long long best = 0;
    if (n < k) {
        best = binom(n, r);
    } else if (k >= r + 3) {
        ExtremalParams e = ExtremalParams::make(n, k, r);
        Hypergraph seed = (e.m == 1 || e.m >= r + 1) ? build_construction41(n, k, r)
                                                     : build_construction42(n, k, r);
        if (exists_berge_cycle_geq(seed, k, {0, 0, true}).found)
            throw std::logic_error("seed construction has a long Berge cycle");
        best = seed.size();
    }

    Clock::time_point t0 = Clock::now();
    SearchResult res;
    res.exact = true;
    struct Rec {
        std::vector<int> edges;
        std::vector<int> addable;
    };
    Rec root;
    root.addable.resize(uni.size());
    std::iota(root.addable.begin(), root.addable.end(), 0);
    std::vector<Rec> frontier{root};
    // classes that reached the incumbent through a forced completion
    std::map<std::vector<uint32_t>, Hypergraph> completions;
    int level = 0;
    while (!frontier.empty()) {
        std::vector<Rec> next;
        IsoSet seen(n);
        for (const Rec& g : frontier) {
            ++res.nodesExpanded;
            if ((budget.maxNodes && res.nodesExpanded > budget.maxNodes) ||
                (budget.maxSeconds > 0 && secondsSince(t0) > budget.maxSeconds)) {
                res.exact = false;
                break;
            }
            if (level + static_cast<long long>(g.addable.size()) < best) continue;
            if (level + static_cast<long long>(g.addable.size()) == best && !g.addable.empty()) {
                // reaching the incumbent needs every remaining addable edge;
                // test that single completion instead of expanding the branch
                std::vector<Edge> es;
                for (int e : g.edges) es.push_back(uni[e]);
                for (int c : g.addable) es.push_back(uni[c]);
                Hypergraph full = Hypergraph::make(n, r, std::move(es));
                if (!exists_berge_cycle_geq(full, k, {0, 0, true}).found)
                    completions.try_emplace(canonical_form(full), std::move(full));
                continue;
            }
            std::vector<Edge> es;
            for (int e : g.edges) es.push_back(uni[e]);
            std::vector<int> twin =
                twin_classes(SetSystem::of(Hypergraph::make(n, r, es)));
            std::set<std::vector<int>> orbits;
            for (int e : g.addable) {
                std::vector<int> key;
                for (Vertex v : uni[e]) key.push_back(twin[v]);
                std::sort(key.begin(), key.end());
                if (!orbits.insert(std::move(key)).second) continue;
                es.push_back(uni[e]);
                if (seen.insert(masksOfEdges(es))) {
                    Hypergraph ch = Hypergraph::make(n, r, es);
                    Rec child;
                    child.edges = g.edges;
                    child.edges.push_back(e);
                    std::vector<Edge> cands;
                    std::vector<int> candIdx;
                    for (int c : g.addable)
                        if (c != e) {
                            cands.push_back(uni[c]);
                            candIdx.push_back(c);
                        }
                    int reqIdx = static_cast<int>(
                        std::lower_bound(ch.edges.begin(), ch.edges.end(), uni[e]) -
                        ch.edges.begin());
                    std::vector<char> ok = addable_edges(ch, k, cands, reqIdx);
                    for (size_t i = 0; i < candIdx.size(); ++i)
                        if (ok[i]) child.addable.push_back(candIdx[i]);
                    next.push_back(std::move(child));
                }
                es.pop_back();
            }
        }
        if (!res.exact || next.empty()) break;
        frontier = std::move(next);
        ++level;
    }

    if (!res.exact) {
        res.value = std::max(best, static_cast<long long>(level));
        return res;
    }
    res.value = completions.empty() ? level : std::max<long long>(level, best);
    if (res.value < best) throw std::logic_error("search missed the seed construction");
    std::map<std::vector<uint32_t>, Hypergraph> extremal;
    if (res.value == best) extremal = std::move(completions);
    if (level == res.value) {
        for (const Rec& g : frontier) {
            std::vector<Edge> es;
            for (int e : g.edges) es.push_back(uni[e]);
            Hypergraph h = Hypergraph::make(n, r, std::move(es));
            extremal.try_emplace(canonical_form(h), std::move(h));
        }
    }
    for (auto& [code, h] : extremal) {
        if (exists_berge_cycle_geq(h, k, {0, 0, true}).found)
            throw std::logic_error("extremal candidate has a long Berge cycle");
        res.extremalHypergraphs.push_back(std::move(h));
    }
    return res;
}

SearchResult exact_mr(int n, int k, int r, const SearchBudget& budget) {
    if (r < 3) throw std::invalid_argument("r must be at least 3");
    if (n < 1 || k < 4) throw std::invalid_argument("need n >= 1 and k >= 4");
    if (binom(n, 2) + binom(n, r) > 165 && !budget.force)
        throw std::invalid_argument("instance too large for exhaustive search; use force");

    MixedUniverse uni;
    uni.n = n;
    uni.k = k;
    uni.r = r;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) uni.pairs.push_back({u, v});
    uni.hypers = allRSets(n, r);
    int total = static_cast<int>(uni.pairs.size() + uni.hypers.size());

    long long best = 0;
    if (n < k) {
        best = std::max(binom(n, r), binom(n, 2));
    } else if (k >= r + 3) {
        MixedHypergraph seed = build_construction63(n, k, r);
        if (longest_graph_cycle(seed.shadowGraph(), {0, 0, true}).length >= k)
            throw std::logic_error("seed construction has a long shadow cycle");
        best = seed.size();
    }

    Clock::time_point t0 = Clock::now();
    SearchResult res;
    res.exact = true;
    struct Rec {
        std::vector<int> items;
        std::vector<int> addable;
    };
    Rec root;
    root.addable.resize(total);
    std::iota(root.addable.begin(), root.addable.end(), 0);
    std::vector<Rec> frontier{root};
    // classes that reached the incumbent through a forced completion
    std::map<std::vector<uint32_t>, MixedHypergraph> completions;
    int level = 0;
    while (!frontier.empty()) {
        std::vector<Rec> next;
        IsoSet seen(n);
        for (const Rec& g : frontier) {
            ++res.nodesExpanded;
            if ((budget.maxNodes && res.nodesExpanded > budget.maxNodes) ||
                (budget.maxSeconds > 0 && secondsSince(t0) > budget.maxSeconds)) {
                res.exact = false;
                break;
            }
            if (level + static_cast<long long>(g.addable.size()) < best) continue;
            if (level + static_cast<long long>(g.addable.size()) == best && !g.addable.empty()) {
                // reaching the incumbent needs every remaining addable item;
                // items are only individually compatible, so the completion
                // may fail the Sperner condition outright
                std::vector<int> items = g.items;
                items.insert(items.end(), g.addable.begin(), g.addable.end());
                try {
                    MixedHypergraph full = uni.materialize(items);
                    if (longest_graph_cycle(full.shadowGraph(), {0, 0, true}).length < k)
                        completions.try_emplace(canonical_form(full), std::move(full));
                } catch (const std::invalid_argument&) {
                }
                continue;
            }
            std::vector<int> twin = twin_classes(SetSystem::of(uni.materialize(g.items)));
            std::set<std::vector<int>> orbits;
            for (int e : g.addable) {
                std::vector<int> key{e < uni.P() ? 0 : 1};
                if (e < uni.P()) {
                    key.push_back(twin[uni.pairs[e].first]);
                    key.push_back(twin[uni.pairs[e].second]);
                } else {
                    for (Vertex v : uni.hypers[e - uni.P()]) key.push_back(twin[v]);
                }
                std::sort(key.begin() + 1, key.end());
                if (!orbits.insert(std::move(key)).second) continue;
                Rec child;
                child.items = g.items;
                child.items.push_back(e);
                if (!seen.insert(masksOfItems(uni, child.items))) continue;
                std::set<VertexPair> shadow = uni.shadowOf(child.items);
                for (int c : g.addable)
                    if (c != e && uni.sperner(e, c) && uni.addable(shadow, c))
                        child.addable.push_back(c);
                next.push_back(std::move(child));
            }
        }
        if (!res.exact || next.empty()) break;
        frontier = std::move(next);
        ++level;
    }

    if (!res.exact) {
        res.value = std::max(best, static_cast<long long>(level));
        return res;
    }
    res.value = completions.empty() ? level : std::max<long long>(level, best);
    if (res.value < best) throw std::logic_error("search missed the seed construction");
    std::map<std::vector<uint32_t>, MixedHypergraph> extremal;
    if (res.value == best) extremal = std::move(completions);
    if (level == res.value)
        for (const Rec& g : frontier) {
            MixedHypergraph m = uni.materialize(g.items);
            extremal.try_emplace(canonical_form(m), std::move(m));
        }
    for (auto& [code, m] : extremal) {
        if (longest_graph_cycle(m.shadowGraph(), {0, 0, true}).length >= k)
            throw std::logic_error("extremal candidate has a long shadow cycle");
        res.extremalMixed.push_back(std::move(m));
    }
    return res;
}

// ------------------------------------------------------------------ hunting

ScanReport random_hunt(int n, int k, int r, long long trials, uint64_t seed,
                       bool mixed, int threads) {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    if (r < 3) throw std::invalid_argument("r must be at least 3");
    long long target = (mixed ? eval_fr_plus(n, k, r) : eval_fr(n, k, r)) + 1;
    long long pairCount = binom(n, 2), hyperCount = binom(n, r);
    long long universe = mixed ? pairCount + hyperCount : hyperCount;
    if (target > universe) throw std::invalid_argument("target size exceeds the edge universe");
    if (threads < 1) threads = 1;

    Clock::time_point t0 = Clock::now();
    std::vector<Violation> violations;
    std::mutex vmut;
    std::atomic<long long> nextTrial{0};

    auto runTrial = [&](long long trial) {
        std::seed_seq sseq{static_cast<uint64_t>(trial), seed, uint64_t{0x9e3779b9}};
        std::mt19937_64 rng(sseq);
        if (!mixed) {
            // uniform edge set of the prescribed size: partial Fisher-Yates
            std::vector<long long> ranks(hyperCount);
            std::iota(ranks.begin(), ranks.end(), 0);
            std::vector<Edge> es;
            for (long long i = 0; i < target; ++i) {
                std::uniform_int_distribution<long long> d(i, hyperCount - 1);
                std::swap(ranks[i], ranks[d(rng)]);
                es.push_back(edgeUnrank(ranks[i], r));
            }
            Hypergraph h = Hypergraph::make(n, r, std::move(es));
            if (!exists_berge_cycle_geq(h, k, {0, 0, true}).found) {
                std::lock_guard<std::mutex> lock(vmut);
                violations.push_back({"theorem33", {n, k, r, trial},
                                      h.size(), target - 1, serialize(h)});
            }
        } else {
            // sequential compatible sampling of a Sperner family
            std::vector<VertexPair> ps;
            std::vector<Edge> hs;
            for (int attempt = 0; attempt < 100; ++attempt) {
                ps.clear();
                hs.clear();
                std::vector<long long> cands(universe);
                std::iota(cands.begin(), cands.end(), 0);
                while (static_cast<long long>(ps.size() + hs.size()) < target && !cands.empty()) {
                    std::uniform_int_distribution<size_t> d(0, cands.size() - 1);
                    long long item = cands[d(rng)];
                    Edge he;
                    VertexPair pe{0, 0};
                    if (item < pairCount) {
                        Edge e2 = edgeUnrank(item, 2);
                        pe = {e2[0], e2[1]};
                        ps.push_back(pe);
                    } else {
                        he = edgeUnrank(item - pairCount, r);
                        hs.push_back(he);
                    }
                    std::vector<long long> keep;
                    for (long long c : cands) {
                        if (c == item) continue;
                        bool ok = true;
                        if (item < pairCount && c >= pairCount) {
                            Edge ce = edgeUnrank(c - pairCount, r);
                            ok = !(std::binary_search(ce.begin(), ce.end(), pe.first) &&
                                   std::binary_search(ce.begin(), ce.end(), pe.second));
                        } else if (item >= pairCount && c < pairCount) {
                            Edge c2 = edgeUnrank(c, 2);
                            ok = !(std::binary_search(he.begin(), he.end(), c2[0]) &&
                                   std::binary_search(he.begin(), he.end(), c2[1]));
                        }
                        if (ok) keep.push_back(c);
                    }
                    cands = std::move(keep);
                }
                if (static_cast<long long>(ps.size() + hs.size()) == target) break;
            }
            if (static_cast<long long>(ps.size() + hs.size()) != target)
                throw std::logic_error("could not assemble a Sperner family of the target size");
            MixedHypergraph m = MixedHypergraph::make(n, r, ps, hs);
            Graph sh = m.shadowGraph();
            Hypergraph sh2 = asTwoUniform(n, sh.edges);
            if (!exists_berge_cycle_geq(sh2, k, {0, 0, true}).found) {
                std::lock_guard<std::mutex> lock(vmut);
                violations.push_back({"theorem64", {n, k, r, trial},
                                      m.size(), target - 1, serialize(m)});
            }
        }
    };

    auto worker = [&] {
        for (;;) {
            long long t = nextTrial.fetch_add(1);
            if (t >= trials) return;
            runTrial(t);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::sort(violations.begin(), violations.end(),
              [](const Violation& a, const Violation& b) { return a.where < b.where; });

    ScanReport rep;
    std::ostringstream g;
    g << (mixed ? "hunt-mixed" : "hunt") << " n=" << n << " k=" << k << " r=" << r
      << " trials=" << trials << " seed=" << seed;
    rep.grid = g.str();
    rep.checked = trials;
    rep.violations = std::move(violations);
    rep.elapsedSeconds = secondsSince(t0);
    return rep;
}

// ------------------------------------------------------------------ scanning

std::vector<std::string> all_scan_claims() {
    return {"lemma71", "eq104", "eq105", "eq106", "eq1060",
            "claim73", "claim74", "claim75", "superadd"};
}

ScanReport inequality_scan(const std::vector<std::string>& claims, const ScanGrid& grid) {
    std::vector<std::string> sel = claims.empty() ? all_scan_claims() : claims;
    std::vector<std::string> knownList = all_scan_claims();
    std::set<std::string> known(knownList.begin(), knownList.end());
    for (const auto& c : sel)
        if (!known.count(c)) throw std::invalid_argument("unknown claim '" + c + "'");
    std::set<std::string> want(sel.begin(), sel.end());

    Clock::time_point t0 = Clock::now();
    ScanReport rep;
    {
        std::ostringstream g;
        g << "scan r=[" << grid.rLo << "," << grid.rHi << "] k<=" << grid.kHi
          << " n<=" << grid.nHi << " claims=";
        for (size_t i = 0; i < sel.size(); ++i) g << (i ? "," : "") << sel[i];
        rep.grid = g.str();
    }
    auto fail = [&](const std::string& claim, std::vector<long long> where, long long lhs,
                    long long rhs, const std::string& detail = "") {
        rep.violations.push_back({claim, std::move(where), lhs, rhs, detail});
    };

    for (int r = grid.rLo; r <= grid.rHi; ++r) {
        int kLo = std::max(grid.kLo, r + 4);
        for (int k = kLo; k <= grid.kHi; ++k) {
            int t = (k - 1) / 2;
            long long ck1r = binom(k - 1, r), cr2 = binom(r, 2);
            int nLo = std::max(grid.nLo, k);

            if (want.count("lemma71"))
                for (int n = nLo; n <= grid.nHi; ++n)
                    for (int s = k - t; s <= k - 2; ++s) {
                        ++rep.checked;
                        long long u = eval_ur(n, k, r, s), f = eval_fr(n, k, r);
                        if (u > f - cr2) fail("lemma71", {r, k, n, s}, u, f - cr2);
                    }

            if (want.count("eq104"))
                for (int s = k - t; s <= k - 2; ++s)
                    for (int n = std::max(nLo, k - 2 + s); n <= grid.nHi; ++n) {
                        ++rep.checked;
                        long long lhs = eval_ur(n, k, r, s);
                        long long rhs = eval_ur(n - k + 2, k, r, s) +
                                        static_cast<long long>(k - 2) *
                                            std::max<long long>(k - s, binom(k - s, r - 1));
                        if (lhs != rhs) fail("eq104", {r, k, n, s}, lhs, rhs);
                    }

            if (want.count("eq105"))
                for (int s = k - t; s <= k - 2; ++s) {
                    ++rep.checked;
                    long long lhs = static_cast<long long>(k - 2) *
                                    std::max<long long>(k - s, binom(k - s, r - 1));
                    if (!(lhs < ck1r - cr2)) fail("eq105", {r, k, s}, lhs, ck1r - cr2);
                }

            if (want.count("eq106")) {
                if (r < t) {
                    ++rep.checked;
                    long long lhs = binom(k - t, r) + (k - 3) * binom(t, r - 1);
                    if (!(lhs < ck1r - cr2)) fail("eq106", {r, k}, lhs, ck1r - cr2);
                } else {
                    ++rep.skipped;
                }
            }

            if (want.count("eq1060")) {
                if (r < t) {
                    ++rep.checked;
                    long long lhs = binom(k - t, r) + (k - 2) * binom(t, r - 1);
                    if (lhs > ck1r) fail("eq1060", {r, k}, lhs, ck1r);
                    if (k <= 16) {
                        // re-verify the disjointness construction behind the
                        // bound: F1, F2, F3 are disjoint subfamilies of F0
                        auto subsets = [&](int lo, int hi, int size) {
                            std::vector<Vertex> base;
                            for (int v = lo; v <= hi; ++v) base.push_back(v);
                            std::vector<Edge> out;
                            std::vector<int> idx(size);
                            if (static_cast<int>(base.size()) < size) return out;
                            std::iota(idx.begin(), idx.end(), 0);
                            int m = static_cast<int>(base.size());
                            while (true) {
                                Edge e(size);
                                for (int i = 0; i < size; ++i) e[i] = base[idx[i]];
                                out.push_back(e);
                                int i = size - 1;
                                while (i >= 0 && idx[i] == m - size + i) --i;
                                if (i < 0) break;
                                ++idx[i];
                                for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
                            }
                            return out;
                        };
                        // vertex set [0, k-2] for [k-1]
                        std::set<Edge> f0set;
                        for (const Edge& e : subsets(0, k - 2, r)) f0set.insert(e);
                        std::set<Edge> f1set;
                        for (const Edge& e : subsets(0, k - t - 1, r)) f1set.insert(e);
                        std::set<Edge> f2set, f3set;
                        for (const Edge& e : subsets(0, t - 1, r - 1))
                            for (int i = k - t; i <= k - 2; ++i) {
                                Edge f = e;
                                f.push_back(i);
                                std::sort(f.begin(), f.end());
                                f2set.insert(f);
                            }
                        for (const Edge& e : subsets(k - t - 1, k - 2, r - 1))
                            for (int j = 0; j <= k - t - 2; ++j) {
                                Edge f = e;
                                if (std::binary_search(f.begin(), f.end(), j)) continue;
                                f.push_back(j);
                                std::sort(f.begin(), f.end());
                                f3set.insert(f);
                            }
                        bool ok = static_cast<long long>(f1set.size()) == binom(k - t, r) &&
                                  static_cast<long long>(f2set.size()) ==
                                      (t - 1) * binom(t, r - 1) &&
                                  static_cast<long long>(f3set.size()) ==
                                      (k - t - 1) * binom(t, r - 1);
                        for (const Edge& e : f1set)
                            ok = ok && f0set.count(e) && !f2set.count(e) && !f3set.count(e);
                        for (const Edge& e : f2set)
                            ok = ok && f0set.count(e) && !f3set.count(e);
                        for (const Edge& e : f3set) ok = ok && f0set.count(e) > 0;
                        ok = ok && f1set.size() + f2set.size() + f3set.size() <= f0set.size();
                        if (!ok) fail("eq1060", {r, k}, 0, 0, "disjointness construction failed");
                    }
                } else {
                    ++rep.skipped;
                }
            }

            if (want.count("claim73"))
                for (int n = nLo; n <= std::min(grid.nHi, 2 * k - 3); ++n) {
                    ++rep.checked;
                    long long u = eval_ur(n, k, r, k - 2), f = eval_fr(n, k, r);
                    if (u > f - cr2) fail("claim73", {r, k, n}, u, f - cr2);
                }

            if (want.count("claim74")) {
                if (r >= t) {
                    for (int n = nLo; n <= std::min(grid.nHi, 2 * k - t - 3); ++n) {
                        ++rep.checked;
                        long long u = eval_ur(n, k, r, k - t);
                        long long rhs = ck1r + (n - k + 1) - cr2;
                        if (!(u < rhs)) fail("claim74", {r, k, n}, u, rhs);
                    }
                } else {
                    ++rep.skipped;
                }
            }

            if (want.count("claim75")) {
                if (r < t) {
                    for (int n = nLo; n <= std::min(grid.nHi, 2 * k - t - 3); ++n) {
                        ++rep.checked;
                        long long u = eval_ur(n, k, r, k - t);
                        if (!(u < ck1r - cr2)) fail("claim75", {r, k, n}, u, ck1r - cr2);
                    }
                } else {
                    ++rep.skipped;
                }
            }

            if (want.count("superadd")) {
                for (int n1 = 1; n1 <= grid.superaddMax; ++n1)
                    for (int n2 = 1; n2 <= grid.superaddMax; ++n2) {
                        ++rep.checked;
                        long long lhs = eval_fr(n1, k, r) + eval_fr(n2, k, r);
                        long long rhs = eval_fr(n1 + n2 - 1, k, r);
                        if (lhs > rhs) fail("superadd", {r, k, n1, n2}, lhs, rhs, "fr");
                        long long lhsP = eval_fr_plus(n1, k, r) + eval_fr_plus(n2, k, r);
                        long long rhsP = eval_fr_plus(n1 + n2 - 1, k, r);
                        if (lhsP > rhsP) fail("superadd", {r, k, n1, n2}, lhsP, rhsP, "fr+");
                        if (n2 == k - 1) {
                            if (lhs != rhs) fail("superadd", {r, k, n1, n2}, lhs, rhs, "fr equality");
                            if (lhsP != rhsP)
                                fail("superadd", {r, k, n1, n2}, lhsP, rhsP, "fr+ equality");
                        }
                    }
            }
        }
    }

    std::sort(rep.violations.begin(), rep.violations.end(),
              [](const Violation& a, const Violation& b) {
                  return std::tie(a.claim, a.where) < std::tie(b.claim, b.where);
              });
    rep.elapsedSeconds = secondsSince(t0);
    return rep;
}

// ------------------------------------------------------------------- reports

std::string report_tsv(const ScanReport& report) {
    std::ostringstream out;
    out << "# berge-report/1\n";
    out << "# grid: " << report.grid << '\n';
    out << "# checked: " << report.checked << '\n';
    out << "# skipped: " << report.skipped << '\n';
    out << "# violations: " << report.violations.size() << '\n';
    out << "claim\twhere\tlhs\trhs\tdetail\n";
    for (const auto& v : report.violations) {
        out << v.claim << '\t';
        for (size_t i = 0; i < v.where.size(); ++i) out << (i ? "," : "") << v.where[i];
        std::string d = v.detail;
        for (char& c : d)
            if (c == '\n' || c == '\t') c = ' ';
        out << '\t' << v.lhs << '\t' << v.rhs << '\t' << d << '\n';
    }
    return out.str();
}

std::string report_json(const ScanReport& report) {
    nlohmann::json j;
    j["schema"] = "berge-report/1";
    j["grid"] = report.grid;
    j["checked"] = report.checked;
    j["skipped"] = report.skipped;
    j["violations"] = nlohmann::json::array();
    for (const auto& v : report.violations) {
        nlohmann::json jv;
        jv["claim"] = v.claim;
        jv["where"] = v.where;
        jv["lhs"] = v.lhs;
        jv["rhs"] = v.rhs;
        jv["detail"] = v.detail;
        j["violations"].push_back(jv);
    }
    return j.dump(2) + "\n";
}

} // namespace egr
