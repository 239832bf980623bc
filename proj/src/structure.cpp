#include "egr/structure.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "egr/berge.hpp"
#include "egr/binomial.hpp"

namespace egr {

BlockDecomposition blocks(const Graph& g) {
    int n = g.n;
    auto adj = g.adjacency();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<char> isCut(n, 0);
    std::vector<VertexPair> stack;
    std::vector<std::vector<VertexPair>> rawBlocks;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (int v : adj[u]) {
            if (v == parent) continue;
            if (disc[v] == -1) {
                ++children;
                stack.push_back({std::min(u, v), std::max(u, v)});
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (parent != -1) isCut[u] = 1;
                    std::vector<VertexPair> blk;
                    VertexPair top{std::min(u, v), std::max(u, v)};
                    while (!stack.empty()) {
                        VertexPair e = stack.back();
                        stack.pop_back();
                        blk.push_back(e);
                        if (e == top) break;
                    }
                    rawBlocks.push_back(std::move(blk));
                }
            } else if (disc[v] < disc[u]) {
                stack.push_back({std::min(u, v), std::max(u, v)});
                low[u] = std::min(low[u], disc[v]);
            }
        }
        if (parent == -1 && children > 1) isCut[u] = 1;
    };
    for (int u = 0; u < n; ++u)
        if (disc[u] == -1) dfs(u, -1);

    struct Blk {
        std::vector<Vertex> vs;
        std::vector<VertexPair> es;
    };
    std::vector<Blk> bl;
    for (auto& es : rawBlocks) {
        std::set<Vertex> vs;
        for (auto [a, b] : es) {
            vs.insert(a);
            vs.insert(b);
        }
        std::sort(es.begin(), es.end());
        bl.push_back({{vs.begin(), vs.end()}, std::move(es)});
    }
    std::sort(bl.begin(), bl.end(), [](const Blk& a, const Blk& b) { return a.vs < b.vs; });

    BlockDecomposition d;
    for (auto& b : bl) {
        d.blocks.push_back(std::move(b.vs));
        d.blockEdges.push_back(std::move(b.es));
    }
    for (int u = 0; u < n; ++u)
        if (isCut[u]) d.cutVertices.push_back(u);
    return d;
}

CoreResult core(const Graph& g, int alpha) {
    if (alpha < 0) throw std::invalid_argument("core: alpha must be >= 0");
    int n = g.n;
    auto adj = g.adjacency();
    std::vector<int> deg(n);
    for (int u = 0; u < n; ++u) deg[u] = static_cast<int>(adj[u].size());
    std::vector<char> removed(n, 0);
    CoreResult res;
    while (true) {
        int pick = -1;
        for (int u = 0; u < n; ++u)
            if (!removed[u] && deg[u] <= alpha) {
                pick = u;
                break;
            }
        if (pick == -1) break;
        removed[pick] = 1;
        res.removalOrder.push_back({pick, deg[pick]});
        for (int v : adj[pick])
            if (!removed[v]) --deg[v];
    }
    for (int u = 0; u < n; ++u)
        if (!removed[u]) res.surviving.push_back(u);
    return res;
}

KopylovResult find_kopylov_set(const Graph& g, int k) {
    if (g.n < k) throw std::invalid_argument("n < k");
    BlockDecomposition d = blocks(g);
    bool twoConnected = d.blocks.size() == 1 && d.cutVertices.empty() &&
                        static_cast<int>(d.blocks[0].size()) == g.n && g.n >= 3;
    if (!twoConnected) throw std::invalid_argument("graph is not 2-connected");
    GraphCycleResult lc = longest_graph_cycle(g);
    if (lc.length >= k) throw LongCycleError(lc.cycle);

    int t = (k - 1) / 2;
    for (int s = k - 2; s >= k - t; --s) {
        CoreResult c = core(g, k - s);
        if (static_cast<int>(c.surviving.size()) <= s) {
            KopylovResult r;
            r.found = true;
            r.s = s;
            r.S = c.surviving;
            for (auto it = c.removalOrder.rbegin();
                 it != c.removalOrder.rend() && static_cast<int>(r.S.size()) < s; ++it)
                r.S.push_back(it->first);
            std::sort(r.S.begin(), r.S.end());
            return r;
        }
    }
    return {}; // would contradict Theorem 5.4 on valid input
}

HamiltonResult is_hamilton_connected(const Graph& g, bool force) {
    int n = g.n;
    if (n > 12 && !force)
        throw std::invalid_argument("is_hamilton_connected limited to n <= 12 (force to override)");
    HamiltonResult res;

    // exception shape: one vertex of degree 2 over a complete remainder
    auto adj = g.adjacency();
    for (int x = 0; x < n && !res.exceptionShape; ++x) {
        if (adj[x].size() != 2 || n < 4) continue;
        bool complete = true;
        for (int u = 0; u < n && complete; ++u)
            for (int v = u + 1; v < n && complete; ++v)
                if (u != x && v != x && !g.hasEdge(u, v)) complete = false;
        res.exceptionShape = complete;
    }

    if (n <= 1) {
        res.connected = true;
        return res;
    }
    int full = (1 << n) - 1;
    std::vector<uint16_t> adjMask(n, 0);
    for (auto [u, v] : g.edges) {
        adjMask[u] |= uint16_t(1u << v);
        adjMask[v] |= uint16_t(1u << u);
    }
    res.connected = true;
    for (int u = 0; u < n && res.connected; ++u) {
        // ends[mask] = endpoints of spanning paths of `mask` starting at u
        std::vector<uint16_t> ends(size_t(1) << n, 0);
        ends[1u << u] = uint16_t(1u << u);
        for (int mask = 1; mask <= full; ++mask) {
            uint16_t e = ends[mask];
            if (!e || !((mask >> u) & 1)) continue;
            for (int v = 0; v < n; ++v) {
                if (!((e >> v) & 1)) continue;
                uint16_t nxt = adjMask[v] & uint16_t(~mask);
                while (nxt) {
                    int w = __builtin_ctz(nxt);
                    nxt &= nxt - 1;
                    ends[mask | (1 << w)] |= uint16_t(1u << w);
                }
            }
        }
        uint16_t reach = ends[full];
        for (int v = u + 1; v < n; ++v)
            if (!((reach >> v) & 1)) {
                res.connected = false;
                break;
            }
    }
    return res;
}

ShadowIneqResult shadow_inequality_check(const Hypergraph& h, int w) {
    if (w < 2 || h.n > w)
        throw std::invalid_argument("shadow_inequality_check: h must live on [0, w), w >= 2");
    ShadowIneqResult r;
    long long missing = complement_shadow2(h, w).size();
    r.lhs = h.size() + missing;
    r.rhs = w <= h.r + 2 ? binom(w, 2) : binom(w, h.r);
    r.holds = r.lhs <= r.rhs;
    if (r.lhs == r.rhs) {
        if (h.size() == binom(w, h.r) && w >= h.r)
            r.equality = ShadowEquality::completeHypergraph;
        else if (missing == binom(w, 2))
            r.equality = ShadowEquality::completeComplement;
    }
    return r;
}

double kk_fractional_bound(long long b, int r) {
    if (b < 0 || r < 2) throw std::invalid_argument("kk_fractional_bound: b >= 0, r >= 2");
    if (b == 0) return 0.0;
    auto f = [&](double x) {
        double v = 1.0;
        for (int i = 0; i < r; ++i) v *= (x - i) / (i + 1);
        return v;
    };
    double lo = r - 1.0, hi = static_cast<double>(r);
    while (f(hi) < static_cast<double>(b)) hi *= 2;
    for (int it = 0; it < 200 && hi - lo > 1e-9; ++it) {
        double mid = (lo + hi) / 2;
        if (f(mid) < static_cast<double>(b))
            lo = mid;
        else
            hi = mid;
    }
    double x = (lo + hi) / 2;
    double snapped = std::round(x);
    if (std::fabs(x - snapped) < 1e-7) x = snapped;
    return x * (x - 1) / 2;
}

} // namespace egr
