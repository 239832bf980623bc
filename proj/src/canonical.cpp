#include "egr/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace egr {

namespace {

uint32_t maskOf(const Edge& e) {
    uint32_t m = 0;
    for (Vertex v : e) m |= uint32_t{1} << v;
    return m;
}

uint32_t maskOf(VertexPair p) { return (uint32_t{1} << p.first) | (uint32_t{1} << p.second); }

uint32_t swapBits(uint32_t m, int u, int v) {
    bool bu = m >> u & 1, bv = m >> v & 1;
    if (bu == bv) return m;
    return m ^ (uint32_t{1} << u) ^ (uint32_t{1} << v);
}

// Twin classes: u ~ v when the transposition (u v) maps every family to
// itself, i.e. swapping the two vertices is an automorphism.
std::vector<int> twinClasses(const SetSystem& s) {
    std::vector<std::vector<uint32_t>> sorted = s.families;
    for (auto& f : sorted) std::sort(f.begin(), f.end());
    std::vector<int> cls(s.n);
    std::iota(cls.begin(), cls.end(), 0);
    auto find = [&](int x) {
        while (cls[x] != x) x = cls[x] = cls[cls[x]];
        return x;
    };
    for (int u = 0; u < s.n; ++u) {
        for (int v = u + 1; v < s.n; ++v) {
            bool twin = true;
            for (const auto& f : sorted) {
                for (uint32_t e : f) {
                    if (!std::binary_search(f.begin(), f.end(), swapBits(e, u, v))) {
                        twin = false;
                        break;
                    }
                }
                if (!twin) break;
            }
            if (twin) cls[find(u)] = find(v);
        }
    }
    std::vector<int> out(s.n);
    for (int v = 0; v < s.n; ++v) out[v] = find(v);
    return out;
}

} // namespace

std::vector<int> twin_classes(const SetSystem& s) { return twinClasses(s); }

SetSystem SetSystem::of(const Graph& g) {
    if (g.n > 16) throw std::invalid_argument("SetSystem: n must be at most 16");
    SetSystem s;
    s.n = g.n;
    s.families.resize(1);
    for (auto p : g.edges) s.families[0].push_back(maskOf(p));
    return s;
}

SetSystem SetSystem::of(const Hypergraph& h) {
    if (h.n > 16) throw std::invalid_argument("SetSystem: n must be at most 16");
    SetSystem s;
    s.n = h.n;
    s.families.resize(1);
    for (const auto& e : h.edges) s.families[0].push_back(maskOf(e));
    return s;
}

SetSystem SetSystem::of(const MixedHypergraph& m) {
    if (m.n > 16) throw std::invalid_argument("SetSystem: n must be at most 16");
    SetSystem s;
    s.n = m.n;
    s.families.resize(2);
    for (auto p : m.pairEdges) s.families[0].push_back(maskOf(p));
    for (const auto& e : m.hyperEdges) s.families[1].push_back(maskOf(e));
    return s;
}

// ---------------------------------------------------------------------------
// Graph fast path: the per-position code is a single word (bits to already
// placed vertices), so the whole search works on uint32 codes.

namespace {

struct GraphCanon {
    int n;
    std::vector<uint32_t> adj;
    std::vector<int> twin;
    std::vector<int> perm;
    std::vector<uint32_t> cur, best;
    bool haveBest = false;

    void run(int pos, uint32_t usedMask) {
        if (pos == n) {
            if (!haveBest || cur > best) best = cur;
            haveBest = true;
            return;
        }
        // code of v = adjacency bits of v against positions 0..pos-1
        uint32_t bestCode = 0;
        std::vector<std::pair<uint32_t, int>> cands;
        for (int v = 0; v < n; ++v) {
            if (usedMask >> v & 1) continue;
            uint32_t code = 0;
            for (int j = 0; j < pos; ++j) code |= ((adj[v] >> perm[j]) & 1u) << j;
            if (cands.empty() || code > bestCode) bestCode = code;
            cands.push_back({code, v});
        }
        // Abandon the node if prefix + best extension already compares below best.
        if (haveBest) {
            cur[pos] = bestCode;
            for (int j = 0; j <= pos; ++j) {
                if (cur[j] < best[j]) return;
                if (cur[j] > best[j]) break;
            }
        }
        uint32_t twinsSeen = 0;
        for (auto [code, v] : cands) {
            if (code != bestCode) continue;
            if (twinsSeen >> twin[v] & 1) continue;
            twinsSeen |= uint32_t{1} << twin[v];
            perm[pos] = v;
            cur[pos] = code;
            run(pos + 1, usedMask | (uint32_t{1} << v));
        }
    }
};

} // namespace

std::vector<uint32_t> canonical_graph(const Graph& g) {
    if (g.n > 16) throw std::invalid_argument("canonical_graph: n must be at most 16");
    GraphCanon c;
    c.n = g.n;
    c.adj.assign(g.n, 0);
    for (auto [u, v] : g.edges) {
        c.adj[u] |= uint32_t{1} << v;
        c.adj[v] |= uint32_t{1} << u;
    }
    c.twin = twinClasses(SetSystem::of(g));
    c.perm.assign(g.n, 0);
    c.cur.assign(g.n, 0);
    c.run(0, 0);
    std::vector<uint32_t> out;
    out.push_back(static_cast<uint32_t>(g.n));
    out.insert(out.end(), c.best.begin(), c.best.end());
    return out;
}

std::vector<uint32_t> canonical_graph_bruteforce(const Graph& g) {
    if (g.n > 8) throw std::invalid_argument("canonical_graph_bruteforce: n must be at most 8");
    std::vector<uint32_t> adj(g.n, 0);
    for (auto [u, v] : g.edges) {
        adj[u] |= uint32_t{1} << v;
        adj[v] |= uint32_t{1} << u;
    }
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<uint32_t> best, cur(g.n);
    do {
        for (int pos = 0; pos < g.n; ++pos) {
            uint32_t code = 0;
            for (int j = 0; j < pos; ++j) code |= ((adj[perm[pos]] >> perm[j]) & 1u) << j;
            cur[pos] = code;
        }
        if (best.empty() || cur > best) best = cur;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<uint32_t> out;
    out.push_back(static_cast<uint32_t>(g.n));
    out.insert(out.end(), best.begin(), best.end());
    return out;
}

// ---------------------------------------------------------------------------
// General set systems. The encoding lists, for each placement position and
// family, the number of edges completed by that placement followed by their
// relabeled masks in increasing order; the canonical form maximizes the
// flattened sequence.

namespace {

struct SystemCanon {
    int n = 0;
    int numFamilies = 0;
    struct EdgeRec {
        int family;
        uint32_t origMask;
        int remaining;
        uint32_t curMask; // relabeled bits of already placed vertices
    };
    std::vector<EdgeRec> edges;
    std::vector<std::vector<int>> vertexEdges;
    std::vector<int> twin;
    std::vector<int> perm;
    std::vector<uint32_t> flat, best;
    bool haveBest = false;

    // Encoded segment produced by placing v at position pos; scratch buffers
    // reused across calls to keep the hot path allocation-free.
    std::vector<std::vector<uint32_t>> doneBuf;
    void segmentFor(int v, int pos, std::vector<uint32_t>& seg) {
        doneBuf.resize(numFamilies);
        for (auto& d : doneBuf) d.clear();
        for (int ei : vertexEdges[v]) {
            const EdgeRec& e = edges[ei];
            if (e.remaining == 1) doneBuf[e.family].push_back(e.curMask | (uint32_t{1} << pos));
        }
        seg.clear();
        for (auto& masks : doneBuf) {
            std::sort(masks.begin(), masks.end());
            seg.push_back(static_cast<uint32_t>(masks.size()));
            seg.insert(seg.end(), masks.begin(), masks.end());
        }
    }

    void place(int v, int pos) {
        for (int ei : vertexEdges[v]) {
            --edges[ei].remaining;
            edges[ei].curMask |= uint32_t{1} << pos;
        }
    }
    void unplace(int v, int pos) {
        for (int ei : vertexEdges[v]) {
            ++edges[ei].remaining;
            edges[ei].curMask &= ~(uint32_t{1} << pos);
        }
    }

    std::vector<std::vector<std::pair<std::vector<uint32_t>, int>>> candsAtDepth;
    void run(int pos, uint32_t usedMask) {
        if (pos == n) {
            if (!haveBest || flat > best) best = flat;
            haveBest = true;
            return;
        }
        auto& cands = candsAtDepth[pos];
        size_t cnt = 0, topAt = 0;
        for (int v = 0; v < n; ++v) {
            if (usedMask >> v & 1) continue;
            if (cands.size() == cnt) cands.emplace_back();
            cands[cnt].second = v;
            segmentFor(v, pos, cands[cnt].first);
            if (cands[cnt].first > cands[topAt].first) topAt = cnt;
            ++cnt;
        }
        // Only maximal-segment candidates can carry the canonical continuation.
        const std::vector<uint32_t>& bestSeg = cands[topAt].first;
        size_t at = flat.size();
        if (haveBest) {
            // Abandon the node if prefix + best extension compares below best.
            for (size_t i = 0; i < at + bestSeg.size() && i < best.size(); ++i) {
                uint32_t c = i < at ? flat[i] : bestSeg[i - at];
                if (c < best[i]) return;
                if (c > best[i]) break;
            }
        }
        uint32_t twinsSeen = 0;
        for (size_t ci = 0; ci < cnt; ++ci) {
            auto& [seg, v] = cands[ci];
            if (seg != bestSeg) continue;
            if (twinsSeen >> twin[v] & 1) continue;
            twinsSeen |= uint32_t{1} << twin[v];
            flat.insert(flat.end(), seg.begin(), seg.end());
            place(v, pos);
            perm[pos] = v;
            run(pos + 1, usedMask | (uint32_t{1} << v));
            unplace(v, pos);
            flat.resize(at);
        }
    }
};

std::vector<uint32_t> systemHeader(const SetSystem& s) {
    std::vector<uint32_t> h;
    h.push_back(static_cast<uint32_t>(s.n));
    h.push_back(static_cast<uint32_t>(s.families.size()));
    for (const auto& f : s.families) h.push_back(static_cast<uint32_t>(f.size()));
    return h;
}

} // namespace

std::vector<uint32_t> canonical_system(const SetSystem& s) {
    if (s.n > 16) throw std::invalid_argument("canonical_system: n must be at most 16");
    SystemCanon c;
    c.n = s.n;
    c.numFamilies = static_cast<int>(s.families.size());
    c.vertexEdges.resize(s.n);
    for (int f = 0; f < c.numFamilies; ++f) {
        for (uint32_t m : s.families[f]) {
            int idx = static_cast<int>(c.edges.size());
            c.edges.push_back({f, m, static_cast<int>(std::popcount(m)), 0});
            for (int v = 0; v < s.n; ++v)
                if (m >> v & 1) c.vertexEdges[v].push_back(idx);
        }
    }
    c.twin = twinClasses(s);
    c.perm.assign(s.n, 0);
    c.candsAtDepth.resize(s.n);
    if (s.n == 0) {
        return systemHeader(s);
    }
    c.run(0, 0);
    std::vector<uint32_t> out = systemHeader(s);
    out.insert(out.end(), c.best.begin(), c.best.end());
    return out;
}

std::vector<uint32_t> canonical_system_bruteforce(const SetSystem& s) {
    if (s.n > 8) throw std::invalid_argument("canonical_system_bruteforce: n must be at most 8");
    int F = static_cast<int>(s.families.size());
    std::vector<int> perm(s.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<uint32_t> best;
    do {
        std::vector<int> posOf(s.n);
        for (int i = 0; i < s.n; ++i) posOf[perm[i]] = i;
        std::vector<uint32_t> flat;
        for (int pos = 0; pos < s.n; ++pos) {
            int v = perm[pos];
            for (int f = 0; f < F; ++f) {
                std::vector<uint32_t> done;
                for (uint32_t m : s.families[f]) {
                    if (!(m >> v & 1)) continue;
                    uint32_t rel = 0;
                    bool complete = true;
                    for (int u = 0; u < s.n; ++u) {
                        if (!(m >> u & 1)) continue;
                        if (posOf[u] > pos) {
                            complete = false;
                            break;
                        }
                        rel |= uint32_t{1} << posOf[u];
                    }
                    if (complete) done.push_back(rel);
                }
                std::sort(done.begin(), done.end());
                flat.push_back(static_cast<uint32_t>(done.size()));
                flat.insert(flat.end(), done.begin(), done.end());
            }
        }
        if (best.empty() || flat > best) best = flat;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<uint32_t> out = systemHeader(s);
    out.insert(out.end(), best.begin(), best.end());
    return out;
}

bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.n != b.n || a.r != b.r || a.edges.size() != b.edges.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace egr
