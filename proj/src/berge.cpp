#include "egr/berge.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

namespace egr {

namespace {

// Edges containing each vertex pair, plus the 2-shadow adjacency.
struct Catalog {
    int n;
    std::vector<std::vector<std::vector<int>>> cont;
    std::vector<std::vector<Vertex>> adj;

    explicit Catalog(const Hypergraph& h) : n(h.n), cont(h.n), adj(h.n) {
        for (auto& row : cont) row.resize(n);
        for (int ei = 0; ei < static_cast<int>(h.edges.size()); ++ei) {
            const Edge& e = h.edges[ei];
            for (size_t a = 0; a < e.size(); ++a)
                for (size_t b = a + 1; b < e.size(); ++b) {
                    cont[e[a]][e[b]].push_back(ei);
                    cont[e[b]][e[a]].push_back(ei);
                }
        }
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (v != u && !cont[u][v].empty()) adj[u].push_back(v);
    }

    // Temporarily register one extra edge (always the most recent one);
    // pushEdge/popEdge must nest like a stack.
    void pushEdge(const Edge& e, int ei) {
        for (size_t a = 0; a < e.size(); ++a)
            for (size_t b = a + 1; b < e.size(); ++b) {
                Vertex u = e[a], v = e[b];
                cont[u][v].push_back(ei);
                cont[v][u].push_back(ei);
                if (cont[u][v].size() == 1) {
                    adj[u].push_back(v);
                    adj[v].push_back(u);
                }
            }
    }
    void popEdge(const Edge& e) {
        for (size_t a = 0; a < e.size(); ++a)
            for (size_t b = a + 1; b < e.size(); ++b) {
                Vertex u = e[a], v = e[b];
                cont[u][v].pop_back();
                cont[v][u].pop_back();
                if (cont[u][v].empty()) {
                    adj[u].erase(std::find(adj[u].begin(), adj[u].end(), v));
                    adj[v].erase(std::find(adj[v].begin(), adj[v].end(), u));
                }
            }
    }
};

// DFS over partial base-vertex sequences. Each consecutive pair is a
// "position" that must be matched to a distinct containing edge; the
// matching is maintained incrementally (one Kuhn augmentation per appended
// vertex, undone on backtrack via a change log).
class Searcher {
public:
    Searcher(const Hypergraph& h, Catalog& cat, bool cycleMode, const SearchBudget& b)
        : h_(h), cat_(cat), cycle_(cycleMode), budget_(b),
          used_(h.n, 0), reachStamp_(h.n, 0),
          edgePos_(h.edges.size(), -1), stamp_(h.edges.size(), 0),
          start_(std::chrono::steady_clock::now()) {}

    // Maximum length; lex-min base sequence among maximum witnesses.
    BergeSearchResult runMaximize() {
        target_ = 0;
        best_ = cycle_ ? 1 : -1; // record anything above this
        if (cycle_) {
            for (Vertex v0 = 0; v0 < cat_.n; ++v0) {
                if (cat_.n - v0 < std::max(best_ + 1, 2)) break;
                if (cat_.adj[v0].empty()) continue;
                floor_ = v0;
                dirSym_ = true;
                if (rootedDfs(v0)) break;
            }
        } else {
            for (Vertex v0 = 0; v0 < cat_.n; ++v0) {
                floor_ = -1;
                dirSym_ = true;
                if (rootedDfs(v0)) break;
            }
        }
        BergeSearchResult res;
        res.nodes = nodes_;
        res.exact = !exhausted_;
        if (cycle_ && bestSeq_.empty()) return res; // no cycle at all
        if (!cycle_ && bestSeq_.empty()) {
            if (h_.n == 0) return res;
            bestSeq_ = {0};
            best_ = 0;
        }
        res.length = best_;
        if (res.exact) lexMinimize();
        res.witness = buildWitness(bestSeq_);
        return res;
    }

    // Restrict decide-mode acceptance to cycles whose matching can use this
    // edge; branches where the edge can no longer participate are pruned.
    void requireEdge(int idx) {
        required_ = idx;
        reqMask_ = 0;
        if (idx >= 0)
            for (Vertex v : h_.edges[idx]) reqMask_ |= uint32_t{1} << v;
    }

    CycleDecision runDecide(int k, int anchor) {
        target_ = std::max(k, 2);
        best_ = target_ - 1;
        found_ = false;
        dirSym_ = anchor < 0;
        if (anchor >= 0) {
            const Edge& ae = h_.edges[anchor];
            floor_ = -1;
            for (Vertex a : ae) {
                for (Vertex b : ae) {
                    if (a == b) continue;
                    seq_ = {a, b};
                    used_[a] = used_[b] = 1;
                    pairU_ = {a};
                    pairV_ = {b};
                    posEdge_ = {anchor};
                    edgePos_[anchor] = 0;
                    frozen_ = 1;
                    pairInR_ = inR(a) && inR(b) ? 1 : 0;
                    bool abort = dfs();
                    edgePos_[anchor] = -1;
                    frozen_ = 0;
                    used_[a] = used_[b] = 0;
                    seq_.clear();
                    pairU_.clear();
                    pairV_.clear();
                    posEdge_.clear();
                    if (abort) goto done;
                }
            }
        } else {
            for (Vertex v0 = 0; v0 < cat_.n; ++v0) {
                if (cat_.n - v0 < target_) break;
                if (cat_.adj[v0].empty()) continue;
                floor_ = v0;
                if (rootedDfs(v0)) break;
            }
        }
    done:
        CycleDecision d;
        d.found = found_;
        d.exact = found_ || !exhausted_;
        d.nodes = nodes_;
        return d;
    }

private:
    const Hypergraph& h_;
    Catalog& cat_;
    bool cycle_;
    SearchBudget budget_;

    std::vector<Vertex> seq_;
    std::vector<char> used_;
    std::vector<int> reachStamp_;
    int reachCur_ = 0;

    // matching: position i covers the pair (pairU_[i], pairV_[i])
    std::vector<int> pairU_, pairV_, posEdge_;
    std::vector<int> edgePos_, stamp_;
    int stampCur_ = 0;
    int frozen_ = 0;
    struct Op {
        int edge, oldPos, pos, oldEdge;
    };
    std::vector<std::vector<Op>> deltas_;

    // optional required edge: only cycles whose pair system can place this
    // edge count (its pair set is any matched pair inside reqMask_)
    int required_ = -1;
    uint32_t reqMask_ = 0;
    int pairInR_ = 0;
    bool inR(Vertex v) const { return reqMask_ >> v & 1; }

    int floor_ = -1;   // extension vertices must exceed this
    bool dirSym_ = true;
    int target_ = 0;   // 0 = maximize
    int best_ = 0;
    bool found_ = false;
    std::vector<Vertex> bestSeq_;
    bool exhausted_ = false;
    long long nodes_ = 0;
    std::chrono::steady_clock::time_point start_;

    bool overBudget() {
        if (budget_.maxNodes > 0 && nodes_ > budget_.maxNodes) return true;
        if (budget_.maxSeconds > 0 && (nodes_ & 1023) == 0) {
            double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
            if (el > budget_.maxSeconds) return true;
        }
        return false;
    }

    bool tryPath(int pos, std::vector<Op>& ops) {
        int u = pairU_[pos], v = pairV_[pos];
        for (int e : cat_.cont[u][v]) {
            if (stamp_[e] == stampCur_) continue;
            stamp_[e] = stampCur_;
            int occ = edgePos_[e];
            if (occ == -1 || (occ >= frozen_ && tryPath(occ, ops))) {
                ops.push_back({e, edgePos_[e], pos, posEdge_[pos]});
                edgePos_[e] = pos;
                posEdge_[pos] = e;
                return true;
            }
        }
        return false;
    }

    bool addPair(Vertex u, Vertex v) {
        pairU_.push_back(u);
        pairV_.push_back(v);
        posEdge_.push_back(-1);
        ++stampCur_;
        std::vector<Op> ops;
        if (tryPath(static_cast<int>(pairU_.size()) - 1, ops)) {
            deltas_.push_back(std::move(ops));
            if (required_ >= 0 && inR(u) && inR(v)) ++pairInR_;
            return true;
        }
        pairU_.pop_back();
        pairV_.pop_back();
        posEdge_.pop_back();
        return false;
    }

    void removePair() {
        if (required_ >= 0 && inR(pairU_.back()) && inR(pairV_.back())) --pairInR_;
        for (auto it = deltas_.back().rbegin(); it != deltas_.back().rend(); ++it) {
            edgePos_[it->edge] = it->oldPos;
            posEdge_[it->pos] = it->oldEdge;
        }
        deltas_.pop_back();
        pairU_.pop_back();
        pairV_.pop_back();
        posEdge_.pop_back();
    }

    // Reachable unused vertices from v through unused vertices above the
    // floor. Returns the count; sets closable_ when one of them (or none is
    // needed) can reach back to seq_[0].
    int reach_ = 0;
    bool closable_ = false;
    std::vector<Vertex> q_;
    int bfsReach(Vertex from) {
        ++reachCur_;
        int cnt = 0;
        closable_ = false;
        std::vector<Vertex>& q = q_;
        q.clear();
        q.push_back(from);
        reachStamp_[from] = reachCur_;
        while (!q.empty()) {
            Vertex x = q.back();
            q.pop_back();
            for (Vertex y : cat_.adj[x]) {
                if (reachStamp_[y] == reachCur_ || used_[y] || y <= floor_) continue;
                reachStamp_[y] = reachCur_;
                ++cnt;
                if (cycle_ && !seq_.empty() && !cat_.cont[y][seq_[0]].empty()) closable_ = true;
                q.push_back(y);
            }
        }
        return cnt;
    }

    void record() {
        if (required_ >= 0 && pairInR_ == 0) return;
        // cycle: seq_ is the closed base sequence; path: length = |seq_|-1
        int len = cycle_ ? static_cast<int>(seq_.size()) : static_cast<int>(seq_.size()) - 1;
        if (len > best_ || (target_ > 0 && len >= target_ && !found_)) {
            best_ = std::max(best_, len);
            bestSeq_ = seq_;
            found_ = true;
        }
    }

    // Returns true to abort the whole search (budget, or decide target met).
    bool dfs() {
        ++nodes_;
        if (overBudget()) {
            exhausted_ = true;
            return true;
        }
        int L = static_cast<int>(seq_.size());
        Vertex vt = seq_.back();
        if (cycle_) {
            bool wantClose = L >= 2 && (target_ > 0 ? L >= target_ : L > best_);
            if (wantClose && (!dirSym_ || L == 2 || seq_[1] < seq_.back())) {
                if (addPair(vt, seq_[0])) {
                    record();
                    removePair();
                    if (target_ > 0 && found_) return true;
                }
            }
        } else {
            if (L - 1 > best_ || (target_ > 0 && L - 1 >= target_)) {
                if (!dirSym_ || L == 1 || seq_[0] < seq_.back()) {
                    record();
                    if (target_ > 0 && found_) return true;
                }
            }
        }
        int reach = bfsReach(vt);
        int need = target_ > 0 ? target_ : best_ + 1;
        int ub = (cycle_ ? L : L - 1) + reach;
        ub = std::min<long long>(ub, static_cast<long long>(h_.edges.size()));
        if (ub < need) return false;
        if (cycle_ && !closable_) return false;
        if (required_ >= 0 && pairInR_ == 0) {
            // some future consecutive pair must land inside the required edge
            int availR = 0;
            for (Vertex v : h_.edges[required_])
                if (!used_[v] && v > floor_) ++availR;
            bool vtR = inR(vt);
            bool v0R = cycle_ && inR(seq_[0]);
            if (!((vtR && v0R) || availR >= 2 || (availR >= 1 && (vtR || v0R))))
                return false;
        }
        for (Vertex u : cat_.adj[vt]) {
            if (used_[u] || u <= floor_) continue;
            used_[u] = 1;
            seq_.push_back(u);
            if (addPair(vt, u)) {
                if (dfs()) {
                    removePair();
                    seq_.pop_back();
                    used_[u] = 0;
                    return true;
                }
                removePair();
            }
            seq_.pop_back();
            used_[u] = 0;
        }
        return false;
    }

    bool rootedDfs(Vertex v0) {
        seq_ = {v0};
        used_[v0] = 1;
        bool abort = dfs();
        used_[v0] = 0;
        seq_.clear();
        return abort;
    }

    // Probe whether the current partial state completes to length >= target_.
    bool probe() {
        found_ = false;
        if (dfs() && exhausted_) return false;
        return found_;
    }

    // Phase 2: rebuild bestSeq_ as the lex-min base sequence of maximum
    // length. On budget exhaustion keep the phase-1 witness.
    void lexMinimize() {
        int L = best_;
        if (L <= 0) return;
        target_ = L;
        best_ = L - 1;
        dirSym_ = false;
        std::vector<Vertex> prefix;
        // smallest feasible first vertex
        for (Vertex v0 = 0; v0 < cat_.n; ++v0) {
            floor_ = cycle_ ? v0 : -1;
            seq_ = {v0};
            used_[v0] = 1;
            bool ok = probe();
            used_[v0] = 0;
            seq_.clear();
            if (exhausted_) { best_ = L; return; }
            if (ok) {
                prefix = {v0};
                break;
            }
        }
        int want = cycle_ ? L : L + 1; // base vertices in the witness
        seq_ = prefix;
        for (Vertex v : seq_) used_[v] = 1;
        if (cycle_) floor_ = seq_[0];
        while (static_cast<int>(seq_.size()) < want) {
            Vertex vt = seq_.back();
            bool extended = false;
            for (Vertex u : cat_.adj[vt]) {
                if (used_[u] || u <= floor_) continue;
                used_[u] = 1;
                seq_.push_back(u);
                if (addPair(vt, u)) {
                    bool ok = (!cycle_ && static_cast<int>(seq_.size()) == want) || probe();
                    if (exhausted_) {
                        removePair();
                        seq_.pop_back();
                        used_[u] = 0;
                        cleanupLex();
                        best_ = L;
                        return;
                    }
                    if (ok) {
                        extended = true;
                        break;
                    }
                    removePair();
                }
                if (!extended) {
                    seq_.pop_back();
                    used_[u] = 0;
                }
            }
            if (!extended) { // should not happen; fall back to phase-1 witness
                cleanupLex();
                best_ = L;
                return;
            }
        }
        bestSeq_ = seq_;
        best_ = L;
        cleanupLex();
    }

    void cleanupLex() {
        while (!deltas_.empty()) removePair();
        for (Vertex v : seq_) used_[v] = 0;
        seq_.clear();
    }

    // Deterministic edge assignment for a final base sequence.
    BergeWitness buildWitness(const std::vector<Vertex>& base) {
        int L = cycle_ ? static_cast<int>(base.size()) : static_cast<int>(base.size()) - 1;
        BergeWitness w;
        w.kind = cycle_ ? BergeWitness::Kind::cycle : BergeWitness::Kind::path;
        w.baseVertices = base;
        if (L <= 0) return w;
        pairU_.clear();
        pairV_.clear();
        posEdge_.assign(L, -1);
        std::fill(edgePos_.begin(), edgePos_.end(), -1);
        frozen_ = 0;
        for (int i = 0; i < L; ++i) {
            pairU_.push_back(base[i]);
            pairV_.push_back(base[(i + 1) % base.size()]);
        }
        for (int i = 0; i < L; ++i) {
            ++stampCur_;
            std::vector<Op> ops;
            if (!tryPath(i, ops))
                throw std::logic_error("witness edge assignment lost during reconstruction");
        }
        for (int i = 0; i < L; ++i) w.witnessEdges.push_back(h_.edges[posEdge_[i]]);
        return w;
    }
};

void checkCaps(const Hypergraph& h, const SearchBudget& b) {
    if (b.force) return;
    if (h.n > kExactMaxN || static_cast<long long>(h.edges.size()) > kExactMaxEdges) {
        if (b.maxNodes > 0 || b.maxSeconds > 0) return;
        throw std::invalid_argument(
            "instance exceeds exact-search caps (n > 24 or > 64 edges); set a budget or force");
    }
}

} // namespace

VerifyResult verify_witness(const Hypergraph& h, const BergeWitness& w) {
    for (const Edge& e : w.witnessEdges)
        if (!h.hasEdge(e)) throw std::invalid_argument("dangling edge reference");
    int l = static_cast<int>(w.witnessEdges.size());
    bool cyc = w.kind == BergeWitness::Kind::cycle;
    if (cyc && l < 2) return {false, "cycle needs at least 2 edges"};
    size_t wantBase = cyc ? l : l + 1;
    if (w.baseVertices.size() != wantBase)
        return {false, "base vertex count does not match length"};
    std::set<Vertex> vs(w.baseVertices.begin(), w.baseVertices.end());
    if (vs.size() != w.baseVertices.size()) return {false, "duplicate base vertex"};
    for (Vertex v : w.baseVertices)
        if (v < 0 || v >= h.n) return {false, "base vertex out of range"};
    std::set<Edge> es(w.witnessEdges.begin(), w.witnessEdges.end());
    if (es.size() != w.witnessEdges.size()) return {false, "duplicate witness edge"};
    for (int i = 0; i < l; ++i) {
        Vertex a = w.baseVertices[i];
        Vertex b = w.baseVertices[(i + 1) % w.baseVertices.size()];
        const Edge& e = w.witnessEdges[i];
        if (!std::binary_search(e.begin(), e.end(), a) ||
            !std::binary_search(e.begin(), e.end(), b))
            return {false, "containment fails at position " + std::to_string(i + 1)};
    }
    return {true, ""};
}

BergeSearchResult longest_berge(const Hypergraph& h, BergeWitness::Kind kind,
                                const SearchBudget& budget) {
    checkCaps(h, budget);
    Catalog cat(h);
    Searcher s(h, cat, kind == BergeWitness::Kind::cycle, budget);
    return s.runMaximize();
}

CycleDecision exists_berge_cycle_geq(const Hypergraph& h, int k, const SearchBudget& budget) {
    checkCaps(h, budget);
    Catalog cat(h);
    Searcher s(h, cat, true, budget);
    return s.runDecide(k, -1);
}

CycleDecision exists_berge_cycle_geq_through(const Hypergraph& h, int k, int anchor,
                                             const SearchBudget& budget) {
    if (anchor < 0 || anchor >= static_cast<int>(h.edges.size()))
        throw std::invalid_argument("anchor edge index out of range");
    checkCaps(h, budget);
    Catalog cat(h);
    Searcher s(h, cat, true, budget);
    return s.runDecide(k, anchor);
}

std::vector<char> addable_edges(const Hypergraph& base, int k, const std::vector<Edge>& cands,
                                int requiredEdge) {
    std::vector<char> out(cands.size(), 1);
    if (static_cast<int>(base.edges.size()) + 1 < k) return out;
    if (requiredEdge >= static_cast<int>(base.edges.size()))
        throw std::invalid_argument("required edge index out of range");
    Hypergraph h = base;
    int m = static_cast<int>(base.edges.size());
    h.edges.emplace_back();
    Catalog cat(base);
    for (size_t i = 0; i < cands.size(); ++i) {
        h.edges[m] = cands[i];
        cat.pushEdge(cands[i], m);
        Searcher s(h, cat, true, {0, 0, true});
        if (requiredEdge >= 0) s.requireEdge(requiredEdge);
        out[i] = !s.runDecide(k, m).found;
        cat.popEdge(cands[i]);
    }
    return out;
}

GraphCycleResult longest_graph_cycle(const Graph& g, const SearchBudget& budget) {
    std::vector<Edge> es;
    es.reserve(g.edges.size());
    for (auto [u, v] : g.edges) es.push_back({u, v});
    Hypergraph h2 = Hypergraph::make(g.n, 2, std::move(es));
    BergeSearchResult r = longest_berge(h2, BergeWitness::Kind::cycle, budget);
    GraphCycleResult out;
    out.length = r.length;
    out.exact = r.exact;
    out.nodes = r.nodes;
    if (r.witness) out.cycle = r.witness->baseVertices;
    return out;
}

HallViolation::HallViolation(std::vector<VertexPair> pairs)
    : std::runtime_error("Hall condition violated on " + std::to_string(pairs.size()) +
                         " shadow pairs"),
      pairs_(std::move(pairs)) {}

BergeWitness lift_to_berge(const MixedHypergraph& m,
                           const std::map<VertexPair, Edge>& sdrpPairs,
                           const std::vector<Vertex>& graphCycle) {
    int l = static_cast<int>(graphCycle.size());
    if (l < 2) throw std::invalid_argument("graphCycle must have at least 2 vertices");
    std::set<Vertex> distinct(graphCycle.begin(), graphCycle.end());
    if (static_cast<int>(distinct.size()) != l)
        throw std::invalid_argument("graphCycle vertices must be distinct");

    auto norm = [](Vertex a, Vertex b) { return VertexPair{std::min(a, b), std::max(a, b)}; };
    std::set<VertexPair> aSet(m.pairEdges.begin(), m.pairEdges.end());

    std::vector<Edge> chosen(l);
    std::vector<int> bPositions; // positions needing a residual hyperedge
    std::set<Edge> usedReps;
    for (int i = 0; i < l; ++i) {
        VertexPair p = norm(graphCycle[i], graphCycle[(i + 1) % l]);
        if (aSet.count(p)) {
            auto it = sdrpPairs.find(p);
            if (it == sdrpPairs.end())
                throw std::invalid_argument("cycle uses an A-edge with no SDRP representative");
            const Edge& f = it->second;
            if (!std::binary_search(f.begin(), f.end(), p.first) ||
                !std::binary_search(f.begin(), f.end(), p.second))
                throw std::invalid_argument("SDRP representative does not contain its pair");
            if (!usedReps.insert(f).second)
                throw std::invalid_argument("SDRP representatives are not distinct");
            chosen[i] = f;
        } else {
            bPositions.push_back(i);
        }
    }

    // match B-positions to distinct hyperedges of m, deterministic Kuhn
    int nb = static_cast<int>(bPositions.size());
    int ne = static_cast<int>(m.hyperEdges.size());
    std::vector<std::vector<int>> cand(nb);
    for (int j = 0; j < nb; ++j) {
        int i = bPositions[j];
        VertexPair p = norm(graphCycle[i], graphCycle[(i + 1) % l]);
        for (int e = 0; e < ne; ++e) {
            const Edge& f = m.hyperEdges[e];
            if (usedReps.count(f)) continue;
            if (std::binary_search(f.begin(), f.end(), p.first) &&
                std::binary_search(f.begin(), f.end(), p.second))
                cand[j].push_back(e);
        }
        if (cand[j].empty()) throw HallViolation({p}); // |S| = 1 > 0 = |B_S|
    }
    std::vector<int> matchPos(ne, -1), matchEdge(nb, -1);
    std::vector<char> vis(ne);
    auto augment = [&](auto&& self, int j) -> bool {
        for (int e : cand[j]) {
            if (vis[e]) continue;
            vis[e] = 1;
            if (matchPos[e] == -1 || self(self, matchPos[e])) {
                matchPos[e] = j;
                matchEdge[j] = e;
                return true;
            }
        }
        return false;
    };
    for (int j = 0; j < nb; ++j) {
        std::fill(vis.begin(), vis.end(), 0);
        if (!augment(augment, j)) {
            // Hall violated: pairs alternating-reachable from j plus j itself
            std::vector<VertexPair> s;
            for (int j2 = 0; j2 <= j; ++j2) {
                bool in = j2 == j;
                if (!in && matchEdge[j2] >= 0 && vis[matchEdge[j2]]) in = true;
                if (in) {
                    int i = bPositions[j2];
                    s.push_back(norm(graphCycle[i], graphCycle[(i + 1) % l]));
                }
            }
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            throw HallViolation(std::move(s));
        }
    }
    for (int j = 0; j < nb; ++j) chosen[bPositions[j]] = m.hyperEdges[matchEdge[j]];

    BergeWitness w;
    w.kind = BergeWitness::Kind::cycle;
    w.baseVertices = graphCycle;
    w.witnessEdges = std::move(chosen);
    return w;
}

std::string serialize(const BergeWitness& w) {
    std::ostringstream os;
    os << (w.kind == BergeWitness::Kind::cycle ? "CYCLE " : "PATH ") << w.witnessEdges.size()
       << "\n";
    for (size_t i = 0; i < w.baseVertices.size(); ++i)
        os << (i ? " " : "") << w.baseVertices[i];
    os << "\n";
    for (const Edge& e : w.witnessEdges) {
        for (size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
        os << "\n";
    }
    return os.str();
}

BergeWitness parse_witness(const std::string& text) {
    std::istringstream in(text);
    std::string kind;
    int l = -1;
    if (!(in >> kind >> l) || (kind != "CYCLE" && kind != "PATH") || l < 0)
        throw std::invalid_argument("bad witness header");
    BergeWitness w;
    w.kind = kind == "CYCLE" ? BergeWitness::Kind::cycle : BergeWitness::Kind::path;
    int nb = kind == "CYCLE" ? l : l + 1;
    w.baseVertices.resize(nb);
    for (int i = 0; i < nb; ++i)
        if (!(in >> w.baseVertices[i])) throw std::invalid_argument("bad witness base vertices");
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        Edge e;
        Vertex v;
        while (ls >> v) e.push_back(v);
        if (e.empty()) continue;
        w.witnessEdges.push_back(std::move(e));
    }
    if (static_cast<int>(w.witnessEdges.size()) != l)
        throw std::invalid_argument("bad witness edge count");
    return w;
}

} // namespace egr
