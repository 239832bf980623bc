// Acceptance sweep: run as `acceptance <1..6>`. Each criterion prints one
// PASS/FAIL line (plus failure details on stderr) and sets the exit code.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "egr/berge.hpp"
#include "egr/binomial.hpp"
#include "egr/canonical.hpp"
#include "egr/extremal.hpp"
#include "egr/hypergraph.hpp"
#include "egr/sdrp.hpp"
#include "egr/search.hpp"
#include "egr/structure.hpp"

using namespace egr;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        if (failures <= 20) std::cerr << "  FAIL " << what << "\n";
    }
}

// Exact circumference by subset DP (n <= 20): dp[mask] holds the end
// vertices of simple paths covering mask and starting at its lowest bit.
int circumference(const Graph& g) {
    int n = g.n;
    std::vector<uint32_t> adj(n, 0);
    for (auto [u, v] : g.edges) {
        adj[u] |= uint32_t{1} << v;
        adj[v] |= uint32_t{1} << u;
    }
    std::vector<uint32_t> dp(size_t{1} << n, 0);
    for (int s = 0; s < n; ++s) dp[size_t{1} << s] = uint32_t{1} << s;
    int best = 0;
    for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
        uint32_t ends = dp[mask];
        if (!ends) continue;
        int s = std::countr_zero(mask);
        int len = std::popcount(mask);
        uint32_t future = ~mask & ~((uint32_t{1} << s) - 1);
        for (uint32_t es = ends; es; es &= es - 1) {
            int v = std::countr_zero(es);
            if (len >= 3 && (adj[v] >> s & 1)) best = std::max(best, len);
            for (uint32_t ns = adj[v] & future; ns; ns &= ns - 1)
                dp[mask | (ns & -ns)] |= uint32_t{1} << std::countr_zero(ns);
        }
    }
    return best;
}

Graph shadow2Graph(const Hypergraph& h) {
    std::vector<VertexPair> ps;
    for (const Edge& e : shadow(h, 2).members) ps.push_back({e[0], e[1]});
    return Graph::make(h.n, std::move(ps));
}

double seconds(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------- criterion 1
// exact_eg_graph matches the closed form for all 4 <= k <= n <= 9 and the
// (9,5) extremal list contains H_{9,5,2}.
bool criterion1() {
    for (int k = 4; k <= 9; ++k)
        for (int n = k; n <= 9; ++n) {
            SearchResult r = exact_eg_graph(n, k);
            expect(r.exact, "EG(" + std::to_string(n) + "," + std::to_string(k) + ") not exact");
            expect(r.value == eval_f_graph(n, k),
                   "EG(" + std::to_string(n) + "," + std::to_string(k) + ") = " +
                       std::to_string(r.value) + " != f = " + std::to_string(eval_f_graph(n, k)));
            if (n == 9 && k == 5) {
                std::vector<uint32_t> want = canonical_graph(build_hnka(9, 5, 2));
                bool has = false;
                for (const Graph& g : r.extremalGraphs)
                    if (canonical_graph(g) == want) has = true;
                expect(has, "EG(9,5) extremal list misses H_{9,5,2}");
            }
        }
    return failures == 0;
}

// ---------------------------------------------------------------- criterion 2
// exact_eg_hypergraph matches f_r at (r,k) = (3,7) for n = 7,8,9 with every
// extremal instance recognized; n = 10,11 are attempted under a budget and
// excluded when inexact.
bool criterion2() {
    for (int n = 7; n <= 9; ++n) {
        SearchResult r = exact_eg_hypergraph(n, 7, 3);
        expect(r.exact, "EG_3(" + std::to_string(n) + ",7) not exact");
        expect(r.value == eval_fr(n, 7, 3),
               "EG_3(" + std::to_string(n) + ",7) = " + std::to_string(r.value) +
                   " != f_3 = " + std::to_string(eval_fr(n, 7, 3)));
        expect(!r.extremalHypergraphs.empty(),
               "EG_3(" + std::to_string(n) + ",7) has no extremal list");
        for (const Hypergraph& h : r.extremalHypergraphs)
            expect(recognize_extremal(h, 7).verdict != Verdict::Neither,
                   "unrecognized extremal instance at n = " + std::to_string(n));
        std::cout << "  n=" << n << ": EG_3 = " << r.value << ", "
                  << r.extremalHypergraphs.size() << " extremal classes\n";
    }
    for (int n = 10; n <= 11; ++n) {
        SearchBudget b;
        b.maxSeconds = 120;
        SearchResult r = exact_eg_hypergraph(n, 7, 3, b);
        if (r.exact) {
            expect(r.value == eval_fr(n, 7, 3),
                   "EG_3(" + std::to_string(n) + ",7) = " + std::to_string(r.value) +
                       " != f_3 = " + std::to_string(eval_fr(n, 7, 3)));
            std::cout << "  n=" << n << ": EG_3 = " << r.value << "\n";
        } else {
            std::cout << "  n=" << n << ": excluded (budget exhausted, lower bound " << r.value
                      << ")\n";
        }
    }
    return failures == 0;
}

// ---------------------------------------------------------------- criterion 3
// Builder edge counts equal f_r (cut-edge or clique-tree shape as m
// dictates) and f_r^+ for the mixed builder with maximal choices, over
// r in {3,4,5}, k in [r+4, r+10], n in [k, 200]; instances with n <= 15 are
// verified free of Berge cycles of length >= k via the exact circumference
// of the 2-shadow (every Berge cycle projects to a shadow cycle on the same
// base vertices).
bool criterion3() {
    for (int r = 3; r <= 5; ++r)
        for (int k = r + 4; k <= r + 10; ++k)
            for (int n = k; n <= 200; ++n) {
                ExtremalParams pr = ExtremalParams::make(n, k, r);
                std::string at = "(" + std::to_string(n) + "," + std::to_string(k) + "," +
                                 std::to_string(r) + ")";
                Hypergraph h = (pr.m == 1 || pr.m >= r + 1) ? build_construction41(n, k, r)
                                                            : build_construction42(n, k, r);
                expect(h.size() == eval_fr(n, k, r), "builder size != f_r at " + at);
                MixedHypergraph mx = build_construction63(n, k, r, maximal_c63_choices(n, k, r));
                expect(mx.size() == eval_fr_plus(n, k, r), "mixed size != f_r+ at " + at);
                if (n <= 15) {
                    expect(circumference(shadow2Graph(h)) <= k - 1,
                           "long shadow cycle in builder at " + at);
                    expect(circumference(mx.shadowGraph()) <= k - 1,
                           "long shadow cycle in mixed builder at " + at);
                }
            }
    return failures == 0;
}

// ---------------------------------------------------------------- criterion 4
// The full inequality scan over the default grid reports no violations.
bool criterion4() {
    ScanReport rep = inequality_scan(all_scan_claims(), ScanGrid{});
    expect(rep.checked > 0, "scan checked nothing");
    expect(rep.ok(), "scan reported " + std::to_string(rep.violations.size()) + " violations");
    for (size_t i = 0; i < rep.violations.size() && i < 5; ++i)
        std::cerr << "  violation: " << rep.violations[i].claim << "\n";
    std::cout << "  checked " << rep.checked << " points, skipped " << rep.skipped << "\n";
    return failures == 0;
}

// ---------------------------------------------------------------- criterion 5
// Random hunts above the bound sizes find a long cycle in every trial.
bool criterion5() {
    const int pts[3][3] = {{10, 7, 3}, {12, 7, 3}, {12, 8, 4}};
    for (auto [n, k, r] : pts) {
        for (bool mixed : {false, true}) {
            ScanReport rep = random_hunt(n, k, r, 10000, 42, mixed);
            std::string at = "(" + std::to_string(n) + "," + std::to_string(k) + "," +
                             std::to_string(r) + (mixed ? ",mixed)" : ")");
            expect(rep.checked == 10000, "hunt did not run 10^4 trials at " + at);
            expect(rep.ok(),
                   std::to_string(rep.violations.size()) + " counterexamples at " + at);
        }
        std::cout << "  (" << n << "," << k << "," << r << "): 10^4 trials clean, both modes\n";
    }
    return failures == 0;
}

// ---------------------------------------------------------------- criterion 6
// The structural toolkit: the Kopylov-set theorem on every 2-connected
// C_{>=k}-free graph for k in {5,6}, n <= 9; the strict Hall property of
// max-SDRP residuals; lifting; the shadow inequality; Hamilton-connectivity
// of dense graphs; order-independence of the core.

std::vector<Graph> allCkFreeClasses(int n, int k) {
    std::set<std::vector<uint32_t>> seen;
    std::vector<Graph> all{Graph::make(n, {})}, cur = all;
    seen.insert(canonical_graph(cur[0]));
    while (!cur.empty()) {
        std::vector<Graph> next;
        for (const Graph& g : cur)
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (g.hasEdge(u, v)) continue;
                    std::vector<VertexPair> es = g.edges;
                    es.push_back({u, v});
                    Graph h = Graph::make(n, std::move(es));
                    if (circumference(h) >= k) continue;
                    if (seen.insert(canonical_graph(h)).second) next.push_back(h);
                }
        for (const Graph& g : next) all.push_back(g);
        cur = std::move(next);
    }
    return all;
}

bool twoConnected(const Graph& g) {
    if (g.n < 3) return false;
    BlockDecomposition bd = blocks(g);
    return bd.blocks.size() == 1 && static_cast<int>(bd.blocks[0].size()) == g.n;
}

void kopylovSweep() {
    for (int k = 5; k <= 6; ++k)
        for (int n = k; n <= 9; ++n) {
            int classes = 0, checked = 0;
            for (const Graph& g : allCkFreeClasses(n, k)) {
                ++classes;
                if (!twoConnected(g)) continue;
                ++checked;
                expect(find_kopylov_set(g, k).found,
                       "no Kopylov set at n=" + std::to_string(n) + " k=" + std::to_string(k));
            }
            std::cout << "  kopylov k=" << k << " n=" << n << ": " << classes << " classes, "
                      << checked << " 2-connected\n";
        }
}

void sdrpSweep() {
    long long tested = 0;
    for (int n = 3; n <= 5; ++n) {
        std::vector<Edge> triples;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) triples.push_back({a, b, c});
        int m = static_cast<int>(triples.size());
        for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
            std::vector<Edge> es;
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1) es.push_back(triples[i]);
            Hypergraph h = Hypergraph::make(n, 3, std::move(es));
            Sdrp s = max_sdrp(h);
            expect(s.certifiedMax, "uncertified SDRP in the exhaustive range");
            expect(hall_check(s.residual).ok, "Hall failure on exhaustive instance");
            ++tested;
        }
    }
    std::mt19937_64 rng(20260826);
    for (int trial = 0; trial < 10000; ++trial) {
        int n = std::uniform_int_distribution<int>(6, 9)(rng);
        std::vector<Edge> triples;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) triples.push_back({a, b, c});
        std::shuffle(triples.begin(), triples.end(), rng);
        int m = std::uniform_int_distribution<int>(1, 14)(rng);
        triples.resize(m);
        Hypergraph h = Hypergraph::make(n, 3, std::move(triples));
        Sdrp s = max_sdrp(h);
        expect(s.certifiedMax, "uncertified SDRP below the exact cap");
        expect(hall_check(s.residual).ok, "Hall failure on random instance");
        ++tested;
    }
    std::cout << "  sdrp residuals: " << tested << " instances Hall-clean\n";
}

void liftSweep() {
    std::mt19937_64 rng(424242);
    for (int trial = 0; trial < 1000; ++trial) {
        int len = std::uniform_int_distribution<int>(3, 9)(rng);
        std::vector<Vertex> cyc(len);
        for (int i = 0; i < len; ++i) cyc[i] = i;
        std::shuffle(cyc.begin(), cyc.end(), rng);
        // each consecutive pair gets its own witness edge through a fresh
        // auxiliary vertex, either an SDRP representative or a hyperedge
        int aux = len;
        std::vector<VertexPair> aPairs;
        std::vector<Edge> bEdges;
        std::map<VertexPair, Edge> reps;
        for (int i = 0; i < len; ++i) {
            Vertex u = cyc[i], v = cyc[(i + 1) % len];
            if (u > v) std::swap(u, v);
            Edge e{u, v, aux++};
            std::sort(e.begin(), e.end());
            if (std::bernoulli_distribution(0.5)(rng)) {
                aPairs.push_back({u, v});
                reps[{u, v}] = e;
            } else {
                bEdges.push_back(e);
            }
        }
        MixedHypergraph m = MixedHypergraph::make(aux, 3, aPairs, bEdges);
        BergeWitness w = lift_to_berge(m, reps, cyc);
        expect(w.length() == len, "lift length mismatch");
        std::vector<Edge> pool = bEdges;
        for (const auto& [p, f] : reps) pool.push_back(f);
        Hypergraph host = Hypergraph::make(aux, 3, pool);
        expect(verify_witness(host, w).ok, "lifted witness failed verification");
    }
    std::cout << "  lift: 1000 instances lifted and verified\n";
}

void shadowSweep() {
    long long tested = 0;
    for (int w = 3; w <= 6; ++w) {
        std::vector<Edge> triples;
        for (int a = 0; a < w; ++a)
            for (int b = a + 1; b < w; ++b)
                for (int c = b + 1; c < w; ++c) triples.push_back({a, b, c});
        int m = static_cast<int>(triples.size());
        for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
            std::vector<Edge> es;
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1) es.push_back(triples[i]);
            Hypergraph h = Hypergraph::make(w, 3, std::move(es));
            ShadowIneqResult r = shadow_inequality_check(h, w);
            expect(r.holds, "shadow inequality fails at w=" + std::to_string(w));
            if (r.lhs == r.rhs)
                expect(r.equality != ShadowEquality::none,
                       "unclassified equality case at w=" + std::to_string(w));
            ++tested;
        }
    }
    std::cout << "  shadow inequality: " << tested << " hypergraphs clean\n";
}

void hamiltonSweep() {
    auto isK6MinusTriangle = [](const Graph& g) {
        if (g.n != 6 || g.edges.size() != 12) return false;
        std::vector<int> nonEdgeDeg(6, 0);
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                if (!g.hasEdge(u, v)) {
                    ++nonEdgeDeg[u];
                    ++nonEdgeDeg[v];
                }
        int deg2 = 0;
        for (int u = 0; u < 6; ++u) deg2 += nonEdgeDeg[u] == 2;
        return deg2 == 3;
    };
    long long k6Failures = 0, tested = 0;
    for (int n = 4; n <= 8; ++n) {
        std::vector<VertexPair> pairs;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
        int total = static_cast<int>(pairs.size());
        int maxMissing = total - (static_cast<int>(binom(n - 1, 2)) + 2);
        // enumerate by complement: choose up to maxMissing removed pairs
        std::vector<int> pick;
        auto runOne = [&]() {
            std::vector<char> gone(total, 0);
            for (int i : pick) gone[i] = 1;
            std::vector<VertexPair> es;
            for (int i = 0; i < total; ++i)
                if (!gone[i]) es.push_back(pairs[i]);
            Graph g = Graph::make(n, std::move(es));
            auto adj = g.adjacency();
            for (int u = 0; u < n; ++u)
                if (adj[u].size() < 2) return;
            ++tested;
            HamiltonResult r = is_hamilton_connected(g);
            if (isK6MinusTriangle(g)) {
                expect(!r.connected && !r.exceptionShape, "K6 - triangle misclassified");
                ++k6Failures;
            } else {
                expect(r.connected == !r.exceptionShape,
                       "dense non-exception graph not Hamilton-connected, n=" +
                           std::to_string(n));
            }
        };
        auto rec = [&](auto&& self, int from) -> void {
            runOne();
            if (static_cast<int>(pick.size()) == maxMissing) return;
            for (int i = from; i < total; ++i) {
                pick.push_back(i);
                self(self, i + 1);
                pick.pop_back();
            }
        };
        rec(rec, 0);
    }
    expect(k6Failures == 20, "expected exactly 20 labeled K6 - triangle copies");
    std::cout << "  hamilton: " << tested << " dense graphs, " << k6Failures
              << " exceptional K6 shapes\n";
}

void coreSweep() {
    std::mt19937_64 rng(777);
    for (int inst = 0; inst < 30; ++inst) {
        int n = std::uniform_int_distribution<int>(5, 12)(rng);
        std::vector<VertexPair> es;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (std::bernoulli_distribution(0.4)(rng)) es.push_back({u, v});
        Graph g = Graph::make(n, es);
        int alpha = std::uniform_int_distribution<int>(1, 3)(rng);
        std::vector<Vertex> base = core(g, alpha).surviving;
        for (int shuffle = 0; shuffle < 100; ++shuffle) {
            std::vector<Vertex> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<VertexPair> pes;
            for (auto [u, v] : es)
                pes.push_back({std::min(perm[u], perm[v]), std::max(perm[u], perm[v])});
            std::vector<Vertex> got = core(Graph::make(n, std::move(pes)), alpha).surviving;
            std::vector<Vertex> want;
            for (Vertex v : base) want.push_back(perm[v]);
            std::sort(want.begin(), want.end());
            std::sort(got.begin(), got.end());
            expect(got == want, "core changed under relabeling");
        }
    }
    std::cout << "  core: invariant under 100 relabelings on 30 instances\n";
}

bool criterion6() {
    kopylovSweep();
    sdrpSweep();
    liftSweep();
    shadowSweep();
    hamiltonSweep();
    coreSweep();
    return failures == 0;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <1..6>\n";
        return 2;
    }
    int which = std::atoi(argv[1]);
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    switch (which) {
        case 1: ok = criterion1(); break;
        case 2: ok = criterion2(); break;
        case 3: ok = criterion3(); break;
        case 4: ok = criterion4(); break;
        case 5: ok = criterion5(); break;
        case 6: ok = criterion6(); break;
        default: std::cerr << "usage: acceptance <1..6>\n"; return 2;
    }
    std::cout << "acceptance " << which << ": " << (ok ? "PASS" : "FAIL") << " ("
              << static_cast<long long>(seconds(t0)) << "s)\n";
    return ok ? 0 : 1;
}
