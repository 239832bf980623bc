#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "egr/binomial.hpp"
#include "egr/hypergraph.hpp"
#include "egr/structure.hpp"

using namespace egr;

namespace {

Graph randomGraph(std::mt19937& rng, int n, double p) {
    std::vector<VertexPair> es;
    std::uniform_real_distribution<double> u(0, 1);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (u(rng) < p) es.push_back({a, b});
    return Graph::make(n, std::move(es));
}

int componentCount(const Graph& g, int skip = -1) {
    auto adj = g.adjacency();
    std::vector<char> seen(g.n, 0);
    int comps = 0;
    for (int s = 0; s < g.n; ++s) {
        if (seen[s] || s == skip) continue;
        ++comps;
        std::vector<int> q = {s};
        seen[s] = 1;
        while (!q.empty()) {
            int x = q.back();
            q.pop_back();
            for (int y : adj[x])
                if (!seen[y] && y != skip) {
                    seen[y] = 1;
                    q.push_back(y);
                }
        }
    }
    return comps;
}

bool connectedOn(const std::vector<VertexPair>& edges, const std::vector<Vertex>& verts,
                 Vertex skip) {
    std::set<Vertex> vs(verts.begin(), verts.end());
    vs.erase(skip);
    if (vs.empty()) return true;
    std::set<Vertex> seen = {*vs.begin()};
    bool grew = true;
    while (grew) {
        grew = false;
        for (auto [a, b] : edges) {
            if (a == skip || b == skip) continue;
            if (seen.count(a) && !seen.count(b)) seen.insert(b), grew = true;
            if (seen.count(b) && !seen.count(a)) seen.insert(a), grew = true;
        }
    }
    return seen.size() == vs.size();
}

Graph graphFromMask(int n, uint32_t mask) {
    std::vector<VertexPair> es;
    int bit = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++bit)
            if ((mask >> bit) & 1) es.push_back({a, b});
    return Graph::make(n, std::move(es));
}

bool isTwoConnected(const Graph& g) {
    if (g.n < 3) return false;
    BlockDecomposition d = blocks(g);
    return d.blocks.size() == 1 && d.cutVertices.empty() &&
           static_cast<int>(d.blocks[0].size()) == g.n;
}

} // namespace

TEST_CASE("blocks on named graphs") {
    Graph bowtie = Graph::make(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    BlockDecomposition d = blocks(bowtie);
    REQUIRE(d.blocks.size() == 2);
    CHECK(d.blocks[0] == std::vector<Vertex>{0, 1, 2});
    CHECK(d.blocks[1] == std::vector<Vertex>{0, 3, 4});
    CHECK(d.cutVertices == std::vector<Vertex>{0});

    Graph path = Graph::make(3, {{0, 1}, {1, 2}});
    BlockDecomposition dp = blocks(path);
    REQUIRE(dp.blocks.size() == 2);
    CHECK(dp.blocks[0].size() == 2);
    CHECK(dp.blocks[1].size() == 2);
    CHECK(dp.cutVertices == std::vector<Vertex>{1});
}

TEST_CASE("blocks satisfy the decomposition invariants on random graphs") {
    std::mt19937 rng(2718);
    for (int trial = 0; trial < 400; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 10)(rng);
        Graph g = randomGraph(rng, n, std::uniform_real_distribution<double>(0, 1)(rng));
        BlockDecomposition d = blocks(g);

        // every edge in exactly one block
        std::multiset<VertexPair> all;
        for (const auto& es : d.blockEdges) all.insert(es.begin(), es.end());
        CHECK(all.size() == g.edges.size());
        for (auto e : g.edges) CHECK(all.count(e) == 1);

        // two blocks share at most one vertex; sum(|V_i|-1) <= n-1
        long long sum = 0;
        for (size_t i = 0; i < d.blocks.size(); ++i) {
            sum += static_cast<long long>(d.blocks[i].size()) - 1;
            for (size_t j = i + 1; j < d.blocks.size(); ++j) {
                std::vector<Vertex> inter;
                std::set_intersection(d.blocks[i].begin(), d.blocks[i].end(),
                                      d.blocks[j].begin(), d.blocks[j].end(),
                                      std::back_inserter(inter));
                CHECK(inter.size() <= 1);
            }
        }
        if (n >= 1) CHECK(sum <= n - 1);

        // blocks of size >= 3 are 2-connected
        for (size_t i = 0; i < d.blocks.size(); ++i)
            if (d.blocks[i].size() >= 3)
                for (Vertex v : d.blocks[i])
                    CHECK(connectedOn(d.blockEdges[i], d.blocks[i], v));

        // cut vertices against the component-count oracle
        for (int v = 0; v < n; ++v) {
            bool isolated = true;
            for (auto [a, b] : g.edges)
                if (a == v || b == v) isolated = false;
            bool cut = !isolated && componentCount(g, v) > componentCount(g);
            bool reported = std::binary_search(d.cutVertices.begin(), d.cutVertices.end(), v);
            CHECK(cut == reported);
        }
    }
}

TEST_CASE("core") {
    Graph c5 = Graph::make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(core(c5, 1).surviving.size() == 5);

    Graph k4 = Graph::make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(core(k4, 3).surviving.empty());

    Graph bowtie = Graph::make(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
    CoreResult b = core(bowtie, 2);
    CHECK(b.surviving.empty());
    CHECK(b.removalOrder.size() == 5);
    for (auto [v, deg] : b.removalOrder) CHECK(deg <= 2);

    SUBCASE("order independence") {
        std::mt19937 rng(100);
        for (int trial = 0; trial < 60; ++trial) {
            int n = std::uniform_int_distribution<int>(3, 9)(rng);
            Graph g = randomGraph(rng, n, 0.5);
            int alpha = std::uniform_int_distribution<int>(0, 3)(rng);
            CoreResult ref = core(g, alpha);
            // surviving degrees in the core exceed alpha
            for (Vertex u : ref.surviving) {
                int deg = 0;
                for (Vertex v : ref.surviving)
                    if (v != u && g.hasEdge(u, v)) ++deg;
                CHECK(deg >= alpha + 1);
            }
            for (int rep = 0; rep < 100; ++rep) {
                // random-order peel
                auto adj = g.adjacency();
                std::vector<int> deg(n);
                for (int u = 0; u < n; ++u) deg[u] = (int)adj[u].size();
                std::vector<char> rem(n, 0);
                while (true) {
                    std::vector<int> cand;
                    for (int u = 0; u < n; ++u)
                        if (!rem[u] && deg[u] <= alpha) cand.push_back(u);
                    if (cand.empty()) break;
                    int v = cand[std::uniform_int_distribution<size_t>(0, cand.size() - 1)(rng)];
                    rem[v] = 1;
                    for (int w : adj[v])
                        if (!rem[w]) --deg[w];
                }
                std::vector<Vertex> surv;
                for (int u = 0; u < n; ++u)
                    if (!rem[u]) surv.push_back(u);
                CHECK(surv == ref.surviving);
            }
        }
    }
}

TEST_CASE("find_kopylov_set") {
    SUBCASE("H_{9,6,2} and k=6") {
        // A = {0,1}, C = {2,3} complete; B = {4..8} joined to A
        std::vector<VertexPair> es;
        for (int a = 0; a < 4; ++a)
            for (int b = a + 1; b < 4; ++b) es.push_back({a, b});
        for (int v = 4; v < 9; ++v) es.push_back({0, v}), es.push_back({1, v});
        Graph g = Graph::make(9, es);
        KopylovResult r = find_kopylov_set(g, 6);
        REQUIRE(r.found);
        CHECK(r.s == 4);
        CHECK(r.S == std::vector<Vertex>{0, 1, 2, 3});
    }
    SUBCASE("preconditions") {
        std::vector<VertexPair> c6, c5;
        for (int i = 0; i < 6; ++i) c6.push_back({std::min(i, (i + 1) % 6), std::max(i, (i + 1) % 6)});
        for (int i = 0; i < 5; ++i) c5.push_back({std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5)});
        CHECK_THROWS_AS(find_kopylov_set(Graph::make(6, c6), 6), LongCycleError);
        try {
            find_kopylov_set(Graph::make(6, c6), 6);
        } catch (const LongCycleError& e) {
            CHECK(e.cycle().size() == 6);
        }
        CHECK_THROWS_AS(find_kopylov_set(Graph::make(5, c5), 6), std::invalid_argument);
        Graph disconnected = Graph::make(6, {{0, 1}, {2, 3}});
        CHECK_THROWS_AS(find_kopylov_set(disconnected, 6), std::invalid_argument);
    }
    SUBCASE("sweep: every valid (g, k=5) instance on n <= 6 yields a set") {
        int k = 5, t = 2;
        for (int n = 5; n <= 6; ++n) {
            int m = n * (n - 1) / 2;
            for (uint32_t mask = 0; mask < (1u << m); ++mask) {
                Graph g = graphFromMask(n, mask);
                if (!isTwoConnected(g)) continue;
                bool longCycle = false;
                try {
                    KopylovResult r = find_kopylov_set(g, k);
                    REQUIRE(r.found);
                    CHECK(r.s >= k - t);
                    CHECK(r.s <= k - 2);
                    CHECK((int)r.S.size() == r.s);
                    // survivors of the (k-s)-disintegration sit inside S
                    CoreResult c = core(g, k - r.s);
                    for (Vertex v : c.surviving)
                        CHECK(std::binary_search(r.S.begin(), r.S.end(), v));
                } catch (const LongCycleError&) {
                    longCycle = true;
                }
                (void)longCycle;
            }
        }
    }
}

TEST_CASE("is_hamilton_connected") {
    Graph k4 = Graph::make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    HamiltonResult h1 = is_hamilton_connected(k4);
    CHECK(h1.connected);
    CHECK_FALSE(h1.exceptionShape);

    Graph k4minus = Graph::make(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    HamiltonResult h2 = is_hamilton_connected(k4minus);
    CHECK_FALSE(h2.connected);
    CHECK(h2.exceptionShape);

    std::vector<VertexPair> c5;
    for (int i = 0; i < 5; ++i) c5.push_back({std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5)});
    HamiltonResult h3 = is_hamilton_connected(Graph::make(5, c5));
    CHECK_FALSE(h3.connected);
    CHECK_FALSE(h3.exceptionShape);

    CHECK_THROWS_AS(is_hamilton_connected(Graph::make(13, {})), std::invalid_argument);

    SUBCASE("dense graphs: connected outside the two exceptional shapes") {
        // K_6 minus a triangle has min degree 3 and C(5,2)+2 = 12 edges, yet no
        // spanning path joins any two vertices of the removed triangle (the
        // other three vertices are pairwise non-adjacent and cannot all sit in
        // non-consecutive interior positions of a 6-vertex path). It is the
        // only failure besides the K_{n-1}-plus-degree-2-vertex shape for
        // n <= 8, verified by exhaustive complement enumeration.
        auto isK6MinusTriangle = [](const Graph& g) {
            if (g.n != 6 || g.edges.size() != 12) return false;
            std::vector<int> nonEdgeDeg(6, 0);
            for (int u = 0; u < 6; ++u)
                for (int v = u + 1; v < 6; ++v)
                    if (!g.hasEdge(u, v)) { ++nonEdgeDeg[u]; ++nonEdgeDeg[v]; }
            int deg2 = 0;
            for (int u = 0; u < 6; ++u) deg2 += nonEdgeDeg[u] == 2;
            return deg2 == 3;  // complement of 3 edges forming a triangle
        };
        int k6Failures = 0;
        for (int n = 4; n <= 7; ++n) {
            int m = n * (n - 1) / 2;
            int minEdges = static_cast<int>(binom(n - 1, 2)) + 2;
            for (uint32_t mask = 0; mask < (1u << m); ++mask) {
                if (__builtin_popcount(mask) < minEdges) continue;
                Graph g = graphFromMask(n, mask);
                auto adj = g.adjacency();
                bool minDeg2 = true;
                for (int u = 0; u < n; ++u)
                    if (adj[u].size() < 2) minDeg2 = false;
                if (!minDeg2) continue;
                HamiltonResult r = is_hamilton_connected(g);
                if (isK6MinusTriangle(g)) {
                    CHECK_FALSE(r.connected);
                    CHECK_FALSE(r.exceptionShape);
                    ++k6Failures;
                } else {
                    CHECK(r.connected == !r.exceptionShape);
                }
            }
        }
        CHECK(k6Failures == 20);  // one per triangle on 6 labeled vertices
    }
}

TEST_CASE("shadow_inequality_check") {
    std::vector<Edge> k53;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b)
            for (int c = b + 1; c < 5; ++c) k53.push_back({a, b, c});
    ShadowIneqResult r1 = shadow_inequality_check(Hypergraph::make(5, 3, k53), 5);
    CHECK(r1.holds);
    CHECK(r1.lhs == r1.rhs);
    CHECK(r1.equality == ShadowEquality::completeHypergraph);

    ShadowIneqResult r2 = shadow_inequality_check(Hypergraph::make(5, 3, {}), 5);
    CHECK(r2.holds);
    CHECK(r2.lhs == 10);
    CHECK(r2.equality == ShadowEquality::completeComplement);

    ShadowIneqResult r3 = shadow_inequality_check(parse_hypergraph("3 3\n0 1 2\n"), 6);
    CHECK(r3.holds);
    CHECK(r3.lhs == 13);
    CHECK(r3.rhs == 20);
    CHECK(r3.equality == ShadowEquality::none);

    SUBCASE("exhaustive on w = 5, r = 3") {
        for (uint32_t mask = 0; mask < (1u << 10); ++mask) {
            std::vector<Edge> es;
            for (size_t i = 0; i < k53.size(); ++i)
                if ((mask >> i) & 1) es.push_back(k53[i]);
            ShadowIneqResult r = shadow_inequality_check(Hypergraph::make(5, 3, es), 5);
            CHECK(r.holds);
            if (r.lhs == r.rhs) CHECK(r.equality != ShadowEquality::none);
        }
    }
    SUBCASE("random instances up to w = 12") {
        std::mt19937 rng(31337);
        for (int trial = 0; trial < 20000; ++trial) {
            int r = std::uniform_int_distribution<int>(3, 5)(rng);
            int w = std::uniform_int_distribution<int>(r, 12)(rng);
            // random edge set on w vertices
            std::vector<Edge> es;
            int tries = std::uniform_int_distribution<int>(0, 30)(rng);
            std::set<Edge> seen;
            for (int i = 0; i < tries; ++i) {
                std::vector<Vertex> verts(w);
                for (int j = 0; j < w; ++j) verts[j] = j;
                std::shuffle(verts.begin(), verts.end(), rng);
                Edge e(verts.begin(), verts.begin() + r);
                std::sort(e.begin(), e.end());
                if (seen.insert(e).second) es.push_back(e);
            }
            std::sort(es.begin(), es.end());
            CHECK(shadow_inequality_check(Hypergraph::make(w, r, es), w).holds);
        }
    }
}

TEST_CASE("kk_fractional_bound") {
    CHECK(kk_fractional_bound(0, 3) == doctest::Approx(0.0));
    CHECK(kk_fractional_bound(4, 3) == doctest::Approx(6.0));
    CHECK(kk_fractional_bound(1, 3) == doctest::Approx(3.0));

    // independent oracle: long-double bisection on the same polynomial
    auto oracle = [](long long b, int r) {
        if (b == 0) return 0.0L;
        auto f = [&](long double x) {
            long double v = 1;
            for (int i = 0; i < r; ++i) v *= (x - i) / (i + 1);
            return v;
        };
        long double lo = r - 1, hi = r;
        while (f(hi) < (long double)b) hi *= 2;
        while (hi - lo > 1e-13L) {
            long double mid = (lo + hi) / 2;
            (f(mid) < (long double)b ? lo : hi) = mid;
        }
        long double x = (lo + hi) / 2;
        return x * (x - 1) / 2;
    };
    double frozen = static_cast<double>(oracle(2, 3));
    CHECK(kk_fractional_bound(2, 3) == doctest::Approx(frozen).epsilon(1e-7));
    CHECK(frozen > 3.0);
    CHECK(frozen < 6.0);
    for (long long b : {1, 2, 3, 5, 7, 10, 35, 100})
        for (int r : {2, 3, 4, 5})
            CHECK(kk_fractional_bound(b, r) ==
                  doctest::Approx(static_cast<double>(oracle(b, r))).epsilon(1e-7));

    SUBCASE("never exceeds the true minimum shadow (r=3, b<=6, w=7)") {
        std::vector<Edge> all;
        std::vector<uint64_t> pairMask;
        for (int a = 0; a < 7; ++a)
            for (int b = a + 1; b < 7; ++b)
                for (int c = b + 1; c < 7; ++c) {
                    all.push_back({a, b, c});
                    auto pid = [](int x, int y) { return x * 7 + y; };
                    pairMask.push_back((1ULL << pid(a, b)) | (1ULL << pid(a, c)) |
                                       (1ULL << pid(b, c)));
                }
        int m = static_cast<int>(all.size());
        for (int b = 1; b <= 6; ++b) {
            int minShadow = 1 << 30;
            std::vector<int> idx(b);
            for (int i = 0; i < b; ++i) idx[i] = i;
            while (true) {
                uint64_t u = 0;
                for (int i : idx) u |= pairMask[i];
                minShadow = std::min(minShadow, __builtin_popcountll(u));
                int i = b - 1;
                while (i >= 0 && idx[i] == m - b + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < b; ++j) idx[j] = idx[j - 1] + 1;
            }
            CHECK(kk_fractional_bound(b, 3) <= minShadow + 1e-9);
        }
    }
}
