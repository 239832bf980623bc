#include "egr/hypergraph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "egr/binomial.hpp"

namespace egr {

namespace {

void checkEdge(const Edge& e, int n, int r, int line = -1) {
    auto fail = [&](const std::string& msg) -> void {
        if (line >= 0) throw ParseError(line, msg);
        throw std::invalid_argument(msg);
    };
    if (static_cast<int>(e.size()) != r)
        fail("edge has " + std::to_string(e.size()) + " vertices, expected r=" + std::to_string(r));
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] >= n)
            fail("vertex id " + std::to_string(e[i]) + " out of range [0," + std::to_string(n) + ")");
        if (i > 0 && e[i] == e[i - 1]) fail("repeated vertex in edge");
    }
}

} // namespace

Hypergraph Hypergraph::make(int n, int r, std::vector<Edge> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        checkEdge(e, n, r);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    Hypergraph h;
    h.n = n;
    h.r = r;
    h.edges = std::move(edges);
    return h;
}

bool Hypergraph::hasEdge(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

Graph Graph::make(int n, std::vector<VertexPair> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u == v) throw std::invalid_argument("loop edge");
        if (u < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    return g;
}

bool Graph::hasEdge(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), VertexPair{u, v});
}

std::vector<std::vector<Vertex>> Graph::adjacency() const {
    std::vector<std::vector<Vertex>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

MixedHypergraph MixedHypergraph::make(int n, int r, std::vector<VertexPair> pairs,
                                      std::vector<Edge> hypers) {
    Graph a = Graph::make(n, std::move(pairs));
    Hypergraph b = Hypergraph::make(n, r, std::move(hypers));
    for (auto [u, v] : a.edges) {
        for (const auto& f : b.edges) {
            if (std::binary_search(f.begin(), f.end(), u) &&
                std::binary_search(f.begin(), f.end(), v))
                throw std::invalid_argument("Sperner property violated: pair {" +
                                            std::to_string(u) + "," + std::to_string(v) +
                                            "} lies inside a hyperedge");
        }
    }
    MixedHypergraph m;
    m.n = n;
    m.r = r;
    m.pairEdges = std::move(a.edges);
    m.hyperEdges = std::move(b.edges);
    return m;
}

Graph MixedHypergraph::shadowGraph() const {
    std::set<VertexPair> es(pairEdges.begin(), pairEdges.end());
    for (const auto& f : hyperEdges)
        for (size_t i = 0; i < f.size(); ++i)
            for (size_t j = i + 1; j < f.size(); ++j) es.insert({f[i], f[j]});
    return Graph::make(n, std::vector<VertexPair>(es.begin(), es.end()));
}

bool EdgeSetFamily::contains(const Edge& e) const {
    return std::binary_search(members.begin(), members.end(), e);
}

namespace {

void subsetsRec(const Edge& e, int p, size_t from, Edge& cur, std::set<Edge>& out) {
    if (static_cast<int>(cur.size()) == p) {
        out.insert(cur);
        return;
    }
    for (size_t i = from; i + (p - cur.size()) <= e.size(); ++i) {
        cur.push_back(e[i]);
        subsetsRec(e, p, i + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

EdgeSetFamily shadow(const Hypergraph& h, int p) {
    if (p < 1 || p > h.r) throw std::invalid_argument("shadow: p out of range [1,r]");
    std::set<Edge> out;
    Edge cur;
    for (const auto& e : h.edges) subsetsRec(e, p, 0, cur, out);
    EdgeSetFamily fam;
    fam.p = p;
    fam.members.assign(out.begin(), out.end());
    return fam;
}

Hypergraph shadowAsHypergraph(const Hypergraph& h, int p) {
    EdgeSetFamily fam = shadow(h, p);
    return Hypergraph::make(h.n, p, std::move(fam.members));
}

EdgeSetFamily complement_shadow2(const Hypergraph& h, int w) {
    if (w < h.n) throw std::invalid_argument("complement_shadow2: w smaller than vertex set");
    EdgeSetFamily sh = shadow(Hypergraph::make(w, h.r, h.edges), std::min(2, h.r));
    // r = 2 degenerates: the shadow is the edge set itself.
    EdgeSetFamily out;
    out.p = 2;
    for (int u = 0; u < w; ++u)
        for (int v = u + 1; v < w; ++v)
            if (!sh.contains({u, v})) out.members.push_back({u, v});
    return out;
}

namespace {

// Strips comments, splits into whitespace-separated integer tokens per line.
struct LineReader {
    std::istream& in;
    int lineNo = 0;
    bool next(std::vector<long long>& tokens) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineNo;
            auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream ls(line);
            tokens.clear();
            std::string tok;
            bool bad = false;
            while (ls >> tok) {
                try {
                    size_t pos = 0;
                    long long v = std::stoll(tok, &pos);
                    if (pos != tok.size()) bad = true;
                    tokens.push_back(v);
                } catch (...) {
                    bad = true;
                }
                if (bad) throw ParseError(lineNo, "malformed token '" + tok + "'");
            }
            if (!tokens.empty()) return true;
        }
        return false;
    }
};

} // namespace

Hypergraph parse_hypergraph(std::istream& in) {
    LineReader rd{in};
    std::vector<long long> toks;
    if (!rd.next(toks)) throw ParseError(rd.lineNo == 0 ? 1 : rd.lineNo, "missing header");
    if (toks.size() != 2) throw ParseError(rd.lineNo, "malformed header, expected 'n r'");
    long long n = toks[0], r = toks[1];
    if (n < 0 || r < 2 || n > 1'000'000 || r > 64)
        throw ParseError(rd.lineNo, "malformed header values");
    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (rd.next(toks)) {
        Edge e(toks.begin(), toks.end());
        std::sort(e.begin(), e.end());
        checkEdge(e, static_cast<int>(n), static_cast<int>(r), rd.lineNo);
        if (!seen.insert(e).second) throw ParseError(rd.lineNo, "duplicate edge");
        edges.push_back(std::move(e));
    }
    return Hypergraph::make(static_cast<int>(n), static_cast<int>(r), std::move(edges));
}

Hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    return parse_hypergraph(in);
}

std::string serialize(const Hypergraph& h) {
    std::ostringstream out;
    out << h.n << ' ' << h.r << '\n';
    for (const auto& e : h.edges) {
        for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
    return out.str();
}

MixedHypergraph parse_mixed(std::istream& in) {
    std::string line;
    int lineNo = 0;
    long long n = -1, r = -1;
    std::vector<VertexPair> pairs;
    std::vector<Edge> hypers;
    bool haveHeader = false;
    while (std::getline(in, line)) {
        ++lineNo;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (!haveHeader) {
            long long two = -1;
            if (!(ls >> n >> two >> r)) {
                if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                throw ParseError(lineNo, "malformed mixed header, expected 'n 2 r'");
            }
            if (two != 2 || n < 0 || r < 3)
                throw ParseError(lineNo, "malformed mixed header values");
            haveHeader = true;
            continue;
        }
        std::string tag;
        if (!(ls >> tag)) continue;
        std::vector<Vertex> vs;
        long long v;
        while (ls >> v) vs.push_back(static_cast<Vertex>(v));
        if (tag == "P") {
            if (vs.size() != 2) throw ParseError(lineNo, "pair edge needs exactly 2 vertices");
            pairs.push_back({vs[0], vs[1]});
        } else if (tag == "H") {
            Edge e(vs.begin(), vs.end());
            std::sort(e.begin(), e.end());
            checkEdge(e, static_cast<int>(n), static_cast<int>(r), lineNo);
            hypers.push_back(std::move(e));
        } else {
            throw ParseError(lineNo, "unknown edge tag '" + tag + "'");
        }
    }
    if (!haveHeader) throw ParseError(lineNo == 0 ? 1 : lineNo, "missing header");
    return MixedHypergraph::make(static_cast<int>(n), static_cast<int>(r), std::move(pairs),
                                 std::move(hypers));
}

MixedHypergraph parse_mixed(const std::string& text) {
    std::istringstream in(text);
    return parse_mixed(in);
}

std::string serialize(const MixedHypergraph& m) {
    std::ostringstream out;
    out << m.n << " 2 " << m.r << '\n';
    for (auto [u, v] : m.pairEdges) out << "P " << u << ' ' << v << '\n';
    for (const auto& e : m.hyperEdges) {
        out << 'H';
        for (Vertex v : e) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

long long edgeRank(const Edge& e) {
    long long rank = 0;
    for (size_t i = 0; i < e.size(); ++i) rank += binom(e[i], static_cast<long long>(i) + 1);
    return rank;
}

Edge edgeUnrank(long long rank, int r) {
    Edge e(r);
    for (int i = r; i >= 1; --i) {
        int v = i - 1;
        while (binom(v + 1, i) <= rank) ++v;
        e[i - 1] = v;
        rank -= binom(v, i);
    }
    return e;
}

std::vector<uint64_t> edgeBitset(const Hypergraph& h) {
    if (h.n > 16) throw std::invalid_argument("edgeBitset: n must be at most 16");
    long long total = binom(h.n, h.r);
    std::vector<uint64_t> bits((total + 63) / 64, 0);
    for (const auto& e : h.edges) {
        long long rk = edgeRank(e);
        bits[rk / 64] |= (uint64_t{1} << (rk % 64));
    }
    return bits;
}

Hypergraph hypergraphFromBitset(int n, int r, const std::vector<uint64_t>& bits) {
    long long total = binom(n, r);
    std::vector<Edge> edges;
    for (long long rk = 0; rk < total; ++rk)
        if (bits[rk / 64] >> (rk % 64) & 1) edges.push_back(edgeUnrank(rk, r));
    return Hypergraph::make(n, r, std::move(edges));
}

} // namespace egr
