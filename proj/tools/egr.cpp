#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "egr/berge.hpp"
#include "egr/binomial.hpp"
#include "egr/extremal.hpp"
#include "egr/search.hpp"
#include "egr/sdrp.hpp"
#include "egr/structure.hpp"
#include "json.hpp"

using namespace egr;
using nlohmann::json;

namespace {

// exit codes: 0 claim holds / success, 1 claim violated, 2 usage error,
// 3 budget exhausted
constexpr int kOk = 0, kViolated = 1, kUsage = 2, kBudget = 3;

struct Range {
    long long lo = 0, hi = 0;
};

Range parseRange(const std::string& s) {
    Range r;
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoll(s);
        } else {
            r.lo = std::stoll(s.substr(0, dots));
            r.hi = std::stoll(s.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("expected N or LO..HI, got '" + s + "'");
    }
    if (r.lo > r.hi) throw CLI::ValidationError("empty range '" + s + "'");
    return r;
}

std::string readInput(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Graph graphOf(const Hypergraph& h) {
    if (h.r != 2) throw std::runtime_error("expected a 2-uniform input (a graph)");
    std::vector<VertexPair> es;
    for (const Edge& e : h.edges) es.push_back({e[0], e[1]});
    return Graph::make(h.n, std::move(es));
}

std::string serializeGraph(const Graph& g) {
    std::vector<Edge> es;
    for (auto [u, v] : g.edges) es.push_back({u, v});
    return serialize(Hypergraph::make(g.n, 2, std::move(es)));
}

const char* verdictName(Verdict v) {
    switch (v) {
        case Verdict::Construction41: return "Construction41";
        case Verdict::Construction42: return "Construction42";
        default: return "Neither";
    }
}

void logConfig(const std::string& line) { std::cerr << "# config: " << line << "\n"; }

std::string trivialNote(int n, int k) { return n < k ? "trivial" : "theorem"; }

int cmdTable(int r, int k, Range nr, const std::string& format) {
    std::ostringstream cfg;
    cfg << "table r=" << r << " k=" << k << " n=" << nr.lo << ".." << nr.hi
        << " format=" << format;
    logConfig(cfg.str());
    json rows = json::array();
    if (format != "json") std::cout << "n\tf\tfr\tfrp\tregime\n";
    for (long long n = nr.lo; n <= nr.hi; ++n) {
        long long f, fr, frp;
        std::string regime;
        if (n < k) {
            // below k no cycle can reach length k: complete (hyper)graphs
            f = binom(n, 2);
            fr = binom(n, r);
            frp = std::max(f, fr);
            regime = "trivial";
        } else {
            f = eval_f_graph(static_cast<int>(n), k);
            fr = eval_fr(static_cast<int>(n), k, r);
            frp = eval_fr_plus(static_cast<int>(n), k, r);
            regime = ExtremalParams::make(static_cast<int>(n), k, r).theoremRegime()
                         ? "theorem"
                         : "outside";
        }
        if (format == "json") {
            rows.push_back({{"n", n}, {"f", f}, {"fr", fr}, {"frp", frp}, {"regime", regime}});
        } else {
            std::cout << n << '\t' << f << '\t' << fr << '\t' << frp << '\t' << regime << '\n';
        }
    }
    if (format == "json") {
        json out{{"schema", "berge-table/1"}, {"r", r}, {"k", k}, {"rows", rows}};
        std::cout << out.dump(2) << "\n";
    }
    return kOk;
}

int cmdConstruct(const std::string& kind, int n, int k, int r, int a, const std::string& outPath) {
    std::ostringstream cfg;
    cfg << "construct kind=" << kind << " n=" << n << " k=" << k << " r=" << r << " a=" << a;
    logConfig(cfg.str());
    std::string text;
    if (kind == "41") text = serialize(build_construction41(n, k, r));
    else if (kind == "42") text = serialize(build_construction42(n, k, r));
    else if (kind == "63") text = serialize(build_construction63(n, k, r));
    else if (kind == "hnka") text = serializeGraph(build_hnka(n, k, a));
    else throw CLI::ValidationError("unknown kind '" + kind + "'");
    if (outPath.empty() || outPath == "-") {
        std::cout << text;
    } else {
        std::ofstream out(outPath);
        if (!out) throw std::runtime_error("cannot write '" + outPath + "'");
        out << text;
    }
    return kOk;
}

int cmdVerify(int k, const std::string& path, const SearchBudget& budget,
              const std::string& format) {
    logConfig("verify k=" + std::to_string(k) + " file=" + path);
    Hypergraph h = parse_hypergraph(readInput(path));
    BergeSearchResult longest = longest_berge(h, BergeWitness::Kind::cycle, budget);
    RecognitionResult rec = h.r >= 3 ? recognize_extremal(h, k)
                                     : RecognitionResult{};
    long long fr = (h.r >= 3 && k >= h.r + 3) ? eval_fr(h.n, k, h.r) : -1;
    bool violated = longest.length >= k;
    std::string witnessText;
    if (violated && longest.witness) {
        VerifyResult vr = verify_witness(h, *longest.witness);
        if (!vr) throw std::logic_error("certificate failed re-verification: " + vr.reason);
        witnessText = serialize(*longest.witness);
    }
    if (format == "json") {
        json out{{"schema", "berge-verify/1"},
                 {"n", h.n},
                 {"r", h.r},
                 {"edges", h.size()},
                 {"k", k},
                 {"fr", fr},
                 {"excess", fr < 0 ? json() : json(h.size() - fr)},
                 {"longest_berge_cycle", longest.length},
                 {"exact", longest.exact},
                 {"verdict", verdictName(rec.verdict)},
                 {"certificate", witnessText}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "n\t" << h.n << "\nr\t" << h.r << "\nedges\t" << h.size() << "\nk\t" << k
                  << "\n";
        if (fr >= 0) std::cout << "fr\t" << fr << "\nexcess\t" << h.size() - fr << "\n";
        std::cout << "longest_berge_cycle\t" << longest.length << "\nexact\t" << longest.exact
                  << "\nverdict\t" << verdictName(rec.verdict) << "\n";
        if (!witnessText.empty()) std::cout << "certificate\n" << witnessText;
    }
    if (!longest.exact) return kBudget;
    return violated ? kViolated : kOk;
}

int cmdSdrp(const std::string& path) {
    logConfig("sdrp file=" + path);
    Hypergraph h = parse_hypergraph(readInput(path));
    Sdrp s = max_sdrp(h);
    HallCheckResult hall = hall_check(s.residual);
    std::cout << "size\t" << s.size() << "\ncertified\t" << s.certifiedMax << "\nhall\t"
              << (hall.ok ? "ok" : "violated") << "\n";
    std::cout << serialize(s);
    return hall.ok ? kOk : kViolated;
}

int cmdCore(int alpha, const std::string& path) {
    logConfig("core alpha=" + std::to_string(alpha) + " file=" + path);
    Graph g = graphOf(parse_hypergraph(readInput(path)));
    CoreResult c = core(g, alpha);
    std::cout << "surviving";
    for (Vertex v : c.surviving) std::cout << ' ' << v;
    std::cout << "\n";
    for (auto [v, d] : c.removalOrder) std::cout << "removed\t" << v << "\t" << d << "\n";
    return kOk;
}

int cmdBlocks(const std::string& path) {
    logConfig("blocks file=" + path);
    Graph g = graphOf(parse_hypergraph(readInput(path)));
    BlockDecomposition b = blocks(g);
    for (const auto& blk : b.blocks) {
        std::cout << "block";
        for (Vertex v : blk) std::cout << ' ' << v;
        std::cout << "\n";
    }
    std::cout << "cut";
    for (Vertex v : b.cutVertices) std::cout << ' ' << v;
    std::cout << "\n";
    return kOk;
}

int cmdKopylov(int k, const std::string& path) {
    logConfig("kopylov k=" + std::to_string(k) + " file=" + path);
    Graph g = graphOf(parse_hypergraph(readInput(path)));
    KopylovResult kr = find_kopylov_set(g, k);
    if (!kr.found) {
        std::cout << "found\t0\n";
        return kViolated;
    }
    std::cout << "found\t1\ns\t" << kr.s << "\nS";
    for (Vertex v : kr.S) std::cout << ' ' << v;
    std::cout << "\n";
    return kOk;
}

int cmdHunt(int n, int k, int r, long long trials, uint64_t seed, bool mixed, int threads,
            const std::string& format) {
    std::ostringstream cfg;
    cfg << "hunt n=" << n << " k=" << k << " r=" << r << " trials=" << trials
        << " seed=" << seed << " mixed=" << mixed << " threads=" << threads;
    logConfig(cfg.str());
    ScanReport rep = random_hunt(n, k, r, trials, seed, mixed, threads);
    std::cout << (format == "json" ? report_json(rep) : report_tsv(rep));
    return rep.ok() ? kOk : kViolated;
}

int cmdScan(const std::string& claims, Range rr, Range kr, Range nr, const std::string& format) {
    std::ostringstream cfg;
    cfg << "scan claims=" << (claims.empty() ? "all" : claims) << " r=" << rr.lo << ".." << rr.hi
        << " k=" << kr.lo << ".." << kr.hi << " n=" << nr.lo << ".." << nr.hi;
    logConfig(cfg.str());
    std::vector<std::string> sel;
    std::stringstream ss(claims);
    for (std::string c; std::getline(ss, c, ',');)
        if (!c.empty()) sel.push_back(c);
    ScanGrid grid;
    grid.rLo = static_cast<int>(rr.lo);
    grid.rHi = static_cast<int>(rr.hi);
    grid.kLo = static_cast<int>(kr.lo);
    grid.kHi = static_cast<int>(kr.hi);
    grid.nLo = static_cast<int>(nr.lo);
    grid.nHi = static_cast<int>(nr.hi);
    grid.superaddMax = grid.nHi;
    ScanReport rep = inequality_scan(sel, grid);
    std::cout << (format == "json" ? report_json(rep) : report_tsv(rep));
    return rep.ok() ? kOk : kViolated;
}

int cmdSearch(int n, int k, int r, bool graph, bool mixed, const SearchBudget& budget,
              const std::string& format) {
    std::ostringstream cfg;
    cfg << "search n=" << n << " k=" << k << " r=" << r << " graph=" << graph
        << " mixed=" << mixed << " budget-nodes=" << budget.maxNodes
        << " budget-seconds=" << budget.maxSeconds << " force=" << budget.force;
    logConfig(cfg.str());
    SearchResult res;
    if (graph) res = exact_eg_graph(n, k);
    else if (mixed) res = exact_mr(n, k, r, budget);
    else res = exact_eg_hypergraph(n, k, r, budget);
    size_t extremal = res.extremalGraphs.size() + res.extremalHypergraphs.size() +
                      res.extremalMixed.size();
    if (format == "json") {
        json ex = json::array();
        for (const Graph& g : res.extremalGraphs) ex.push_back(serializeGraph(g));
        for (const Hypergraph& h : res.extremalHypergraphs) ex.push_back(serialize(h));
        for (const MixedHypergraph& m : res.extremalMixed) ex.push_back(serialize(m));
        json out{{"schema", "berge-search/1"}, {"value", res.value},   {"exact", res.exact},
                 {"nodes", res.nodesExpanded}, {"extremal", extremal}, {"instances", ex}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "value\t" << res.value << "\nexact\t" << res.exact << "\nnodes\t"
                  << res.nodesExpanded << "\nextremal\t" << extremal << "\n";
        for (const Graph& g : res.extremalGraphs) std::cout << "---\n" << serializeGraph(g);
        for (const Hypergraph& h : res.extremalHypergraphs) std::cout << "---\n" << serialize(h);
        for (const MixedHypergraph& m : res.extremalMixed) std::cout << "---\n" << serialize(m);
    }
    return res.exact ? kOk : kBudget;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Berge-cycle extremal numbers: tables, constructions, verification, search"};
    app.require_subcommand(1);

    int r = 3, k = 7, a = 1, alpha = 1, threads = 1;
    std::string nRangeS = "0..0", rRangeS = "3..10", kRangeS = "0..40", nScanS = "0..300";
    std::string kind, file = "-", outPath, format = "tsv", claims;
    long long trials = 1000;
    uint64_t seed = 0;
    bool mixed = false, graphMode = false;
    SearchBudget budget;

    auto addFormat = [&](CLI::App* c) {
        c->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"tsv", "json"}));
    };
    auto addBudget = [&](CLI::App* c) {
        c->add_option("--budget-nodes", budget.maxNodes, "node budget (0 = unlimited)");
        c->add_option("--budget-seconds", budget.maxSeconds, "time budget (0 = unlimited)");
        c->add_flag("--force", budget.force, "lift exact-search instance caps");
    };

    CLI::App* table = app.add_subcommand("table", "bound functions over an n range (TSV)");
    table->add_option("--r", r, "uniformity")->required();
    table->add_option("--k", k, "forbidden cycle length")->required();
    table->add_option("--n", nRangeS, "n or lo..hi")->required();
    addFormat(table);

    CLI::App* construct = app.add_subcommand("construct", "emit an extremal construction");
    construct->add_option("--kind", kind, "41 | 42 | 63 | hnka")->required();
    construct->add_option("--n", nRangeS, "vertex count")->required();
    construct->add_option("--k", k, "forbidden cycle length")->required();
    construct->add_option("--r", r, "uniformity (41/42/63)");
    construct->add_option("--a", a, "H_{n,k,a} parameter");
    construct->add_option("-o,--out", outPath, "output file (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "longest Berge cycle and recognition");
    verify->add_option("--k", k, "forbidden cycle length")->required();
    verify->add_option("file", file, "hypergraph file, or - for stdin");
    addBudget(verify);
    addFormat(verify);

    CLI::App* sdrp = app.add_subcommand("sdrp", "maximum SDRP and Hall check");
    sdrp->add_option("file", file, "hypergraph file, or - for stdin");

    CLI::App* coreC = app.add_subcommand("core", "(alpha+1)-core of a graph");
    coreC->add_option("--alpha", alpha, "degree threshold")->required();
    coreC->add_option("file", file, "2-uniform hypergraph file, or - for stdin");

    CLI::App* blocksC = app.add_subcommand("blocks", "2-connected block decomposition");
    blocksC->add_option("file", file, "2-uniform hypergraph file, or - for stdin");

    CLI::App* kop = app.add_subcommand("kopylov", "disintegration set of a 2-connected graph");
    kop->add_option("--k", k, "forbidden cycle length")->required();
    kop->add_option("file", file, "2-uniform hypergraph file, or - for stdin");

    CLI::App* hunt = app.add_subcommand("hunt", "randomized counterexample hunt");
    hunt->add_option("--n", nRangeS, "vertex count")->required();
    hunt->add_option("--k", k, "forbidden cycle length")->required();
    hunt->add_option("--r", r, "uniformity")->required();
    hunt->add_option("--trials", trials, "number of trials");
    hunt->add_option("--seed", seed, "RNG seed");
    hunt->add_option("--threads", threads, "worker threads");
    hunt->add_flag("--mixed", mixed, "hunt the mixed-hypergraph theorem");
    addFormat(hunt);

    CLI::App* scan = app.add_subcommand("scan", "exact-integer inequality scan");
    scan->add_option("--claims", claims, "comma-separated claim names (default all)");
    scan->add_option("--r", rRangeS, "r range lo..hi");
    scan->add_option("--k", kRangeS, "k range lo..hi (lo 0 = r+4)");
    scan->add_option("--n", nScanS, "n range lo..hi (lo 0 = k)");
    addFormat(scan);

    CLI::App* search = app.add_subcommand("search", "exact extremal-number search");
    search->add_option("--n", nRangeS, "vertex count")->required();
    search->add_option("--k", k, "forbidden cycle length")->required();
    search->add_option("--r", r, "uniformity (ignored with --graph)");
    search->add_flag("--graph", graphMode, "graph case EG(n,k)");
    search->add_flag("--mixed", mixed, "mixed case m_r(n,k)");
    addBudget(search);
    addFormat(search);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*table) return cmdTable(r, k, parseRange(nRangeS), format);
        if (*construct)
            return cmdConstruct(kind, static_cast<int>(parseRange(nRangeS).lo), k, r, a, outPath);
        if (*verify) return cmdVerify(k, file, budget, format);
        if (*sdrp) return cmdSdrp(file);
        if (*coreC) return cmdCore(alpha, file);
        if (*blocksC) return cmdBlocks(file);
        if (*kop) return cmdKopylov(k, file);
        if (*hunt)
            return cmdHunt(static_cast<int>(parseRange(nRangeS).lo), k, r, trials, seed, mixed,
                           threads, format);
        if (*scan)
            return cmdScan(claims, parseRange(rRangeS), parseRange(kRangeS), parseRange(nScanS),
                           format);
        if (*search)
            return cmdSearch(static_cast<int>(parseRange(nRangeS).lo), k, r, graphMode, mixed,
                             budget, format);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const LongCycleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
