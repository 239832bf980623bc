#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
    int exitCode = -1;
    std::string out;
};

// Runs the egr binary (path injected at build time) with stderr discarded.
RunResult run(const std::string& args) {
    std::string cmd = std::string(EGR_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    RunResult r;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, p)) r.out.append(buf, got);
    int status = pclose(p);
    r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool hasLine(const std::string& text, const std::string& line) {
    return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

std::string tmpFile(const std::string& name) { return "/tmp/egr_cli_" + name; }

} // namespace

TEST_CASE("table: pinned row and golden stability") {
    RunResult a = run("table --r 3 --k 7 --n 7..30");
    CHECK(a.exitCode == 0);
    CHECK(hasLine(a.out, "n\tf\tfr\tfrp\tregime"));
    CHECK(hasLine(a.out, "17\t46\t61\t61\ttheorem"));
    CHECK(hasLine(a.out, "7\t16\t21\t21\ttheorem"));
    RunResult b = run("table --r 3 --k 7 --n 7..30");
    CHECK(a.out == b.out); // byte-identical across runs

    RunResult j = run("table --r 3 --k 7 --n 17 --format json");
    CHECK(j.exitCode == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["schema"] == "berge-table/1");
    CHECK(doc["rows"][0]["fr"] == 61);

    // below k the bounds degenerate to the complete (hyper)graph counts
    RunResult t = run("table --r 3 --k 7 --n 5");
    CHECK(hasLine(t.out, "5\t10\t10\t10\ttrivial"));
}

TEST_CASE("construct + verify: extremal fixture holds, complete hypergraph fails") {
    std::string fix = tmpFile("c42.hg");
    CHECK(run("construct --kind 42 --n 17 --k 7 --r 3 -o " + fix).exitCode == 0);

    RunResult v = run("verify --k 7 " + fix);
    CHECK(v.exitCode == 0);
    CHECK(hasLine(v.out, "edges\t61"));
    CHECK(hasLine(v.out, "excess\t0"));
    CHECK(hasLine(v.out, "verdict\tConstruction42"));
    CHECK(hasLine(v.out, "longest_berge_cycle\t6"));

    std::string k73 = tmpFile("k73.hg");
    {
        std::ofstream f(k73);
        f << "7 3\n";
        for (int a = 0; a < 7; ++a)
            for (int b = a + 1; b < 7; ++b)
                for (int c = b + 1; c < 7; ++c) f << a << ' ' << b << ' ' << c << "\n";
    }
    RunResult w = run("verify --k 7 " + k73);
    CHECK(w.exitCode == 1);
    CHECK(hasLine(w.out, "longest_berge_cycle\t7"));
    CHECK(hasLine(w.out, "verdict\tNeither"));
    CHECK(w.out.find("certificate\nCYCLE 7\n") != std::string::npos);
    RunResult w2 = run("verify --k 7 " + k73);
    CHECK(w.out == w2.out);
}

TEST_CASE("structure subcommands on a small graph") {
    std::string g = tmpFile("c6chord.hg");
    {
        std::ofstream f(g);
        f << "6 2\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n0 3\n";
    }
    RunResult b = run("blocks " + g);
    CHECK(b.exitCode == 0);
    CHECK(hasLine(b.out, "block 0 1 2 3 4 5"));

    RunResult c = run("core --alpha 2 " + g);
    CHECK(c.exitCode == 0);
    CHECK(hasLine(c.out, "surviving")); // everything peels away

    RunResult s = run("sdrp " + g);
    CHECK(s.exitCode == 0);
    CHECK(hasLine(s.out, "hall\tok"));

    CHECK(run("construct --kind hnka --n 9 --k 5 --a 2 -o " + tmpFile("h952.hg")).exitCode == 0);
    RunResult kp = run("kopylov --k 5 " + tmpFile("h952.hg"));
    CHECK(kp.exitCode == 0);
    CHECK(hasLine(kp.out, "found\t1"));
    CHECK(hasLine(kp.out, "s\t3"));
}

TEST_CASE("hunt and scan: deterministic clean reports") {
    RunResult a = run("hunt --n 10 --k 7 --r 3 --trials 100 --seed 42");
    CHECK(a.exitCode == 0);
    CHECK(a.out.rfind("# berge-report/1\n", 0) == 0);
    CHECK(hasLine(a.out, "# violations: 0"));
    RunResult b = run("hunt --n 10 --k 7 --r 3 --trials 100 --seed 42 --threads 4");
    CHECK(a.out == b.out); // thread count must not change the report

    RunResult j = run("scan --r 3..4 --k 0..12 --n 0..40 --format json");
    CHECK(j.exitCode == 0);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["schema"] == "berge-report/1");
    CHECK(doc["violations"].empty());
    CHECK(doc["checked"].get<long long>() > 0);
}

TEST_CASE("search: values, extremal listing, budget exit code") {
    RunResult g = run("search --n 6 --k 5 --graph");
    CHECK(g.exitCode == 0);
    CHECK(hasLine(g.out, "value\t9"));
    CHECK(hasLine(g.out, "extremal\t2"));

    RunResult h = run("search --n 7 --k 7 --r 3");
    CHECK(h.exitCode == 0);
    CHECK(hasLine(h.out, "value\t21"));
    CHECK(hasLine(h.out, "exact\t1"));

    RunResult cut = run("search --n 7 --k 7 --r 3 --budget-nodes 50");
    CHECK(cut.exitCode == 3);
    CHECK(hasLine(cut.out, "exact\t0"));
    CHECK(hasLine(cut.out, "extremal\t0"));
}

TEST_CASE("usage errors and help") {
    CHECK(run("bogus").exitCode == 2);
    CHECK(run("table --r 3 --k 7 --n 9..7").exitCode == 2);
    CHECK(run("table --r 3 --k 7 --n x").exitCode == 2);
    CHECK(run("search --n 12 --k 7 --r 3").exitCode == 2); // over the cap without --force
    CHECK(run("kopylov --k 7 " + tmpFile("c6chord.hg")).exitCode == 2); // n < k
    CHECK(run("--help").exitCode == 0);
    CHECK(run("verify --k 7 /no/such/file").exitCode == 2);
}
