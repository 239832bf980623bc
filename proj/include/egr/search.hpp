#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "egr/berge.hpp"
#include "egr/hypergraph.hpp"

namespace egr {

struct Violation {
    std::string claim;
    std::vector<long long> where; // parameter tuple, claim-specific order
    long long lhs = 0, rhs = 0;
    std::string detail; // certificate / serialized instance, optional
};

struct ScanReport {
    std::string grid;
    long long checked = 0, skipped = 0;
    double elapsedSeconds = 0;
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

struct SearchResult {
    long long value = 0;
    bool exact = false;
    long long nodesExpanded = 0;
    std::vector<Graph> extremalGraphs;           // graph engine
    std::vector<Hypergraph> extremalHypergraphs; // r-graph engine
    std::vector<MixedHypergraph> extremalMixed;  // mixed engine
};

/// Exhaustive EG(n,k): maximum edges of an n-vertex graph with no cycle of
/// length >= k, with all extremal graphs up to isomorphism. Set-enumeration
/// DFS over edges; a candidate edge survives only while the longest path
/// between its endpoints stays below k-1 edges. Requires 4 <= k, n <= 9.
SearchResult exact_eg_graph(int n, int k);

/// Branch-and-bound EG_r(n,k) over r-sets in colex order, pruning with the
/// count bound (chosen + addable candidates < incumbent) and per-candidate
/// anchored Berge-cycle decisions. Refuses instances with more than 165
/// potential edges unless budget.force is set; exact=false and the incumbent
/// lower bound are returned on budget exhaustion.
SearchResult exact_eg_hypergraph(int n, int k, int r, const SearchBudget& budget = {});

/// Same engine over mixed (2,r) families: maximum size m_r(n,k) with no
/// cycle of length >= k in the 2-shadow, respecting the Sperner property.
SearchResult exact_mr(int n, int k, int r, const SearchBudget& budget = {});

/// Samples `trials` uniformly random r-graphs with eval_fr(n,k,r)+1 edges
/// (mixed mode: greedily sampled Sperner families with eval_fr_plus+1
/// members) and asserts each contains a Berge cycle (mixed: shadow cycle) of
/// length >= k. Violations carry the serialized instance. Deterministic for
/// a given seed regardless of thread count.
ScanReport random_hunt(int n, int k, int r, long long trials, uint64_t seed,
                       bool mixed = false, int threads = 1);

struct ScanGrid {
    int rLo = 3, rHi = 10;
    int kLo = 0, kHi = 40;   // kLo = 0: start at r+4
    int nLo = 0, nHi = 300;  // nLo = 0: start at k
    int superaddMax = 300;   // n1, n2 range for the superadditivity claims
};

/// Claim names accepted by inequality_scan.
std::vector<std::string> all_scan_claims();

/// Pointwise exact-integer verification of the section-7 inequalities over
/// the grid. Empty selection means all claims. Out-of-regime points are
/// counted as skipped, never failed. The eq1060 check also re-verifies the
/// disjointness construction behind it by explicit enumeration for k <= 16.
ScanReport inequality_scan(const std::vector<std::string>& claims, const ScanGrid& grid);

// Report serialization; byte-stable (elapsed time is excluded).
// JSON schema "berge-report/1".
std::string report_tsv(const ScanReport& report);
std::string report_json(const ScanReport& report);

} // namespace egr
