#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "levc/closed_forms.hpp"
#include "levc/graph.hpp"
#include "levc/leverage.hpp"
#include "levc/rational.hpp"

namespace levc {

// Outcome of one distinct-leverage count. n == 0 marks an n-independent
// class-enumeration result. exceeds_bound flags counts above the binomial
// bound (possible only for k >= 2, where the bound is conjectural).
struct DistinctCountResult {
    int m = 0;
    int n = 0;
    int k = 1;
    std::string method;  // "brute-force" or "class-enumeration"
    std::size_t distinct_count = 0;
    BigInt bound;
    bool matches_bound = false;
    bool exceeds_bound = false;
    std::vector<Rational> distinct_values;  // sorted ascending
    double elapsed_seconds = 0.0;
};

struct ZeroSearchResult {
    std::int64_t center_degree = 0;  // k
    std::int64_t bound = 0;          // B
    bool require_distinct = true;
    // Sorted neighbor-degree multisets with leverage exactly 0, in
    // lexicographic order. Every multiset has size k and entries <= B.
    std::vector<std::vector<std::int64_t>> solutions;
    double elapsed_seconds = 0.0;
};

struct ConvergenceRow {
    int m = 0;
    Rational min_value;  // -1/(2m+1)
    Rational max_value;  // 1/(8m-2)
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // summary, or the first counterexample on failure
    double elapsed_seconds = 0.0;
};

// Builds iterated_product(base, m), runs leverage_all, and counts distinct
// exact values. `k` is recorded as the path-power order of the base (for
// the bound polytopal_bound(m, k)); pass k=1 for plain paths.
DistinctCountResult count_distinct_bruteforce(const Graph& base, int m, int k = 1,
                                              unsigned threads = 1,
                                              std::int64_t vertex_budget = kDefaultVertexBudget);

// Evaluates lattice_class_leverage over enumerate_classes(m); valid and
// n-independent for every n >= 5.
DistinctCountResult count_distinct_classes(int m);

// Brute-force distinct counts for xm P_n^k, m = 1..m_max, each compared to
// the conjectured polytopal bound. Reports evidence only; a count above the
// bound is flagged, never silently dropped. Requires n >= 4k+1.
std::vector<DistinctCountResult> conjecture_scan(int k, VertexId n, int m_max,
                                                 unsigned threads = 1,
                                                 std::int64_t vertex_budget = kDefaultVertexBudget);

// Exhaustive search for neighbor-degree multisets d_1 <= ... <= d_k <= B
// (strictly increasing when require_distinct) whose leverage sum is exactly
// zero. Deterministic lexicographic output; parallelizes over the first
// element when threads > 1 with no effect on the result.
ZeroSearchResult zero_search(std::int64_t k, std::int64_t bound, bool require_distinct,
                             unsigned threads = 1);

// Exact-rational extreme-leverage bracket of xm P_n per dimension count m.
std::vector<ConvergenceRow> convergence_table(int m_max);

// ---- verification suite -------------------------------------------------

// Seeded random connected graphs: random recursive spanning tree plus extra
// random edges. Uses its own bounded-pilfering of the engine output (no
// std::uniform_int_distribution) so corpora are identical across platforms.
Graph random_connected_graph(std::mt19937_64& rng, VertexId n);
std::vector<Graph> random_connected_corpus(std::uint64_t seed, std::size_t count,
                                           VertexId min_n, VertexId max_n);

// Named checks bundling the module invariants and the acceptance claims.
// Unknown names throw DomainError listing the available checks.
std::vector<std::string> available_checks();
const char* check_description(const std::string& name);
CheckResult run_check(const std::string& name);
std::vector<CheckResult> run_all_checks();

} // namespace levc
