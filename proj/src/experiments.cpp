#include "levc/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <thread>

namespace levc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Rational> sorted_distinct(const std::vector<Rational>& values) {
    std::set<Rational> s(values.begin(), values.end());
    return std::vector<Rational>(s.begin(), s.end());
}

void finish_bound_flags(DistinctCountResult& r) {
    const BigInt count(static_cast<std::int64_t>(r.distinct_count));
    r.matches_bound = count == r.bound;
    r.exceeds_bound = count > r.bound;
}

} // namespace

DistinctCountResult count_distinct_bruteforce(const Graph& base, int m, int k,
                                              unsigned threads, std::int64_t vertex_budget) {
    const auto start = Clock::now();
    if (m < 1) throw DomainError("distinct count requires m >= 1");
    BigInt size = 1;
    for (int i = 0; i < m; ++i) size *= base.vertex_count();
    if (size > vertex_budget)
        throw ResourceError("lattice has " + size.str() + " vertices, budget is " +
                            std::to_string(vertex_budget) +
                            " (the class-enumeration method needs no graph)");

    const Graph g = iterated_product(base, m, vertex_budget);
    const LeverageReport rep = leverage_all(g, threads);

    DistinctCountResult r;
    r.m = m;
    r.n = static_cast<int>(base.vertex_count());
    r.k = k;
    r.method = "brute-force";
    r.distinct_values = sorted_distinct(rep.values);
    r.distinct_count = r.distinct_values.size();
    r.bound = polytopal_bound(m, k);
    finish_bound_flags(r);
    r.elapsed_seconds = seconds_since(start);
    return r;
}

DistinctCountResult count_distinct_classes(int m) {
    const auto start = Clock::now();
    std::vector<Rational> values;
    for (const LatticeClass& c : enumerate_classes(m))
        values.push_back(lattice_class_leverage(c));

    DistinctCountResult r;
    r.m = m;
    r.n = 0;  // n-independent for n >= 5
    r.k = 1;
    r.method = "class-enumeration";
    r.distinct_values = sorted_distinct(values);
    r.distinct_count = r.distinct_values.size();
    r.bound = triangle_bound(m);
    finish_bound_flags(r);
    r.elapsed_seconds = seconds_since(start);
    return r;
}

std::vector<DistinctCountResult> conjecture_scan(int k, VertexId n, int m_max,
                                                 unsigned threads,
                                                 std::int64_t vertex_budget) {
    if (k < 1) throw DomainError("conjecture scan requires k >= 1");
    if (n < 4LL * k + 1)
        throw DomainError("conjecture hypothesis needs n >= 4k+1 (n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
    if (m_max < 1) throw DomainError("conjecture scan requires m_max >= 1");
    const Graph base = path_power(n, k);
    std::vector<DistinctCountResult> out;
    for (int m = 1; m <= m_max; ++m)
        out.push_back(count_distinct_bruteforce(base, m, k, threads, vertex_budget));
    return out;
}

// ---- zero-leverage profile search ----------------------------------------

namespace {

// Enumerates nondecreasing (or strictly increasing) neighbor-degree tuples
// with exact zero leverage sum. The last position is solved algebraically:
// (k-d)/(k+d) = t  <=>  d = k(1-t)/(1+t).
class ZeroSearcher {
public:
    ZeroSearcher(std::int64_t k, std::int64_t bound, bool distinct)
        : k_(k), bound_(bound), distinct_(distinct), term_(static_cast<std::size_t>(bound) + 1) {
        for (std::int64_t d = 1; d <= bound_; ++d)
            term_[static_cast<std::size_t>(d)] = Rational(k_ - d, k_ + d);
    }

    // Explores all tuples whose first element is d1.
    void search_first(std::int64_t d1, std::vector<std::vector<std::int64_t>>& out) const {
        if (!feasible_step(Rational(), k_, d1)) return;
        std::vector<std::int64_t> prefix{d1};
        descend(term_[static_cast<std::size_t>(d1)], prefix, out);
    }

    std::int64_t k() const { return k_; }
    std::int64_t bound() const { return bound_; }

private:
    // With `remaining` terms still to place, all of value <= term(d), can the
    // total still straddle zero if this level picks d?
    bool feasible_step(const Rational& partial, std::int64_t remaining, std::int64_t d) const {
        const Rational& t = term_[static_cast<std::size_t>(d)];
        if (partial + Rational(remaining) * t < Rational(0)) return false;
        Rational floor = partial + t +
                         Rational(remaining - 1) * term_[static_cast<std::size_t>(bound_)];
        return floor <= Rational(0);
    }

    void descend(const Rational& partial, std::vector<std::int64_t>& prefix,
                 std::vector<std::vector<std::int64_t>>& out) const {
        const std::int64_t remaining = k_ - static_cast<std::int64_t>(prefix.size());
        const std::int64_t lo = prefix.back() + (distinct_ ? 1 : 0);
        if (remaining == 1) {
            solve_last(partial, lo, prefix, out);
            return;
        }
        for (std::int64_t d = lo; d <= bound_; ++d) {
            const Rational& t = term_[static_cast<std::size_t>(d)];
            // Terms only shrink as d grows; once the best case is negative,
            // larger d cannot recover.
            if (partial + Rational(remaining) * t < Rational(0)) break;
            if (partial + t + Rational(remaining - 1) * term_[static_cast<std::size_t>(bound_)] >
                Rational(0))
                continue;
            prefix.push_back(d);
            descend(partial + t, prefix, out);
            prefix.pop_back();
        }
    }

    void solve_last(const Rational& partial, std::int64_t lo,
                    std::vector<std::int64_t>& prefix,
                    std::vector<std::vector<std::int64_t>>& out) const {
        const Rational target = -partial;
        const Rational denom = Rational(1) + target;
        if (denom.sign() <= 0) return;
        const Rational d = Rational(k_) * (Rational(1) - target) / denom;
        if (!d.is_integer()) return;
        if (d.num() < lo || d.num() > bound_) return;
        prefix.push_back(d.num().convert_to<std::int64_t>());
        out.push_back(prefix);
        prefix.pop_back();
    }

    std::int64_t k_;
    std::int64_t bound_;
    bool distinct_;
    std::vector<Rational> term_;
};

} // namespace

ZeroSearchResult zero_search(std::int64_t k, std::int64_t bound, bool require_distinct,
                             unsigned threads) {
    const auto start = Clock::now();
    if (k < 1) throw DomainError("zero search requires k >= 1");
    if (bound < 1) throw DomainError("zero search requires bound >= 1");

    ZeroSearchResult result;
    result.center_degree = k;
    result.bound = bound;
    result.require_distinct = require_distinct;

    const ZeroSearcher searcher(k, bound, require_distinct);
    if (k == 1) {
        // Single neighbor: zero leverage iff its degree equals k = 1.
        if (bound >= 1) result.solutions.push_back({1});
        result.elapsed_seconds = seconds_since(start);
        return result;
    }

    // The first element must satisfy term(d1) >= 0, i.e. d1 <= k.
    const std::int64_t first_max = std::min(bound, k);
    std::vector<std::vector<std::vector<std::int64_t>>> buckets(
        static_cast<std::size_t>(first_max) + 1);
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(first_max)));
    if (workers == 1) {
        for (std::int64_t d1 = 1; d1 <= first_max; ++d1)
            searcher.search_first(d1, buckets[static_cast<std::size_t>(d1)]);
    } else {
        std::atomic<std::int64_t> next{1};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::int64_t d1 = next.fetch_add(1);
                    if (d1 > first_max) return;
                    searcher.search_first(d1, buckets[static_cast<std::size_t>(d1)]);
                }
            });
        }
        for (auto& t : pool) t.join();
    }
    for (auto& b : buckets)
        for (auto& sol : b) result.solutions.push_back(std::move(sol));

    result.elapsed_seconds = seconds_since(start);
    return result;
}

std::vector<ConvergenceRow> convergence_table(int m_max) {
    if (m_max < 1) throw DomainError("convergence table requires m_max >= 1");
    std::vector<ConvergenceRow> rows;
    rows.reserve(static_cast<std::size_t>(m_max));
    for (int m = 1; m <= m_max; ++m)
        rows.push_back({m, corner_leverage(m), inner_corner_leverage(m)});
    return rows;
}

// ---- seeded random corpus -------------------------------------------------

namespace {

// rng() % n: slightly biased but identical on every platform, unlike
// std::uniform_int_distribution.
std::int64_t pick(std::mt19937_64& rng, std::int64_t n) {
    return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
}

} // namespace

Graph random_connected_graph(std::mt19937_64& rng, VertexId n) {
    if (n < 2) throw DomainError("random connected graph requires n >= 2");
    Graph g(n);
    for (VertexId v = 1; v < n; ++v) g.add_edge(v, pick(rng, v));  // random recursive tree
    const std::int64_t extra = pick(rng, 2 * n + 1);
    for (std::int64_t e = 0; e < extra; ++e) {
        const VertexId u = pick(rng, n);
        const VertexId v = pick(rng, n);
        if (u != v) g.add_edge(u, v);
    }
    return g;
}

std::vector<Graph> random_connected_corpus(std::uint64_t seed, std::size_t count,
                                           VertexId min_n, VertexId max_n) {
    if (min_n < 2 || max_n < min_n) throw DomainError("bad corpus size range");
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_connected_graph(rng, min_n + pick(rng, max_n - min_n + 1)));
    return out;
}

} // namespace levc
