#include "levc/leverage.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

namespace levc {

void DegreeProfile::validate() const {
    if (center_degree < 1)
        throw DomainError("degree profile needs center degree >= 1 (leverage of an "
                          "isolated vertex is undefined)");
    if (static_cast<std::int64_t>(neighbor_degrees.size()) != center_degree)
        throw DomainError("degree profile needs exactly center_degree neighbor degrees");
    for (auto d : neighbor_degrees)
        if (d < 1) throw DomainError("neighbor degrees must be >= 1");
}

Rational leverage_of_profile(const DegreeProfile& p) {
    p.validate();
    const std::int64_t k = p.center_degree;
    Rational sum;
    for (auto d : p.neighbor_degrees)
        if (d != k) sum += Rational(k - d, k + d);
    return sum / Rational(k);
}

DegreeProfile profile_of(const Graph& g, VertexId v) {
    const auto& nbrs = g.neighbors(v);
    if (nbrs.empty())
        throw DomainError("vertex " + std::to_string(v) + " is isolated; leverage undefined");
    DegreeProfile p;
    p.center_degree = static_cast<std::int64_t>(nbrs.size());
    p.neighbor_degrees.reserve(nbrs.size());
    for (VertexId u : nbrs) p.neighbor_degrees.push_back(g.degree(u));
    return p;
}

Rational leverage_vertex(const Graph& g, VertexId v) {
    return leverage_of_profile(profile_of(g, v));
}

namespace {

Rational leverage_from_degrees(const Graph& g, const std::vector<std::int64_t>& deg,
                               VertexId v) {
    const std::int64_t k = deg[static_cast<std::size_t>(v)];
    Rational sum;
    for (VertexId u : g.neighbors(v)) {
        const std::int64_t d = deg[static_cast<std::size_t>(u)];
        if (d != k) sum += Rational(k - d, k + d);
    }
    return sum / Rational(k);
}

} // namespace

LeverageReport leverage_all(const Graph& g, unsigned threads) {
    const VertexId n = g.vertex_count();
    if (n == 0) throw DomainError("leverage report of an empty graph");
    const auto deg = degree_centrality(g);
    for (VertexId v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] == 0)
            throw DomainError("vertex " + std::to_string(v) + " is isolated; leverage undefined");

    LeverageReport rep;
    rep.values.resize(static_cast<std::size_t>(n));

    const unsigned workers =
        std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
    if (workers == 1) {
        for (VertexId v = 0; v < n; ++v)
            rep.values[static_cast<std::size_t>(v)] = leverage_from_degrees(g, deg, v);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const VertexId lo = n * w / workers;
            const VertexId hi = n * (w + 1) / workers;
            pool.emplace_back([&, lo, hi] {
                for (VertexId v = lo; v < hi; ++v)
                    rep.values[static_cast<std::size_t>(v)] = leverage_from_degrees(g, deg, v);
            });
        }
        for (auto& t : pool) t.join();
    }

    rep.min_value = rep.max_value = rep.values[0];
    std::unordered_set<Rational> distinct;
    for (VertexId v = 0; v < n; ++v) {
        const Rational& x = rep.values[static_cast<std::size_t>(v)];
        rep.sum += x;
        if (x < rep.min_value) {
            rep.min_value = x;
            rep.min_vertex = v;
        }
        if (x > rep.max_value) {
            rep.max_value = x;
            rep.max_vertex = v;
        }
        const int s = x.sign();
        if (s > 0)
            ++rep.positive_count;
        else if (s < 0)
            ++rep.negative_count;
        else
            ++rep.zero_count;
        distinct.insert(x);
    }
    rep.distinct_count = distinct.size();
    return rep;
}

std::vector<std::int64_t> degree_centrality(const Graph& g) {
    std::vector<std::int64_t> deg(static_cast<std::size_t>(g.vertex_count()));
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        deg[static_cast<std::size_t>(v)] = g.degree(v);
    return deg;
}

RealizedProfile realize_profile(const DegreeProfile& p) {
    p.validate();
    std::int64_t extra = 0;
    for (auto d : p.neighbor_degrees) extra += d - 1;
    RealizedProfile out;
    out.graph = Graph(1 + p.center_degree + extra);
    out.center = 0;
    VertexId next_leaf = 1 + p.center_degree;
    for (std::int64_t i = 0; i < p.center_degree; ++i) {
        const VertexId u = 1 + i;
        out.graph.add_edge(0, u);
        for (std::int64_t pad = 1; pad < p.neighbor_degrees[static_cast<std::size_t>(i)]; ++pad)
            out.graph.add_edge(u, next_leaf++);
    }
    return out;
}

} // namespace levc
