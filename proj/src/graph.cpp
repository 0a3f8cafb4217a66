#include "levc/graph.hpp"

#include <algorithm>
#include <queue>

namespace levc {

void Graph::add_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    auto& au = adj_[static_cast<std::size_t>(u)];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return;  // already present
    au.insert(it, v);
    auto& av = adj_[static_cast<std::size_t>(v)];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edges_;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& au = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(au.begin(), au.end(), v);
}

void Graph::set_label(VertexId v, std::string label) {
    check_vertex(v);
    if (labels_.empty()) labels_.resize(adj_.size());
    labels_[static_cast<std::size_t>(v)] = std::move(label);
}

const std::string& Graph::label(VertexId v) const {
    check_vertex(v);
    static const std::string empty;
    if (labels_.empty()) return empty;
    return labels_[static_cast<std::size_t>(v)];
}

bool is_regular(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    const auto d0 = g.degree(0);
    for (VertexId v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != d0) return false;
    return true;
}

bool is_connected(const Graph& g) {
    const VertexId n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<VertexId> q;
    q.push(0);
    seen[0] = 1;
    VertexId reached = 1;
    while (!q.empty()) {
        const VertexId u = q.front();
        q.pop();
        for (VertexId w : g.neighbors(u)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                q.push(w);
            }
        }
    }
    return reached == n;
}

Graph cartesian_product(const Graph& f, const Graph& h, std::int64_t vertex_budget) {
    const VertexId nf = f.vertex_count();
    const VertexId nh = h.vertex_count();
    if (nf == 0 || nh == 0) throw DomainError("cartesian product of an empty graph");
    if (nh != 0 && nf > vertex_budget / nh)
        throw ResourceError("cartesian product needs " + std::to_string(nf) + "*" +
                            std::to_string(nh) + " vertices, budget is " +
                            std::to_string(vertex_budget));

    Graph g(nf * nh);
    const bool labeled = f.has_labels() && h.has_labels();
    for (VertexId u = 0; u < nf; ++u) {
        for (VertexId v = 0; v < nh; ++v) {
            const VertexId id = u * nh + v;
            // Neighbors in the h coordinate first (same u), then the f
            // coordinate; add_edge keeps each list sorted either way.
            for (VertexId w : h.neighbors(v))
                if (w > v) g.add_edge(id, u * nh + w);
            for (VertexId x : f.neighbors(u))
                if (x > u) g.add_edge(id, x * nh + v);
            if (labeled) g.set_label(id, f.label(u) + "," + h.label(v));
        }
    }
    return g;
}

Graph iterated_product(const Graph& g, int m, std::int64_t vertex_budget) {
    if (m < 1) throw DomainError("iterated product requires m >= 1");
    Graph out = g;
    for (int i = 1; i < m; ++i) out = cartesian_product(out, g, vertex_budget);
    return out;
}

Graph path_power(VertexId n, int k) {
    if (n < 2) throw DomainError("path power requires n >= 2");
    if (k < 1) throw DomainError("path power requires k >= 1");
    Graph g(n);
    for (VertexId i = 0; i < n; ++i) {
        g.set_label(i, std::to_string(i + 1));
        for (VertexId j = i + 1; j < n && j <= i + k; ++j) g.add_edge(i, j);
    }
    return g;
}

} // namespace levc
