#include "levc/generators.hpp"

#include <numeric>
#include <string>

namespace levc {

namespace {

void number_labels(Graph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) g.set_label(v, std::to_string(v + 1));
}

void v_labels(Graph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) g.set_label(v, "v" + std::to_string(v + 1));
}

void require_min(VertexId n, VertexId min, const char* family) {
    if (n < min)
        throw DomainError(std::string(family) + " requires n >= " + std::to_string(min) +
                          ", got " + std::to_string(n));
}

} // namespace

std::int64_t MultipartiteSpec::total() const {
    return std::accumulate(part_sizes.begin(), part_sizes.end(), std::int64_t{0});
}

void MultipartiteSpec::validate() const {
    if (part_sizes.size() < 2) throw DomainError("multipartite spec needs at least two parts");
    for (auto t : part_sizes)
        if (t < 1) throw DomainError("multipartite part sizes must be >= 1");
}

Graph path(VertexId n) {
    require_min(n, 2, "path");
    Graph g(n);
    for (VertexId i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    number_labels(g);
    return g;
}

Graph cycle(VertexId n) {
    require_min(n, 3, "cycle");
    Graph g(n);
    for (VertexId i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    number_labels(g);
    return g;
}

Graph complete(VertexId n) {
    require_min(n, 2, "complete");
    Graph g(n);
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) g.add_edge(i, j);
    number_labels(g);
    return g;
}

Graph star(VertexId n) {
    require_min(n, 2, "star");
    Graph g(n);
    for (VertexId i = 1; i < n; ++i) g.add_edge(0, i);
    number_labels(g);
    return g;
}

Graph complete_multipartite(const MultipartiteSpec& spec) {
    spec.validate();
    Graph g(spec.total());
    std::vector<VertexId> start(spec.part_sizes.size() + 1, 0);
    for (std::size_t p = 0; p < spec.part_sizes.size(); ++p)
        start[p + 1] = start[p] + spec.part_sizes[p];
    for (std::size_t p = 0; p < spec.part_sizes.size(); ++p) {
        for (VertexId v = start[p]; v < start[p + 1]; ++v) {
            g.set_label(v, "part:" + std::to_string(p + 1));
            for (VertexId w = start[p + 1]; w < g.vertex_count(); ++w) g.add_edge(v, w);
        }
    }
    return g;
}

Graph k3_pendant() {
    Graph g(4);
    g.add_edge(0, 1);  // v1v2
    g.add_edge(0, 3);  // v1v4
    g.add_edge(1, 3);  // v2v4
    g.add_edge(1, 2);  // v2v3 (pendant)
    v_labels(g);
    return g;
}

Graph positive_construction_a(VertexId n) {
    if (n < 11) throw DomainError("construction a needs n >= 11 for positivity");
    Graph g(n);
    for (VertexId i = 0; i < n - 4; ++i)
        for (VertexId j = i + 1; j < n - 4; ++j) g.add_edge(i, j);
    for (VertexId i = 0; i < n - 4; ++i)
        for (VertexId j = n - 4; j < n - 1; ++j) g.add_edge(i, j);
    for (VertexId j = n - 4; j < n - 1; ++j) g.add_edge(j, n - 1);
    v_labels(g);
    return g;
}

Graph positive_construction_b(VertexId n) {
    if (n < 12) throw DomainError("construction b needs n >= 12 for positivity");
    Graph g(n);
    for (VertexId i = 0; i < n - 5; ++i)
        for (VertexId j = i + 1; j < n - 5; ++j) g.add_edge(i, j);
    for (VertexId i = 0; i < n - 5; ++i)
        for (VertexId j = n - 5; j < n - 1; ++j) g.add_edge(i, j);
    g.add_edge(n - 5, n - 3);  // v_{n-4} v_{n-2}
    g.add_edge(n - 4, n - 2);  // v_{n-3} v_{n-1}
    for (VertexId j = n - 5; j < n - 1; ++j) g.add_edge(j, n - 1);
    v_labels(g);
    return g;
}

Graph dumbbell_claw(VertexId n) {
    require_min(n, 5, "dumbbell_claw");
    // ids: u=0, a_1..a_n = 1..n, p_1=n+1, p_2=n+2, v=n+3, leaves n+4..n+6
    Graph g(n + 7);
    for (VertexId i = 0; i <= n; ++i)
        for (VertexId j = i + 1; j <= n; ++j)
            if (!(i == 1 && j == 2)) g.add_edge(i, j);  // clique minus a_1a_2
    g.add_edge(2, n + 1);      // a_2 - p_1 restores deg(a_2) = n
    g.add_edge(n + 1, n + 2);  // p_1 - p_2
    g.add_edge(n + 2, n + 3);  // p_2 - v
    for (VertexId l = n + 4; l <= n + 6; ++l) g.add_edge(n + 3, l);
    g.set_label(0, "u");
    for (VertexId i = 1; i <= n; ++i) g.set_label(i, "a" + std::to_string(i));
    g.set_label(n + 1, "p1");
    g.set_label(n + 2, "p2");
    g.set_label(n + 3, "v");
    for (VertexId l = n + 4; l <= n + 6; ++l)
        g.set_label(l, "l" + std::to_string(l - n - 3));
    return g;
}

Graph lattice(VertexId n, int m, std::int64_t vertex_budget) {
    return iterated_product(path(n), m, vertex_budget);
}

Graph path_power_lattice(VertexId n, int k, int m, std::int64_t vertex_budget) {
    return iterated_product(path_power(n, k), m, vertex_budget);
}

} // namespace levc
