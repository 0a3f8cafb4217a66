#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "levc/edge_list.hpp"
#include "levc/experiments.hpp"
#include "levc/generators.hpp"
#include "levc/graph.hpp"

using namespace levc;

namespace {

// Full-scan symmetry audit: u in adj(v) iff v in adj(u), lists sorted and
// duplicate-free.
void audit_structure(const Graph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& nbrs = g.neighbors(v);
        CHECK(std::is_sorted(nbrs.begin(), nbrs.end()));
        CHECK(std::adjacent_find(nbrs.begin(), nbrs.end()) == nbrs.end());
        for (VertexId u : nbrs) {
            CHECK(u != v);
            CHECK(g.has_edge(u, v));
        }
    }
}

} // namespace

TEST_CASE("add_edge basics") {
    Graph g(2);
    g.add_edge(0, 1);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 1);
    g.add_edge(1, 0);  // idempotent
    CHECK(g.degree(0) == 1);
    CHECK(g.edge_count() == 1);

    Graph h(4);
    CHECK_THROWS_AS(h.add_edge(3, 3), DomainError);
    CHECK_THROWS_AS(h.add_edge(0, 4), DomainError);
    CHECK_THROWS_AS(h.add_edge(-1, 0), DomainError);
    CHECK_THROWS_AS(h.degree(17), DomainError);
}

TEST_CASE("degree examples") {
    CHECK(star(5).degree(0) == 4);
    CHECK(path(5).degree(2) == 2);
    // corner (1,1) of x2 P_5 is id 0 under the row-major convention
    CHECK(lattice(5, 2).degree(0) == 2);
}

TEST_CASE("cartesian product examples") {
    const Graph c4 = cartesian_product(path(2), path(2));
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edge_count() == 4);
    for (VertexId v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

    const Graph grid = cartesian_product(path(5), path(5));
    CHECK(grid.vertex_count() == 25);
    CHECK(grid.edge_count() == 40);
    CHECK(grid.degree(0) == 2);       // corner (1,1)
    CHECK(grid.degree(1 * 5 + 1) == 4);  // (2,2)
    CHECK(grid.label(6) == "2,2");

    const Graph k3p2 = cartesian_product(complete(3), path(2));
    CHECK(k3p2.vertex_count() == 6);
    CHECK(k3p2.edge_count() == 9);
    for (VertexId v = 0; v < 6; ++v) CHECK(k3p2.degree(v) == 3);
    audit_structure(k3p2);
}

TEST_CASE("iterated product") {
    const Graph p5 = path(5);
    const Graph once = iterated_product(p5, 1);
    CHECK(once.vertex_count() == 5);
    CHECK(once.edge_count() == 4);

    CHECK(iterated_product(p5, 2).vertex_count() == 25);

    const Graph cube = iterated_product(p5, 3);
    CHECK(cube.vertex_count() == 125);
    CHECK(cube.degree(0) == 3);  // corner (1,1,1)
    CHECK(cube.label(0) == "1,1,1");
    // every degree within [m, 2m]
    for (VertexId v = 0; v < cube.vertex_count(); ++v) {
        CHECK(cube.degree(v) >= 3);
        CHECK(cube.degree(v) <= 6);
    }
    audit_structure(cube);

    CHECK_THROWS_AS(iterated_product(p5, 0), DomainError);
    CHECK_THROWS_AS(iterated_product(p5, 20), ResourceError);  // 5^20 over budget
    CHECK_THROWS_AS(iterated_product(p5, 3, 100), ResourceError);
}

TEST_CASE("path power") {
    const Graph p = path_power(5, 1);
    CHECK(p.edge_count() == 4);
    for (VertexId v = 0; v < 5; ++v) CHECK(p.degree(v) == path(5).degree(v));

    const Graph k5 = path_power(5, 4);
    CHECK(k5.edge_count() == 10);  // saturates to K_5
    for (VertexId v = 0; v < 5; ++v) CHECK(k5.degree(v) == 4);

    // oracle: count positions within distance k directly
    const Graph g = path_power(9, 2);
    for (VertexId i = 0; i < 9; ++i) {
        std::int64_t expect = 0;
        for (VertexId j = 0; j < 9; ++j)
            if (i != j && std::abs(i - j) <= 2) ++expect;
        CHECK(g.degree(i) == expect);
    }
    const std::vector<std::int64_t> degs = degree_centrality(g);
    CHECK(degs == std::vector<std::int64_t>{2, 3, 4, 4, 4, 4, 4, 3, 2});

    CHECK_THROWS_AS(path_power(1, 1), DomainError);
    CHECK_THROWS_AS(path_power(5, 0), DomainError);
}

TEST_CASE("degree sum in products (random pairs)") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph f = random_connected_graph(rng, 2 + static_cast<VertexId>(rng() % 7));
        const Graph h = random_connected_graph(rng, 2 + static_cast<VertexId>(rng() % 7));
        const Graph g = cartesian_product(f, h);
        CHECK(g.vertex_count() == f.vertex_count() * h.vertex_count());
        CHECK(g.edge_count() ==
              f.vertex_count() * h.edge_count() + h.vertex_count() * f.edge_count());
        for (VertexId u = 0; u < f.vertex_count(); ++u)
            for (VertexId v = 0; v < h.vertex_count(); ++v)
                CHECK(g.degree(u * h.vertex_count() + v) == f.degree(u) + h.degree(v));
        audit_structure(g);
    }
}

TEST_CASE("edge list reading") {
    std::istringstream p3("0 1\n1 2\n");
    const Graph g = read_edge_list(p3);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(1) == 2);

    std::istringstream with_comments("# a path\n\n0 1   # edge one\n1 2\n");
    CHECK(read_edge_list(with_comments).edge_count() == 2);

    std::istringstream with_header("n 5\n0 1\n");
    const Graph h = read_edge_list(with_header);
    CHECK(h.vertex_count() == 5);
    CHECK(h.degree(4) == 0);

    const auto line_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            read_edge_list(in);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1L;
    };
    CHECK(line_of("0 1\n3 3\n") == 2);      // self-loop
    CHECK(line_of("0 1\n-1 2\n") == 2);     // negative id
    CHECK(line_of("0 1\n1 2 3\n") == 2);    // too many fields
    CHECK(line_of("zero one\n") == 1);      // not integers
    CHECK(line_of("n 2\n0 5\n") == 2);      // exceeds declared count
    CHECK(line_of("0 1\nn 5\n") == 2);      // header not first
}

TEST_CASE("edge list writing and round trips") {
    std::ostringstream out;
    write_edge_list(out, path(3));
    CHECK(out.str() == "0 1\n1 2\n");

    // normalization example: unordered pairs and duplicates collapse
    std::istringstream messy("2 1\n1 0\n0 1\n");
    std::ostringstream norm;
    write_edge_list(norm, read_edge_list(messy));
    CHECK(norm.str() == "0 1\n1 2\n");

    // isolated vertices force a header so ids survive
    Graph iso(4);
    iso.add_edge(0, 1);
    std::ostringstream iso_out;
    write_edge_list(iso_out, iso);
    CHECK(iso_out.str() == "n 4\n0 1\n");
    std::istringstream iso_in(iso_out.str());
    CHECK(read_edge_list(iso_in).vertex_count() == 4);

    // property: read(write(g)) has identical adjacency
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_connected_graph(rng, 2 + static_cast<VertexId>(rng() % 20));
        std::ostringstream o;
        write_edge_list(o, g);
        std::istringstream i(o.str());
        const Graph back = read_edge_list(i);
        REQUIRE(back.vertex_count() == g.vertex_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            CHECK(back.neighbors(v) == g.neighbors(v));
    }
}

TEST_CASE("regularity and connectivity helpers") {
    CHECK(is_regular(cycle(5)));
    CHECK(is_regular(complete(4)));
    CHECK_FALSE(is_regular(star(4)));
    CHECK(is_connected(path(6)));
    Graph two(2);
    CHECK_FALSE(is_connected(two));
}
