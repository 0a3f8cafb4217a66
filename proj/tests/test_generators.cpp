#include <doctest.h>

#include <algorithm>
#include <map>

#include "levc/generators.hpp"
#include "levc/leverage.hpp"

using namespace levc;

TEST_CASE("basic families") {
    CHECK(degree_centrality(path(5)) == std::vector<std::int64_t>{1, 2, 2, 2, 1});
    CHECK(degree_centrality(star(5)) == std::vector<std::int64_t>{4, 1, 1, 1, 1});
    CHECK(degree_centrality(complete(4)) == std::vector<std::int64_t>{3, 3, 3, 3});
    CHECK(degree_centrality(cycle(6)) == std::vector<std::int64_t>(6, 2));

    CHECK_THROWS_AS(path(1), DomainError);
    CHECK_THROWS_AS(cycle(2), DomainError);
    CHECK_THROWS_AS(complete(1), DomainError);
    CHECK_THROWS_AS(star(1), DomainError);
}

TEST_CASE("complete multipartite") {
    const Graph s = complete_multipartite({{1, 4}});
    CHECK(s.vertex_count() == 5);
    CHECK(s.degree(0) == 4);
    for (VertexId v = 1; v < 5; ++v) CHECK(s.degree(v) == 1);
    CHECK(s.label(0) == "part:1");
    CHECK(s.label(4) == "part:2");

    CHECK(degree_centrality(complete_multipartite({{2, 3}})) ==
          std::vector<std::int64_t>{3, 3, 2, 2, 2});

    const Graph k3 = complete_multipartite({{1, 1, 1}});
    CHECK(k3.edge_count() == 3);
    for (VertexId v = 0; v < 3; ++v) CHECK(k3.degree(v) == 2);

    CHECK_THROWS_AS(complete_multipartite({{4}}), DomainError);
    CHECK_THROWS_AS(complete_multipartite({{2, 0}}), DomainError);
}

TEST_CASE("triangle with pendant") {
    const Graph g = k3_pendant();
    CHECK(degree_centrality(g) == std::vector<std::int64_t>{2, 3, 1, 2});
    CHECK(g.edge_count() == 4);
    CHECK(leverage_all(g).sum.sign() < 0);
    CHECK(g.label(2) == "v3");
}

TEST_CASE("positive construction a") {
    const Graph g = positive_construction_a(11);
    const auto deg = degree_centrality(g);
    for (VertexId v = 0; v < 7; ++v) CHECK(deg[static_cast<std::size_t>(v)] == 9);
    for (VertexId v = 7; v < 10; ++v) CHECK(deg[static_cast<std::size_t>(v)] == 8);
    CHECK(deg[10] == 3);
    CHECK(leverage_vertex(g, 7) == Rational(1, 187));  // (n-10)/(n(2n-5)) at n=11

    CHECK(leverage_all(positive_construction_a(12)).positive_count == 11);
    CHECK_THROWS_AS(positive_construction_a(10), DomainError);
}

TEST_CASE("positive construction b") {
    const Graph g = positive_construction_b(12);
    const auto deg = degree_centrality(g);
    for (VertexId v = 0; v < 7; ++v) CHECK(deg[static_cast<std::size_t>(v)] == 10);
    for (VertexId v = 7; v < 11; ++v) CHECK(deg[static_cast<std::size_t>(v)] == 9);
    CHECK(deg[11] == 4);
    CHECK(leverage_vertex(g, 7) == Rational(4, 2223));
    const LeverageReport rep = leverage_all(g);
    CHECK(rep.positive_count == 11);
    CHECK(rep.values[11].sign() < 0);  // v_n has minimum degree
    CHECK_THROWS_AS(positive_construction_b(11), DomainError);
}

TEST_CASE("dumbbell claw profiles exist verbatim") {
    for (VertexId n = 5; n <= 15; ++n) {
        const Graph g = dumbbell_claw(n);
        // u: degree n, neighbor degrees {n-1} + {n repeated n-1 times}
        const DegreeProfile pu = profile_of(g, 0);
        CHECK(pu.center_degree == n);
        std::vector<std::int64_t> sorted_u = pu.neighbor_degrees;
        std::sort(sorted_u.begin(), sorted_u.end());
        std::vector<std::int64_t> expect_u{n - 1};
        expect_u.insert(expect_u.end(), static_cast<std::size_t>(n - 1), n);
        CHECK(sorted_u == expect_u);
        // v: degree 4 with neighbor degrees {1,1,1,2}
        const DegreeProfile pv = profile_of(g, n + 3);
        CHECK(pv.center_degree == 4);
        std::vector<std::int64_t> sorted_v = pv.neighbor_degrees;
        std::sort(sorted_v.begin(), sorted_v.end());
        CHECK(sorted_v == std::vector<std::int64_t>{1, 1, 1, 2});
        CHECK(leverage_vertex(g, 0) == Rational(1, 2 * n * n - n));
        CHECK(leverage_vertex(g, n + 3) == Rational(8, 15));
    }
    CHECK(leverage_vertex(dumbbell_claw(5), 0) == Rational(1, 45));
    CHECK_THROWS_AS(dumbbell_claw(4), DomainError);
}

TEST_CASE("star leverage extremes") {
    for (VertexId n = 3; n <= 30; ++n) {
        const Graph g = star(n);
        CHECK(leverage_vertex(g, 0) == Rational(n - 2, n));
        CHECK(leverage_vertex(g, 1) == Rational(2 - n, n));
    }
}

TEST_CASE("regular families have zero leverage everywhere") {
    for (VertexId n = 2; n <= 8; ++n)
        CHECK(leverage_all(complete(n)).zero_count == static_cast<std::size_t>(n));
    for (VertexId n = 3; n <= 10; ++n)
        CHECK(leverage_all(cycle(n)).zero_count == static_cast<std::size_t>(n));
}
