#include <doctest.h>

#include <random>

#include "levc/experiments.hpp"
#include "levc/generators.hpp"
#include "levc/leverage.hpp"

using namespace levc;

namespace {

Rational profile_value(std::int64_t k, std::vector<std::int64_t> degrees) {
    return leverage_of_profile({k, std::move(degrees)});
}

} // namespace

TEST_CASE("profile evaluation") {
    CHECK(profile_value(1, {6}) == Rational(-5, 7));
    CHECK(profile_value(6, {5, 5, 5, 1, 6, 6}) == Rational(38, 231));
    CHECK(profile_value(3, {1, 2, 17}) == Rational(0));
    CHECK(profile_value(3, {3, 3, 3}) == Rational(0));

    CHECK_THROWS_AS(profile_value(0, {}), DomainError);
    CHECK_THROWS_AS(profile_value(3, {1, 2}), DomainError);    // size != k
    CHECK_THROWS_AS(profile_value(2, {0, 3}), DomainError);    // degree < 1
}

// The worked table of a 10-vertex graph with all-distinct leverage values;
// unlisted neighbor degrees equal the center degree and contribute zero.
TEST_CASE("distinct-leverage table of profiles") {
    CHECK(profile_value(5, {4, 5, 5, 5, 5}) == Rational(1, 45));
    CHECK(profile_value(5, {6, 5, 5, 5, 5}) == Rational(-1, 55));
    CHECK(profile_value(6, {5, 5, 5, 3, 6, 6}) == Rational(10, 99));
    CHECK(profile_value(4, {6, 5, 5, 3}) == Rational(-22, 315));
    CHECK(profile_value(3, {6, 6, 3}) == Rational(-2, 9));
    CHECK(profile_value(6, {5, 5, 4, 3, 6, 6}) == Rational(59, 495));
    CHECK(profile_value(5, {6, 6, 4, 5, 5}) == Rational(-7, 495));
    CHECK(profile_value(1, {6}) == Rational(-5, 7));
    CHECK(profile_value(6, {5, 5, 5, 1, 6, 6}) == Rational(38, 231));
}

TEST_CASE("leverage of graph vertices") {
    const Graph g = k3_pendant();
    CHECK(leverage_vertex(g, 2) == Rational(-1, 2));  // pendant v3
    CHECK(leverage_vertex(g, 1) == Rational(3, 10));  // v2
    CHECK(leverage_vertex(g, 0) == Rational(-1, 10)); // v1
    CHECK(leverage_vertex(complete(5), 3) == Rational(0));

    Graph iso(3);
    iso.add_edge(0, 1);
    CHECK_THROWS_AS(leverage_vertex(iso, 2), DomainError);
    CHECK_THROWS_WITH_AS(leverage_all(iso), doctest::Contains("vertex 2"), DomainError);
}

TEST_CASE("whole-graph reports") {
    const LeverageReport s5 = leverage_all(star(5));
    CHECK(s5.min_value == Rational(-3, 5));
    CHECK(s5.max_value == Rational(3, 5));
    CHECK(s5.max_vertex == 0);
    CHECK(s5.distinct_count == 2);
    CHECK(s5.positive_count == 1);
    CHECK(s5.negative_count == 4);

    const LeverageReport p7 = leverage_all(path(7));
    CHECK(p7.distinct_count == 3);
    CHECK(p7.min_value == Rational(-1, 3));
    CHECK(p7.max_value == Rational(1, 6));
    CHECK(p7.zero_count == 3);

    const LeverageReport grid = leverage_all(lattice(5, 2));
    CHECK(grid.sum.sign() < 0);
    CHECK(grid.distinct_count == 6);
}

TEST_CASE("report aggregates are consistent") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_connected_graph(rng, 4 + static_cast<VertexId>(rng() % 20));
        const LeverageReport rep = leverage_all(g);
        Rational sum;
        for (const auto& x : rep.values) sum += x;
        CHECK(sum == rep.sum);
        CHECK(rep.positive_count + rep.negative_count + rep.zero_count == rep.values.size());
        CHECK(rep.values[static_cast<std::size_t>(rep.min_vertex)] == rep.min_value);
        CHECK(rep.values[static_cast<std::size_t>(rep.max_vertex)] == rep.max_value);
        for (const auto& x : rep.values) {
            CHECK(x >= rep.min_value);
            CHECK(x <= rep.max_value);
        }
    }
}

TEST_CASE("parallel report equals single-threaded") {
    const Graph g = lattice(5, 3);
    const LeverageReport serial = leverage_all(g, 1);
    for (unsigned threads : {2u, 5u, 16u}) {
        const LeverageReport par = leverage_all(g, threads);
        CHECK(par.values == serial.values);
        CHECK(par.sum == serial.sum);
        CHECK(par.distinct_count == serial.distinct_count);
    }
}

TEST_CASE("degree centrality") {
    CHECK(degree_centrality(star(5)) == std::vector<std::int64_t>{4, 1, 1, 1, 1});
    CHECK(degree_centrality(complete(4)) == std::vector<std::int64_t>{3, 3, 3, 3});

    // the highest-degree vertex is not the leverage maximizer here
    const Graph db = dumbbell_claw(5);
    const auto deg = degree_centrality(db);
    const LeverageReport rep = leverage_all(db);
    const auto argmax_deg = static_cast<std::size_t>(
        std::max_element(deg.begin(), deg.end()) - deg.begin());
    CHECK(rep.values[argmax_deg] != rep.max_value);
}

TEST_CASE("profile realization") {
    const RealizedProfile a = realize_profile({3, {1, 2, 17}});
    CHECK(a.graph.vertex_count() == 21);
    CHECK(leverage_vertex(a.graph, a.center) == Rational(0));

    const RealizedProfile b = realize_profile({1, {1}});
    CHECK(b.graph.vertex_count() == 2);
    CHECK(leverage_vertex(b.graph, b.center) == Rational(0));

    const RealizedProfile c = realize_profile({2, {1, 4}});
    CHECK(leverage_vertex(c.graph, c.center) == Rational(0));

    // round trip on random profiles
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        DegreeProfile p;
        p.center_degree = 1 + static_cast<std::int64_t>(rng() % 8);
        for (std::int64_t i = 0; i < p.center_degree; ++i)
            p.neighbor_degrees.push_back(1 + static_cast<std::int64_t>(rng() % 100));
        const RealizedProfile rp = realize_profile(p);
        CHECK(leverage_vertex(rp.graph, rp.center) == leverage_of_profile(p));
    }
}

TEST_CASE("profile of graph vertex matches direct computation") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_connected_graph(rng, 4 + static_cast<VertexId>(rng() % 15));
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            CHECK(leverage_vertex(g, v) == leverage_of_profile(profile_of(g, v)));
    }
}
