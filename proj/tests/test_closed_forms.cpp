#include <doctest.h>
#include <vector>

#include <map>
#include <set>

#include "levc/closed_forms.hpp"
#include "levc/experiments.hpp"

using namespace levc;

TEST_CASE("multipartite closed form") {
    CHECK(multipartite_leverage({{1, 4}}, 1) == Rational(3, 5));
    CHECK(multipartite_leverage({{1, 4}}, 2) == Rational(-3, 5));
    CHECK(multipartite_leverage({{2, 3}}, 1) == Rational(1, 5));
    CHECK_THROWS_AS(multipartite_leverage({{2, 3}}, 0), DomainError);
    CHECK_THROWS_AS(multipartite_leverage({{2, 3}}, 3), DomainError);

    // brute-force oracle on the generated graphs
    const std::vector<MultipartiteSpec> specs = {
        {{1, 4}}, {{2, 3}}, {{1, 2, 3}}, {{3, 3, 3}}, {{1, 1, 2, 5}}};
    for (const MultipartiteSpec& spec : specs) {
        const Graph g = complete_multipartite(spec);
        VertexId first = 0;
        for (std::size_t i = 0; i < spec.part_sizes.size(); ++i) {
            CHECK(multipartite_leverage(spec, i + 1) == leverage_vertex(g, first));
            first += spec.part_sizes[i];
        }
    }
}

TEST_CASE("regular-factor product closed form") {
    // C_3 x P_3: endpoint of the path has k_i=1 with one neighbor of degree 2
    const Rational endpoint = regular_product_leverage(2, {1, {2}});
    CHECK(endpoint == Rational(-1, 21));
    const Graph c3p3 = cartesian_product(cycle(3), path(3));
    CHECK(leverage_vertex(c3p3, 0) == endpoint);  // (u_0, v_0)

    // K_2 x K_{1,3}: the star center, r = 1
    const Rational center = regular_product_leverage(1, {3, {1, 1, 1}});
    CHECK(center == Rational(1, 4));
    const Graph k2star = cartesian_product(complete(2), star(4));
    CHECK(leverage_vertex(k2star, 0) == center);

    // regular G: all neighbor degrees equal the center degree
    CHECK(regular_product_leverage(7, {4, {4, 4, 4, 4}}) == Rational(0));
    // r = 0 degenerates to plain leverage
    CHECK(regular_product_leverage(0, {1, {6}}) == Rational(-5, 7));

    CHECK_THROWS_AS(regular_product_leverage(-1, {1, {2}}), DomainError);
    CHECK_THROWS_AS(regular_product_leverage(2, {0, {}}), DomainError);
}

TEST_CASE("corner and inner-corner formulas") {
    CHECK(corner_leverage(1) == Rational(-1, 3));
    CHECK(corner_leverage(2) == Rational(-1, 5));
    CHECK(corner_leverage(3) == Rational(-1, 7));
    CHECK(inner_corner_leverage(1) == Rational(1, 6));
    CHECK(inner_corner_leverage(3) == Rational(1, 22));
    CHECK(inner_corner_leverage(10) == Rational(1, 78));
    CHECK_THROWS_AS(corner_leverage(0), DomainError);
    CHECK_THROWS_AS(inner_corner_leverage(0), DomainError);

    // consistency with the class formula at the extreme classes
    for (int m = 1; m <= 12; ++m) {
        CHECK(lattice_class_leverage({m, 0, 0}) == corner_leverage(m));
        CHECK(lattice_class_leverage({0, m, 0}) == inner_corner_leverage(m));
    }
}

TEST_CASE("lattice class values") {
    CHECK(lattice_class_leverage({2, 1, 0}) == Rational(-5, 252));
    CHECK(lattice_class_leverage({1, 2, 0}) == Rational(13, 495));
    for (int m = 1; m <= 6; ++m) CHECK(lattice_class_leverage({0, 0, m}) == Rational(0));
    CHECK_THROWS_AS(lattice_class_leverage({0, 0, 0}), DomainError);
    CHECK_THROWS_AS(lattice_class_leverage({-1, 1, 1}), DomainError);

    // the ten m=3 values, frozen from exact brute force on x3 P_5 / P_6
    const std::map<std::tuple<int, int, int>, Rational> expected = {
        {{3, 0, 0}, Rational(-1, 7)},   {{2, 1, 0}, Rational(-5, 252)},
        {{2, 0, 1}, Rational(-1, 18)},  {{1, 2, 0}, Rational(13, 495)},
        {{1, 1, 1}, Rational(2, 495)},  {{1, 0, 2}, Rational(-1, 55)},
        {{0, 3, 0}, Rational(1, 22)},   {{0, 2, 1}, Rational(1, 33)},
        {{0, 1, 2}, Rational(1, 66)},   {{0, 0, 3}, Rational(0)}};
    for (const auto& [key, value] : expected) {
        const auto [x1, x2, x3] = key;
        CHECK(lattice_class_leverage({x1, x2, x3}) == value);
    }
}

// The same value through the (j, i) indexing: degree m+j with j-i neighbors
// of degree m+j-1 and m-j of degree m+j+1, l = (1/(m+j)) *
// [(j-i)/(2(m+j)-1) - (m-j)/(2(m+j)+1)].
TEST_CASE("class formula agrees with the (j,i) form") {
    for (int m = 1; m <= 8; ++m) {
        for (const LatticeClass& c : enumerate_classes(m)) {
            const int j = c.x2 + c.x3;
            const int i = c.x3;
            const std::int64_t d = m + j;
            const Rational via_ji =
                (Rational(j - i, 2 * d - 1) - Rational(m - j, 2 * d + 1)) / Rational(d);
            CHECK(lattice_class_leverage(c) == via_ji);
            CHECK(c.degree() == d);
        }
    }
}

TEST_CASE("class enumeration") {
    CHECK(enumerate_classes(1).size() == 3);
    CHECK(enumerate_classes(2).size() == 6);
    CHECK(enumerate_classes(10).size() == 66);
    for (int m = 1; m <= 10; ++m) {
        const auto classes = enumerate_classes(m);
        CHECK(BigInt(static_cast<std::int64_t>(classes.size())) == triangle_bound(m));
        for (std::size_t i = 0; i < classes.size(); ++i) {
            CHECK(classes[i].m() == m);
            if (i > 0) {
                const auto& a = classes[i - 1];
                const auto& b = classes[i];
                CHECK(std::tuple(a.x1, a.x2, a.x3) < std::tuple(b.x1, b.x2, b.x3));
            }
        }
    }
}

TEST_CASE("class multiplicity") {
    CHECK(class_multiplicity({1, 0, 0}, 5) == 2);  // the two path endpoints
    CHECK(class_multiplicity({0, 1, 0}, 5) == 2);
    CHECK(class_multiplicity({0, 0, 1}, 5) == 1);  // only coordinate 3
    CHECK(class_multiplicity({1, 1, 0}, 5) == 8);

    // oracle: count matching tuples of x2 P_5 by brute force
    std::map<std::tuple<int, int, int>, std::int64_t> counted;
    for (VertexId v = 0; v < 25; ++v) {
        const LatticeClass c = classify_coords(lattice_coords(v, 2, 5), 5);
        ++counted[{c.x1, c.x2, c.x3}];
    }
    for (const LatticeClass& c : enumerate_classes(2))
        CHECK(class_multiplicity(c, 5) == counted[{c.x1, c.x2, c.x3}]);

    BigInt total = 0;
    for (const LatticeClass& c : enumerate_classes(3)) total += class_multiplicity(c, 5);
    CHECK(total == 125);

    CHECK_THROWS_AS(class_multiplicity({1, 0, 0}, 4), DomainError);
}

TEST_CASE("binomial bounds") {
    CHECK(triangle_bound(3) == 10);
    CHECK(triangle_bound(10) == 66);
    for (int m = 1; m <= 12; ++m) CHECK(polytopal_bound(m, 1) == triangle_bound(m));
    CHECK(polytopal_bound(2, 2) == 10);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("lattice coordinates invert the product id convention") {
    const Graph g = lattice(5, 3);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto coords = lattice_coords(v, 3, 5);
        std::string label;
        for (std::size_t i = 0; i < coords.size(); ++i)
            label += (i ? "," : "") + std::to_string(coords[i]);
        CHECK(label == g.label(v));
    }
    CHECK_THROWS_AS(lattice_coords(125, 3, 5), DomainError);
    CHECK_THROWS_AS(classify_coords({1, 2}, 4), DomainError);
    CHECK_THROWS_AS(classify_coords({0}, 5), DomainError);
}
