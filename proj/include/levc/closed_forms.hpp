#pragma once

#include <cstdint>
#include <vector>

#include "levc/generators.hpp"
#include "levc/leverage.hpp"
#include "levc/rational.hpp"

namespace levc {

// Symmetry class of a lattice vertex of xm P_n (n >= 5): counts of
// coordinates that are edge values {1, n}, near-edge values {2, n-1}, and
// interior values {3..n-2}. x1 + x2 + x3 = m; the vertex degree is 2m - x1.
struct LatticeClass {
    int x1 = 0;
    int x2 = 0;
    int x3 = 0;

    int m() const { return x1 + x2 + x3; }
    std::int64_t degree() const { return 2LL * m() - x1; }

    friend bool operator==(const LatticeClass&, const LatticeClass&) = default;
};

// Exact leverage of any vertex in part i (1-based) of K_{t_1,...,t_r}:
// with S = sum t_j, l(v_i) = (1/(S-t_i)) * sum_{k != i} t_k (t_k - t_i) /
// ((S-t_i) + (S-t_k)).
Rational multipartite_leverage(const MultipartiteSpec& spec, std::size_t part_index);

// Leverage of (u, v_i) in G_r x G where G_r is r-regular and profile_in_g
// is v_i's profile in G: (1/(r+k_i)) * sum_j (k_i - k_j)/(2r + k_i + k_j).
// r = m-1 gives the K_m x G specialization. Requires r >= 0 and a
// nonempty profile.
Rational regular_product_leverage(std::int64_t r, const DegreeProfile& profile_in_g);

// Corner vertex of xm P_n (every coordinate in {1, n}, n >= 3): -1/(2m+1).
Rational corner_leverage(int m);

// Inner corner (every coordinate in {2, n-1}, n >= 5): 1/(8m-2).
Rational inner_corner_leverage(int m);

// Class value (1/k)(x2/(2k-1) - x1/(2k+1)) with k = 2m - x1; valid for
// n >= 5 where the three coordinate classes are disjoint and nonempty.
Rational lattice_class_leverage(const LatticeClass& c);

// All (x1, x2, x3) with x1+x2+x3 = m in lexicographic order;
// exactly C(m+2, 2) classes.
std::vector<LatticeClass> enumerate_classes(int m);

// Number of vertices of xm P_n in class c:
// multinomial(m; x1,x2,x3) * 2^x1 * 2^x2 * (n-4)^x3. Requires n >= 5.
BigInt class_multiplicity(const LatticeClass& c, VertexId n);

// C(m+2, 2): the distinct-count bound for xm P_n, n >= 5.
BigInt triangle_bound(int m);

// C(m+k+1, k+1): the conjectured count for xm P_n^k, n >= 4k+1.
// polytopal_bound(m, 1) == triangle_bound(m).
BigInt polytopal_bound(int m, int k);

BigInt binomial(std::int64_t n, std::int64_t k);

// 1-based coordinates of a vertex of iterated_product(path(n), m), which
// assigns id = sum_i (c_i - 1) * n^(m-i) (most significant coordinate
// first). Inverse of the product's id convention.
std::vector<VertexId> lattice_coords(VertexId id, int m, VertexId n);

// Coordinate class of a lattice vertex; requires n >= 5.
LatticeClass classify_coords(const std::vector<VertexId>& coords, VertexId n);

} // namespace levc
