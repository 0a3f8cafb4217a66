#pragma once

#include <cstdint>
#include <vector>

#include "levc/graph.hpp"

namespace levc {

// Part sizes t_1..t_r of a complete multipartite graph K_{t_1,...,t_r}.
// Valid when r >= 2 and every t_i >= 1.
struct MultipartiteSpec {
    std::vector<std::int64_t> part_sizes;

    std::int64_t total() const;
    void validate() const;  // throws DomainError when invalid
};

// Standard families. Vertices are labeled "1".."n"; star(n) = K_{1,n-1}
// with the center at id 0.
Graph path(VertexId n);      // n >= 2
Graph cycle(VertexId n);     // n >= 3
Graph complete(VertexId n);  // n >= 2
Graph star(VertexId n);      // n >= 2

// Complete multipartite graph; parts occupy consecutive id ranges in spec
// order and vertices are labeled "part:i" (1-based part index).
Graph complete_multipartite(const MultipartiteSpec& spec);

// Triangle {v1, v2, v4} with pendant v3 attached to v2 (ids 0..3,
// labels "v1".."v4"); degree sequence (2, 3, 1, 2).
Graph k3_pendant();

// First n-1-positive-leverage construction (n >= 11): clique on v_1..v_{n-4},
// completely joined to v_{n-3},v_{n-2},v_{n-1}, and v_n adjacent to those
// three. Degrees: n-2 (first n-4), n-3 (next three), 3 (last).
Graph positive_construction_a(VertexId n);

// Second construction (n >= 12): clique on v_1..v_{n-5} joined to
// v_{n-4}..v_{n-1}, extra edges v_{n-4}v_{n-2} and v_{n-3}v_{n-1}, and v_n
// adjacent to v_{n-4}..v_{n-1}. Degrees: n-2 (first n-5), n-3 (next four),
// 4 (last), so each degree-(n-3) vertex sees one degree-4 neighbor.
Graph positive_construction_b(VertexId n);

// Nearly-complete graph bridged to a claw (n >= 5): clique on {u, a_1..a_n}
// minus the edge a_1a_2, path a_2-p_1-p_2-v, and leaves l_1,l_2,l_3 on v.
// u (id 0) has degree n with neighbor degrees {n-1, n,...,n}; v has degree 4
// with neighbor degrees {2,1,1,1}, hence l(u) = 1/(2n^2-n) and l(v) = 8/15.
Graph dumbbell_claw(VertexId n);

// Lattice xm P_n and its path-power generalization xm P_n^k; labels are
// m-tuples of 1-based coordinates.
Graph lattice(VertexId n, int m, std::int64_t vertex_budget = kDefaultVertexBudget);
Graph path_power_lattice(VertexId n, int k, int m,
                         std::int64_t vertex_budget = kDefaultVertexBudget);

} // namespace levc
