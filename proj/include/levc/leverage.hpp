#pragma once

#include <cstdint>
#include <vector>

#include "levc/graph.hpp"
#include "levc/rational.hpp"

namespace levc {

// A vertex's degree together with the multiset of its neighbors' degrees —
// exactly the data leverage centrality depends on.
struct DegreeProfile {
    std::int64_t center_degree = 0;
    std::vector<std::int64_t> neighbor_degrees;

    // |neighbor_degrees| == center_degree >= 1 and every entry >= 1.
    void validate() const;
};

// Per-vertex exact leverage values plus aggregates. min/max witnesses are
// the smallest vertex ids attaining them; the three sign counts partition
// the vertex set.
struct LeverageReport {
    std::vector<Rational> values;
    Rational sum;
    Rational min_value;
    Rational max_value;
    VertexId min_vertex = 0;
    VertexId max_vertex = 0;
    std::size_t distinct_count = 0;
    std::size_t positive_count = 0;
    std::size_t negative_count = 0;
    std::size_t zero_count = 0;
};

// l = (1/k) * sum_i (k - d_i)/(k + d_i), exact. Throws DomainError on an
// empty profile (leverage of an isolated vertex is undefined).
Rational leverage_of_profile(const DegreeProfile& p);

// The profile of v as realized in g; throws DomainError when v is isolated.
DegreeProfile profile_of(const Graph& g, VertexId v);

Rational leverage_vertex(const Graph& g, VertexId v);

// Whole-graph report, deterministic in vertex-id order. threads > 1
// partitions the vertex set; exact arithmetic makes the merged result
// identical to the single-threaded one. Throws DomainError naming the
// first isolated vertex, if any.
LeverageReport leverage_all(const Graph& g, unsigned threads = 1);

// The degree map, for leverage-vs-degree comparisons.
std::vector<std::int64_t> degree_centrality(const Graph& g);

struct RealizedProfile {
    Graph graph;
    VertexId center = 0;
};

// A witness graph in which `center` has exactly profile p: the center is
// adjacent to k fresh neighbors, each padded to its target degree with
// fresh leaves. Always succeeds for valid profiles.
RealizedProfile realize_profile(const DegreeProfile& p);

} // namespace levc
