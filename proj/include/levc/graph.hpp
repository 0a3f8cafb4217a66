#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "levc/errors.hpp"

namespace levc {

using VertexId = std::int64_t;

// Brute-force graph construction refuses to materialize more vertices than
// this unless the caller raises the limit explicitly.
inline constexpr std::int64_t kDefaultVertexBudget = 20'000'000;

// Finite simple undirected graph over dense ids 0..vertex_count()-1.
// Adjacency lists are kept sorted ascending and duplicate-free, so neighbor
// iteration is in vertex-id order and add_edge is idempotent.
// Labels are optional display strings (lattice generators attach coordinate
// tuples); structural operations never depend on them.
class Graph {
public:
    Graph() = default;
    explicit Graph(VertexId n) : adj_(static_cast<std::size_t>(check_size(n))) {}

    VertexId vertex_count() const { return static_cast<VertexId>(adj_.size()); }
    std::int64_t edge_count() const { return edges_; }

    // Inserts {u, v} into both adjacency sets. Throws DomainError on
    // self-loops or out-of-range ids; inserting an existing edge is a no-op.
    void add_edge(VertexId u, VertexId v);

    bool has_edge(VertexId u, VertexId v) const;

    std::int64_t degree(VertexId v) const {
        return static_cast<std::int64_t>(neighbors(v).size());
    }

    const std::vector<VertexId>& neighbors(VertexId v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    bool has_labels() const { return !labels_.empty(); }
    void set_label(VertexId v, std::string label);
    // Empty string when the graph carries no labels.
    const std::string& label(VertexId v) const;

    void check_vertex(VertexId v) const {
        if (v < 0 || v >= vertex_count())
            throw DomainError("vertex id " + std::to_string(v) + " out of range (n=" +
                              std::to_string(vertex_count()) + ")");
    }

private:
    static VertexId check_size(VertexId n) {
        if (n < 0) throw DomainError("negative vertex count");
        return n;
    }

    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::string> labels_;  // empty, or one entry per vertex
    std::int64_t edges_ = 0;
};

bool is_regular(const Graph& g);
bool is_connected(const Graph& g);

// Cartesian product: vertices are the pairs (u, v) with id u*|V(h)| + v;
// (u1,v1)~(u2,v2) iff equal in one coordinate and adjacent in the other.
// deg(u,v) = deg(u) + deg(v). Labels concatenate as "lu,lv" when both
// factors are labeled. Throws ResourceError when |V(f)|*|V(h)| exceeds
// vertex_budget.
Graph cartesian_product(const Graph& f, const Graph& h,
                        std::int64_t vertex_budget = kDefaultVertexBudget);

// Left fold of cartesian_product over m copies of g (m >= 1), so labels
// read as m-tuples left to right.
Graph iterated_product(const Graph& g, int m,
                       std::int64_t vertex_budget = kDefaultVertexBudget);

// Path power P_n^k: vertices 1..n (ids 0-based, labels "1".."n"),
// edge ij iff 1 <= |i-j| <= k. Requires n >= 2, k >= 1.
Graph path_power(VertexId n, int k);

} // namespace levc
