#include "levc/edge_list.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace levc {

namespace {

// Parses a nonnegative base-10 integer token; negative ids are rejected here.
VertexId parse_id(const std::string& tok, long line) {
    if (tok.empty()) throw ParseError("empty vertex id", line);
    std::size_t i = 0;
    if (tok[0] == '-') throw ParseError("negative vertex id '" + tok + "'", line);
    for (; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9')
            throw ParseError("malformed vertex id '" + tok + "'", line);
    try {
        return std::stoll(tok);
    } catch (const std::out_of_range&) {
        throw ParseError("vertex id '" + tok + "' out of range", line);
    }
}

} // namespace

Graph read_edge_list(std::istream& in) {
    std::string raw;
    long line_no = 0;
    bool first_significant = true;
    VertexId declared = -1;
    VertexId max_id = -1;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<long> edge_lines;

    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::string a, b, extra;
        if (!(ls >> a)) continue;  // blank line
        if (first_significant && a == "n") {
            if (!(ls >> b) || (ls >> extra))
                throw ParseError("header must be exactly 'n <count>'", line_no);
            declared = parse_id(b, line_no);
            first_significant = false;
            continue;
        }
        first_significant = false;
        if (!(ls >> b) || (ls >> extra))
            throw ParseError("expected two vertex ids", line_no);
        const VertexId u = parse_id(a, line_no);
        const VertexId v = parse_id(b, line_no);
        if (u == v) throw ParseError("self-loop " + a + " " + b, line_no);
        max_id = std::max({max_id, u, v});
        edges.emplace_back(u, v);
        edge_lines.push_back(line_no);
    }

    const VertexId n = declared >= 0 ? declared : max_id + 1;
    Graph g(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto [u, v] = edges[i];
        if (u >= n || v >= n)
            throw ParseError("vertex id exceeds declared count " + std::to_string(n),
                             edge_lines[i]);
        g.add_edge(u, v);
    }
    return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
    VertexId max_id = -1;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) > 0) max_id = v;
    if (max_id + 1 != g.vertex_count()) out << "n " << g.vertex_count() << "\n";
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v : g.neighbors(u))
            if (v > u) out << u << " " << v << "\n";
}

} // namespace levc
