#include "levc/report_io.hpp"

#include <iomanip>
#include <ostream>

namespace levc {

using nlohmann::json;

namespace {

// CSV fields are plain ids, degrees, and "p/q" strings; only labels can
// contain characters needing quotes.
std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

json count_json(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() &&
        x <= std::numeric_limits<std::int64_t>::max())
        return x.convert_to<std::int64_t>();
    return x.str();
}

} // namespace

json report_to_json(const Graph& g, const LeverageReport& rep, int decimals) {
    json vertices = json::array();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        json entry = {{"id", v},
                      {"label", g.label(v)},
                      {"degree", g.degree(v)},
                      {"leverage", rep.values[static_cast<std::size_t>(v)].str()}};
        if (decimals >= 1)
            entry["decimal"] =
                to_decimal_string(rep.values[static_cast<std::size_t>(v)], decimals);
        vertices.push_back(std::move(entry));
    }
    return json{{"vertices", std::move(vertices)},
                {"aggregates",
                 {{"vertex_count", g.vertex_count()},
                  {"edge_count", g.edge_count()},
                  {"sum", rep.sum.str()},
                  {"min", {{"value", rep.min_value.str()}, {"vertex", rep.min_vertex}}},
                  {"max", {{"value", rep.max_value.str()}, {"vertex", rep.max_vertex}}},
                  {"distinct_count", rep.distinct_count},
                  {"positive_count", rep.positive_count},
                  {"negative_count", rep.negative_count},
                  {"zero_count", rep.zero_count}}}};
}

void write_report_text(std::ostream& out, const Graph& g, const LeverageReport& rep,
                       int decimals) {
    std::size_t label_w = 5, lev_w = 8;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        label_w = std::max(label_w, g.label(v).size());
        lev_w = std::max(lev_w, rep.values[static_cast<std::size_t>(v)].str().size());
    }
    out << std::left << std::setw(8) << "id" << std::setw(static_cast<int>(label_w) + 2)
        << "label" << std::setw(8) << "degree" << std::setw(static_cast<int>(lev_w) + 2)
        << "leverage";
    if (decimals >= 1) out << "decimal";
    out << "\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const Rational& x = rep.values[static_cast<std::size_t>(v)];
        out << std::left << std::setw(8) << v << std::setw(static_cast<int>(label_w) + 2)
            << g.label(v) << std::setw(8) << g.degree(v)
            << std::setw(static_cast<int>(lev_w) + 2) << x.str();
        if (decimals >= 1) out << to_decimal_string(x, decimals);
        out << "\n";
    }
    out << "\n"
        << "vertices  " << g.vertex_count() << "\n"
        << "edges     " << g.edge_count() << "\n"
        << "sum       " << rep.sum << "\n"
        << "min       " << rep.min_value << " (vertex " << rep.min_vertex << ")\n"
        << "max       " << rep.max_value << " (vertex " << rep.max_vertex << ")\n"
        << "distinct  " << rep.distinct_count << "\n"
        << "positive  " << rep.positive_count << "\n"
        << "negative  " << rep.negative_count << "\n"
        << "zero      " << rep.zero_count << "\n";
}

void write_report_csv(std::ostream& out, const Graph& g, const LeverageReport& rep,
                      int decimals) {
    out << "id,label,degree,leverage";
    if (decimals >= 1) out << ",decimal";
    out << "\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const Rational& x = rep.values[static_cast<std::size_t>(v)];
        out << v << "," << csv_escape(g.label(v)) << "," << g.degree(v) << "," << x.str();
        if (decimals >= 1) out << "," << to_decimal_string(x, decimals);
        out << "\n";
    }
    out << "# sum=" << rep.sum << " min=" << rep.min_value << " max=" << rep.max_value
        << " distinct=" << rep.distinct_count << " positive=" << rep.positive_count
        << " negative=" << rep.negative_count << " zero=" << rep.zero_count << "\n";
}

json to_json(const DistinctCountResult& r) {
    json values = json::array();
    for (const Rational& x : r.distinct_values) values.push_back(x.str());
    json out{{"method", r.method},
             {"m", r.m},
             {"k", r.k},
             {"distinct_count", r.distinct_count},
             {"bound", count_json(r.bound)},
             {"matches_bound", r.matches_bound},
             {"exceeds_bound", r.exceeds_bound},
             {"distinct_values", std::move(values)},
             {"elapsed_seconds", r.elapsed_seconds}};
    if (r.n > 0)
        out["n"] = r.n;
    else
        out["n"] = nullptr;  // n-independent
    return out;
}

void write_text(std::ostream& out, const DistinctCountResult& r) {
    out << "method=" << r.method << " m=" << r.m;
    if (r.n > 0)
        out << " n=" << r.n;
    else
        out << " n=any(>=5)";
    if (r.k != 1) out << " k=" << r.k;
    out << ": distinct=" << r.distinct_count << " bound=" << r.bound.str() << " ";
    if (r.matches_bound)
        out << "MATCH";
    else if (r.exceeds_bound)
        out << "EXCEEDS-BOUND";
    else
        out << "BELOW-BOUND";
    out << "  (" << std::fixed << std::setprecision(3) << r.elapsed_seconds << "s)\n";
    out.unsetf(std::ios_base::floatfield);
}

json to_json(const ZeroSearchResult& r) {
    json rows = json::array();
    for (const auto& sol : r.solutions) rows.push_back(sol);
    return json{{"k", r.center_degree},
                {"bound", r.bound},
                {"require_distinct", r.require_distinct},
                {"solution_count", r.solutions.size()},
                {"solutions", std::move(rows)},
                {"elapsed_seconds", r.elapsed_seconds}};
}

void write_text(std::ostream& out, const ZeroSearchResult& r) {
    out << "k=" << r.center_degree << " bound=" << r.bound
        << (r.require_distinct ? " distinct" : " multisets") << ": " << r.solutions.size()
        << " solution(s)\n";
    for (const auto& sol : r.solutions) {
        out << "  ";
        for (std::size_t i = 0; i < sol.size(); ++i) out << (i ? "," : "") << sol[i];
        out << "\n";
    }
}

json to_json(const std::vector<ConvergenceRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows)
        arr.push_back(
            {{"m", r.m}, {"min", r.min_value.str()}, {"max", r.max_value.str()}});
    return json{{"rows", std::move(arr)}};
}

void write_text(std::ostream& out, const std::vector<ConvergenceRow>& rows, int decimals) {
    out << std::left << std::setw(8) << "m" << std::setw(16) << "min" << std::setw(16)
        << "max";
    if (decimals >= 1) out << std::setw(16) << "min_dec" << "max_dec";
    out << "\n";
    for (const auto& r : rows) {
        out << std::left << std::setw(8) << r.m << std::setw(16) << r.min_value.str()
            << std::setw(16) << r.max_value.str();
        if (decimals >= 1)
            out << std::setw(16) << to_decimal_string(r.min_value, decimals)
                << to_decimal_string(r.max_value, decimals);
        out << "\n";
    }
}

json to_json(const CheckResult& r) {
    return json{{"name", r.name},
                {"passed", r.passed},
                {"detail", r.detail},
                {"elapsed_seconds", r.elapsed_seconds}};
}

void write_text(std::ostream& out, const CheckResult& r) {
    out << (r.passed ? "PASS" : "FAIL") << "  " << std::left << std::setw(28) << r.name << " "
        << r.detail << "\n";
}

} // namespace levc
