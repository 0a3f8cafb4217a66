// Command-line front end: graph generation, exact leverage reports,
// verification checks, zero-leverage search, distinct-count experiments.
//
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage or parse error, 3 domain error, 4 resource limit.

#include <CLI11.hpp>

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "levc/edge_list.hpp"
#include "levc/report_io.hpp"

namespace {

using namespace levc;

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kUsage = 2,
    kDomain = 3,
    kResource = 4,
};

std::int64_t vertex_budget_from_env() {
    const char* env = std::getenv("LEVERAGE_VERTEX_BUDGET");
    if (env == nullptr || *env == '\0') return kDefaultVertexBudget;
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 1)
        throw CLI::ValidationError("LEVERAGE_VERTEX_BUDGET",
                                   "must be a positive integer, got '" + std::string(env) + "'");
    return v;
}

// "text" on a terminal, "json" when piped, unless --format overrides.
std::string resolve_format(const std::string& requested) {
    if (!requested.empty()) return requested;
    return isatty(fileno(stdout)) ? "text" : "json";
}

struct ComputeOptions {
    std::string input;
    std::string format;
    std::string out_path;
    int decimals = 0;
    unsigned threads = std::thread::hardware_concurrency();
};

int run_compute(const ComputeOptions& opt) {
    Graph g;
    if (opt.input == "-") {
        g = read_edge_list(std::cin);
    } else {
        std::ifstream in(opt.input);
        if (!in) throw ParseError("cannot open '" + opt.input + "'");
        g = read_edge_list(in);
    }
    const LeverageReport rep = leverage_all(g, std::max(1u, opt.threads));

    std::ofstream file;
    if (!opt.out_path.empty()) {
        file.open(opt.out_path);
        if (!file) throw ParseError("cannot write '" + opt.out_path + "'");
    }
    std::ostream& out = opt.out_path.empty() ? std::cout : file;
    const std::string fmt = resolve_format(opt.format);
    if (fmt == "json")
        out << report_to_json(g, rep, opt.decimals).dump(2) << "\n";
    else if (fmt == "csv")
        write_report_csv(out, g, rep, opt.decimals);
    else
        write_report_text(out, g, rep, opt.decimals);
    return kOk;
}

struct GenOptions {
    std::string family;
    std::int64_t n = 0;
    int m = 1;
    int k = 1;
    std::string parts;
    bool labels = false;
};

std::vector<std::int64_t> parse_parts(const std::string& text) {
    std::vector<std::int64_t> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--parts", "expected comma-separated integers");
        }
    }
    return parts;
}

int run_gen(const GenOptions& opt) {
    const std::int64_t budget = vertex_budget_from_env();
    if (opt.family == "multipartite") {
        if (opt.parts.empty())
            throw CLI::ValidationError("--parts", "multipartite needs part sizes, e.g. 2,3");
    } else if (opt.family != "k3-pendant" && opt.n == 0) {
        throw CLI::ValidationError("--n", "this family needs --n");
    }
    Graph g;
    if (opt.family == "path")
        g = path(opt.n);
    else if (opt.family == "cycle")
        g = cycle(opt.n);
    else if (opt.family == "complete")
        g = complete(opt.n);
    else if (opt.family == "star")
        g = star(opt.n);
    else if (opt.family == "multipartite")
        g = complete_multipartite({parse_parts(opt.parts)});
    else if (opt.family == "lattice")
        g = lattice(opt.n, opt.m, budget);
    else if (opt.family == "path-power-lattice")
        g = path_power_lattice(opt.n, opt.k, opt.m, budget);
    else if (opt.family == "k3-pendant")
        g = k3_pendant();
    else if (opt.family == "positive-a")
        g = positive_construction_a(opt.n);
    else if (opt.family == "positive-b")
        g = positive_construction_b(opt.n);
    else if (opt.family == "dumbbell-claw")
        g = dumbbell_claw(opt.n);
    else
        throw CLI::ValidationError("family", "unknown family '" + opt.family + "'");

    if (opt.labels && g.has_labels())
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            std::cout << "# label " << v << " " << g.label(v) << "\n";
    write_edge_list(std::cout, g);
    return kOk;
}

int run_verify(const std::string& name, const std::string& format) {
    std::vector<CheckResult> results;
    if (name == "all") {
        results = run_all_checks();
    } else {
        try {
            results.push_back(run_check(name));
        } catch (const DomainError& e) {  // unknown name: usage error listing checks
            std::cerr << "error: " << e.what() << "\n";
            return kUsage;
        }
    }
    bool all_passed = true;
    const std::string fmt = resolve_format(format);
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : results) {
        all_passed = all_passed && r.passed;
        if (fmt == "json")
            arr.push_back(to_json(r));
        else
            write_text(std::cout, r);
    }
    if (fmt == "json")
        std::cout << nlohmann::json{{"checks", std::move(arr)}, {"all_passed", all_passed}}
                         .dump(2)
                  << "\n";
    else
        std::cout << (all_passed ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
    return all_passed ? kOk : kVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact leverage-centrality toolkit"};
    app.require_subcommand(1);

    ComputeOptions compute_opt;
    auto* compute = app.add_subcommand("compute", "leverage report for an edge-list graph");
    compute->add_option("input", compute_opt.input, "edge-list file, or - for stdin")
        ->required();
    compute->add_option("--format", compute_opt.format, "text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    compute->add_option("--out", compute_opt.out_path, "write the report to a file");
    compute->add_option("--decimals", compute_opt.decimals, "add a decimal display column")
        ->check(CLI::Range(1, 1000));
    compute->add_option("--threads", compute_opt.threads, "worker threads");

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "emit a graph family as an edge list");
    gen->add_option("family", gen_opt.family,
                    "path|cycle|complete|star|multipartite|lattice|path-power-lattice|"
                    "k3-pendant|positive-a|positive-b|dumbbell-claw")
        ->required();
    gen->add_option("--n", gen_opt.n, "vertex count / path length");
    gen->add_option("--m", gen_opt.m, "product dimension");
    gen->add_option("--k", gen_opt.k, "path power");
    gen->add_option("--parts", gen_opt.parts, "multipartite part sizes, e.g. 2,3");
    gen->add_flag("--labels", gen_opt.labels, "emit '# label id text' comments");

    std::string verify_name;
    std::string verify_format;
    auto* verify = app.add_subcommand("verify", "run named verification checks");
    verify->add_option("check", verify_name, "check name, or 'all'")->required();
    verify->add_option("--format", verify_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::int64_t sz_k = 0, sz_bound = 0;
    bool sz_distinct = true;
    unsigned sz_threads = std::thread::hardware_concurrency();
    std::string sz_format;
    auto* search = app.add_subcommand("search-zero",
                                      "neighbor-degree multisets with zero leverage");
    search->add_option("--k", sz_k, "center degree")->required();
    search->add_option("--bound", sz_bound, "largest neighbor degree to try")->required();
    search->add_flag("--distinct,!--no-distinct", sz_distinct,
                     "require strictly increasing degrees (default on)");
    search->add_option("--threads", sz_threads, "worker threads");
    search->add_option("--format", sz_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    int cd_m = 0;
    std::int64_t cd_n = 5;
    std::string cd_method = "classes";
    unsigned cd_threads = std::thread::hardware_concurrency();
    std::string cd_format;
    auto* count = app.add_subcommand("count-distinct",
                                     "distinct leverage values of the lattice xm P_n");
    count->add_option("--m", cd_m, "product dimension")->required();
    count->add_option("--method", cd_method, "brute or classes")
        ->check(CLI::IsMember({"brute", "classes"}));
    count->add_option("--n", cd_n, "path length for the brute method");
    count->add_option("--threads", cd_threads, "worker threads");
    count->add_option("--format", cd_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    int cj_k = 0, cj_mmax = 0;
    std::int64_t cj_n = 0;
    unsigned cj_threads = std::thread::hardware_concurrency();
    std::string cj_format;
    auto* conjecture = app.add_subcommand(
        "conjecture", "distinct counts for xm P_n^k vs C(m+k+1,k+1) (evidence only)");
    conjecture->add_option("--k", cj_k, "path power")->required();
    conjecture->add_option("--n", cj_n, "path length (needs n >= 4k+1)")->required();
    conjecture->add_option("--m-max", cj_mmax, "largest product dimension")->required();
    conjecture->add_option("--threads", cj_threads, "worker threads");
    conjecture->add_option("--format", cj_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    int cv_mmax = 0;
    int cv_decimals = 0;
    std::string cv_format;
    auto* convergence = app.add_subcommand("convergence",
                                           "extreme-leverage bracket of xm P_n per m");
    convergence->add_option("--m-max", cv_mmax, "largest dimension")->required();
    convergence->add_option("--decimals", cv_decimals, "add decimal columns")
        ->check(CLI::Range(1, 1000));
    convergence->add_option("--format", cv_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*compute) return run_compute(compute_opt);
        if (*gen) return run_gen(gen_opt);
        if (*verify) return run_verify(verify_name, verify_format);
        if (*search) {
            const ZeroSearchResult r =
                zero_search(sz_k, sz_bound, sz_distinct, std::max(1u, sz_threads));
            if (resolve_format(sz_format) == "json")
                std::cout << to_json(r).dump(2) << "\n";
            else
                write_text(std::cout, r);
            return kOk;
        }
        if (*count) {
            const std::int64_t budget = vertex_budget_from_env();
            const DistinctCountResult r =
                cd_method == "brute"
                    ? count_distinct_bruteforce(path(cd_n), cd_m, 1, std::max(1u, cd_threads),
                                                budget)
                    : count_distinct_classes(cd_m);
            if (resolve_format(cd_format) == "json")
                std::cout << to_json(r).dump(2) << "\n";
            else
                write_text(std::cout, r);
            return kOk;
        }
        if (*conjecture) {
            const auto results = conjecture_scan(cj_k, cj_n, cj_mmax,
                                                 std::max(1u, cj_threads),
                                                 vertex_budget_from_env());
            if (resolve_format(cj_format) == "json") {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& r : results) arr.push_back(to_json(r));
                std::cout << nlohmann::json{{"k", cj_k},
                                            {"n", cj_n},
                                            {"note", "exploratory evidence only"},
                                            {"results", std::move(arr)}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "exploratory evidence only; nothing is asserted\n";
                for (const auto& r : results) write_text(std::cout, r);
            }
            return kOk;
        }
        if (*convergence) {
            const auto rows = convergence_table(cv_mmax);
            if (resolve_format(cv_format) == "json")
                std::cout << to_json(rows).dump(2) << "\n";
            else
                write_text(std::cout, rows, cv_decimals);
            return kOk;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kResource;
    }
    return kUsage;
}
