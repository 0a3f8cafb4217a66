#pragma once

#include <iosfwd>

#include <json.hpp>

#include "levc/experiments.hpp"
#include "levc/graph.hpp"
#include "levc/leverage.hpp"

namespace levc {

// Leverage reports: per-vertex {id, label, degree, leverage:"p/q"} plus
// aggregates. decimals >= 1 adds a display-only decimal column.
nlohmann::json report_to_json(const Graph& g, const LeverageReport& rep, int decimals = 0);
void write_report_text(std::ostream& out, const Graph& g, const LeverageReport& rep,
                       int decimals = 0);
void write_report_csv(std::ostream& out, const Graph& g, const LeverageReport& rep,
                      int decimals = 0);

// Experiment results; every object echoes its parameters and method.
nlohmann::json to_json(const DistinctCountResult& r);
nlohmann::json to_json(const ZeroSearchResult& r);
nlohmann::json to_json(const std::vector<ConvergenceRow>& rows);
nlohmann::json to_json(const CheckResult& r);

void write_text(std::ostream& out, const DistinctCountResult& r);
void write_text(std::ostream& out, const ZeroSearchResult& r);
void write_text(std::ostream& out, const std::vector<ConvergenceRow>& rows, int decimals = 0);
void write_text(std::ostream& out, const CheckResult& r);

} // namespace levc
