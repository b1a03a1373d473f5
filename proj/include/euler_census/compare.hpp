#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "euler_census/graph.hpp"
#include "euler_census/integral.hpp"

namespace ec {

// One row of the formula-vs-oracle study. delta and delta_scaled are present
// exactly when the exact count is.
struct ComparisonRecord {
    std::string graph_id;
    int n = 0;
    int m = 0;
    double lambda2 = 0.0;
    double gamma_observed = 0.0;
    double ln_ec_formula = 0.0;
    std::optional<double> ln_ec_exact;
    std::optional<double> ln_ec_mc;
    std::optional<double> ln_ec_quadrature;
    std::optional<double> delta;         // exp(ln_exact - ln_formula) - 1
    std::optional<double> delta_scaled;  // |delta| * n^{1/2 - epsilon}
};

struct MethodSelection {
    bool formula = true;
    bool exact = true;
    bool mc = false;
    bool quadrature = false;
};

struct CompareOptions {
    MethodSelection methods;
    double epsilon = 0.05;
    std::uint64_t seed = 1;
    std::uint64_t samples = 100000;
    std::uint64_t node_budget = 1000000000;
    int quad_grid = 16;  // starting points per axis; refined by doubling
    unsigned workers = 0;
};

struct CompareOutput {
    ComparisonRecord record;
    std::vector<std::string> notes;              // skipped methods, caveats
    std::vector<nlohmann::json> run_reports;     // one per mc/quadrature run
};

// Parse "formula,exact,mc,quadrature" (any subset, any order).
MethodSelection parse_methods(const std::string& csv);

CompareOutput run_comparison(const Graph& g, const std::string& graph_id,
                             const CompareOptions& opts);

// Serializers. Exact integer counts are emitted as decimal strings so they
// survive beyond 2^53.
nlohmann::json analyze_report(const Graph& g, const std::string& graph_id);
nlohmann::json run_report_json(const IntegralResult& r, const Graph& g, double epsilon,
                               std::uint64_t seed);
nlohmann::json comparison_json(const CompareOutput& out);
std::string comparison_csv_header();
std::string comparison_csv_row(const ComparisonRecord& rec, const std::string& error);

}  // namespace ec
