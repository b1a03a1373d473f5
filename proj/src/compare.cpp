#include "euler_census/compare.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "euler_census/asymptotic.hpp"
#include "euler_census/enumeration.hpp"
#include "euler_census/spectral.hpp"

namespace ec {

using nlohmann::json;

MethodSelection parse_methods(const std::string& csv) {
    MethodSelection sel{false, false, false, false};
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        if (tok == "formula")
            sel.formula = true;
        else if (tok == "exact")
            sel.exact = true;
        else if (tok == "mc")
            sel.mc = true;
        else if (tok == "quadrature")
            sel.quadrature = true;
        else
            throw std::invalid_argument("unknown method '" + tok +
                                        "' (expected formula,exact,mc,quadrature)");
    }
    if (!sel.formula && !sel.exact && !sel.mc && !sel.quadrature)
        throw std::invalid_argument("--methods selected nothing");
    return sel;
}

CompareOutput run_comparison(const Graph& g, const std::string& graph_id,
                             const CompareOptions& opts) {
    ValidationReport rep = validate(g);
    if (!rep.all_ok())
        throw std::domain_error("comparison requires a simple connected graph with all "
                                "degrees even");
    CompareOutput out;
    ComparisonRecord& rec = out.record;
    rec.graph_id = graph_id;
    rec.n = g.n;
    rec.m = static_cast<int>(g.m());

    SpectralSummary summary = spectral_summary(g);
    rec.lambda2 = summary.lambda2;
    rec.gamma_observed = summary.gamma_observed;

    AsymptoticEstimate est = ln_ec_estimate(g);
    rec.ln_ec_formula = est.ln_ec;

    if (opts.methods.exact) {
        ExactCount ex = count_eulerian_circuits(g, opts.node_budget, opts.workers);
        if (ex.budget_exhausted) {
            out.notes.push_back("exact count skipped: node budget " +
                                std::to_string(opts.node_budget) + " exhausted after " +
                                std::to_string(ex.nodes_explored) + " nodes");
        } else {
            rec.ln_ec_exact = log_mpz(ex.count);
            rec.delta = std::expm1(*rec.ln_ec_exact - rec.ln_ec_formula);
            rec.delta_scaled =
                std::fabs(*rec.delta) * std::pow(static_cast<double>(g.n), 0.5 - opts.epsilon);
        }
    }

    if (opts.methods.mc) {
        IntegralModel model = build_model(g, opts.epsilon);
        IntegralResult r = mc_estimate_int(model, opts.samples, opts.seed, {}, opts.workers);
        rec.ln_ec_mc = r.ln_ec_implied;
        out.run_reports.push_back(run_report_json(r, g, opts.epsilon, opts.seed));
        out.notes.push_back(
            "mc: S approximated by its dominant part S0; relative truncation "
            "O(exp(-c n^(2 epsilon))) with c not determined");
    }

    if (opts.methods.quadrature) {
        if (g.n > 4) {
            out.notes.push_back("quadrature skipped: tensor grid supports n <= 4 only");
        } else {
            IntegralResult r = quadrature_S(g, opts.quad_grid, opts.workers);
            rec.ln_ec_quadrature = r.ln_ec_implied;
            out.run_reports.push_back(run_report_json(r, g, opts.epsilon, opts.seed));
        }
    }
    return out;
}

json analyze_report(const Graph& g, const std::string& graph_id) {
    ValidationReport rep = validate(g);
    SpectralSummary summary = spectral_summary(g);
    json j;
    j["graph_id"] = graph_id;
    j["n"] = g.n;
    j["m"] = g.m();
    j["validation"] = {{"is_simple", rep.is_simple},
                       {"is_connected", rep.is_connected},
                       {"all_degrees_even", rep.all_degrees_even},
                       {"odd_vertices", rep.odd_vertices},
                       {"component_count", rep.component_count}};
    j["spectral"] = {{"lambda2", summary.lambda2},
                     {"lambda_max", summary.lambda_max},
                     {"t", summary.t_exact.get_str()},
                     {"log_t", summary.log_t},
                     {"gamma_observed", summary.gamma_observed},
                     {"det_qhat", det_qhat_exact(g).get_str()}};
    j["k_ec"] = k_ec(g);
    if (rep.all_ok()) j["ln_ec_formula"] = ln_ec_estimate(g).ln_ec;
    return j;
}

json run_report_json(const IntegralResult& r, const Graph& g, double epsilon,
                     std::uint64_t seed) {
    return json{{"method", r.method},
                {"n", g.n},
                {"edges", g.m()},
                {"epsilon", epsilon},
                {"samples", r.samples},
                {"value_re", r.value.real()},
                {"value_im", r.value.imag()},
                {"std_error", r.std_error},
                {"ln_ec_implied", r.ln_ec_implied},
                {"elapsed_ms", r.elapsed_ms},
                {"seed", seed}};
}

json comparison_json(const CompareOutput& out) {
    const ComparisonRecord& rec = out.record;
    json j;
    j["graph_id"] = rec.graph_id;
    j["n"] = rec.n;
    j["m"] = rec.m;
    j["lambda2"] = rec.lambda2;
    j["gamma_observed"] = rec.gamma_observed;
    j["ln_ec_formula"] = rec.ln_ec_formula;
    if (rec.ln_ec_exact) j["ln_ec_exact"] = *rec.ln_ec_exact;
    if (rec.ln_ec_mc) j["ln_ec_mc"] = *rec.ln_ec_mc;
    if (rec.ln_ec_quadrature) j["ln_ec_quadrature"] = *rec.ln_ec_quadrature;
    if (rec.delta) j["delta"] = *rec.delta;
    if (rec.delta_scaled) j["delta_scaled"] = *rec.delta_scaled;
    if (!out.notes.empty()) j["notes"] = out.notes;
    if (!out.run_reports.empty()) j["runs"] = out.run_reports;
    return j;
}

std::string comparison_csv_header() {
    return "graph_id,n,m,lambda2,gamma_observed,ln_ec_formula,ln_ec_exact,ln_ec_mc,"
           "ln_ec_quadrature,delta,delta_scaled,error";
}

namespace {
std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}
std::string fmt_opt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }
}  // namespace

std::string comparison_csv_row(const ComparisonRecord& rec, const std::string& error) {
    std::ostringstream os;
    os << rec.graph_id << ',' << rec.n << ',' << rec.m << ',';
    if (error.empty()) {
        os << fmt(rec.lambda2) << ',' << fmt(rec.gamma_observed) << ','
           << fmt(rec.ln_ec_formula) << ',' << fmt_opt(rec.ln_ec_exact) << ','
           << fmt_opt(rec.ln_ec_mc) << ',' << fmt_opt(rec.ln_ec_quadrature) << ','
           << fmt_opt(rec.delta) << ',' << fmt_opt(rec.delta_scaled) << ',';
    } else {
        os << ",,,,,,,,";
    }
    std::string msg = error;
    for (char& c : msg)
        if (c == ',' || c == '\n') c = ';';
    os << msg;
    return os.str();
}

}  // namespace ec
