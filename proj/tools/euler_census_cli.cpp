#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "euler_census/compare.hpp"
#include "euler_census/graph.hpp"
#include "euler_census/parallel.hpp"
#include "euler_census/rng.hpp"

namespace {

ec::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return ec::parse_graph(buf.str());
}

std::string stem_of(const std::string& path) {
    auto slash = path.find_last_of("/\\");
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    auto dot = base.find_last_of('.');
    return dot == std::string::npos || dot == 0 ? base : base.substr(0, dot);
}

// "3,5,7" and "4..8" (inclusive), mixed freely.
std::vector<int> parse_n_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto dots = tok.find("..");
        if (dots == std::string::npos) {
            out.push_back(std::stoi(tok));
        } else {
            int lo = std::stoi(tok.substr(0, dots));
            int hi = std::stoi(tok.substr(dots + 2));
            if (hi < lo) throw std::invalid_argument("bad range '" + tok + "'");
            for (int v = lo; v <= hi; ++v) out.push_back(v);
        }
    }
    if (out.empty()) throw std::invalid_argument("--n selected no sizes");
    return out;
}

struct SweepInstance {
    std::string graph_id;
    ec::Graph g;
    std::string gen_error;  // non-empty if the instance could not be built
};

int run(int argc, char** argv) {
    CLI::App app{"Eulerian circuit census: exact counts, asymptotic estimates, and "
                 "integral-representation cross-checks"};
    app.require_subcommand(1);

    std::string file, methods = "formula,exact", out_path, family, n_list;
    double epsilon = 0.05, p = 0.5;
    std::uint64_t seed = 1, samples = 100000, node_budget = 1000000000ULL;
    int quad_grid = 16, gen_n = 0;

    auto* analyze = app.add_subcommand("analyze", "Validation, spectral summary, and "
                                                  "degree-imbalance exponent of one graph");
    analyze->add_option("file", file, "edge-list file")->required();

    auto* compare = app.add_subcommand("compare", "Estimate ln EC by the selected methods "
                                                  "and report the discrepancies");
    compare->add_option("file", file, "edge-list file")->required();
    compare->add_option("--methods", methods, "comma list: formula,exact,mc,quadrature");
    compare->add_option("--epsilon", epsilon, "box exponent parameter (0, 0.1]");
    compare->add_option("--seed", seed, "PRNG seed");
    compare->add_option("--samples", samples, "Monte Carlo sample count");
    compare->add_option("--node-budget", node_budget, "exact-search node budget");
    compare->add_option("--quad-grid", quad_grid, "starting quadrature points per axis");

    auto* sweep = app.add_subcommand("sweep", "Compare methods across a graph family, CSV out");
    sweep->add_option("--family", family, "kn | cycle | random-even")->required();
    sweep->add_option("--n", n_list, "sizes, e.g. 3,5,7 or 4..8")->required();
    sweep->add_option("--p", p, "edge probability for random-even");
    sweep->add_option("--seed", seed, "PRNG seed");
    sweep->add_option("--methods", methods, "comma list: formula,exact,mc,quadrature");
    sweep->add_option("--epsilon", epsilon, "box exponent parameter (0, 0.1]");
    sweep->add_option("--samples", samples, "Monte Carlo sample count");
    sweep->add_option("--node-budget", node_budget, "exact-search node budget");
    sweep->add_option("--quad-grid", quad_grid, "starting quadrature points per axis");
    sweep->add_option("--out", out_path, "write CSV here instead of stdout");

    auto* gen = app.add_subcommand("gen", "Generate a random even-degree connected graph");
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--p", p, "edge probability")->required();
    gen->add_option("--seed", seed, "PRNG seed");
    gen->add_option("--out", out_path, "output file (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints the help text, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message to stderr
        return 2;
    }

    if (*analyze) {
        ec::Graph g = load_graph(file);
        std::cout << ec::analyze_report(g, stem_of(file)).dump(2) << "\n";
        return 0;
    }

    if (*compare) {
        ec::Graph g = load_graph(file);
        ec::CompareOptions opts;
        opts.methods = ec::parse_methods(methods);
        opts.epsilon = epsilon;
        opts.seed = seed;
        opts.samples = samples;
        opts.node_budget = node_budget;
        opts.quad_grid = quad_grid;
        ec::CompareOutput out = ec::run_comparison(g, stem_of(file), opts);
        std::cout << ec::comparison_json(out).dump(2) << "\n";
        return 0;
    }

    if (*sweep) {
        ec::CompareOptions opts;
        opts.methods = ec::parse_methods(methods);
        opts.epsilon = epsilon;
        opts.seed = seed;
        opts.samples = samples;
        opts.node_budget = node_budget;
        opts.quad_grid = quad_grid;
        opts.workers = 1;  // instances run in the pool; keep each one serial

        if (family != "kn" && family != "cycle" && family != "random-even")
            throw std::invalid_argument("unknown family '" + family +
                                        "' (expected kn, cycle, random-even)");

        std::vector<int> sizes = parse_n_list(n_list);
        std::vector<SweepInstance> instances(sizes.size());
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            int n = sizes[i];
            SweepInstance& inst = instances[i];
            try {
                if (family == "kn") {
                    inst.graph_id = "k" + std::to_string(n);
                    inst.g = ec::complete_graph(n);
                } else if (family == "cycle") {
                    inst.graph_id = "c" + std::to_string(n);
                    inst.g = ec::cycle_graph(n);
                } else {
                    std::ostringstream id;
                    id << "re-n" << n << "-p" << p << "-s" << seed;
                    inst.graph_id = id.str();
                    inst.g = ec::random_even_graph(n, p, seed);
                }
            } catch (const std::exception& e) {
                if (inst.graph_id.empty()) inst.graph_id = family + "-n" + std::to_string(n);
                inst.gen_error = e.what();
            }
        }

        std::vector<std::string> rows(instances.size());
        ec::parallel_for(instances.size(), [&](std::size_t i) {
            const SweepInstance& inst = instances[i];
            if (!inst.gen_error.empty()) {
                ec::ComparisonRecord rec;
                rec.graph_id = inst.graph_id;
                rec.n = inst.g.n;
                rec.m = inst.g.m();
                rows[i] = ec::comparison_csv_row(rec, inst.gen_error);
                return;
            }
            try {
                ec::CompareOutput out = ec::run_comparison(inst.g, inst.graph_id, opts);
                std::string note;
                for (const auto& nt : out.notes)
                    if (nt.rfind("exact count skipped", 0) == 0) note = nt;
                rows[i] = ec::comparison_csv_row(out.record, note);
            } catch (const std::exception& e) {
                ec::ComparisonRecord rec;
                rec.graph_id = inst.graph_id;
                rec.n = inst.g.n;
                rec.m = inst.g.m();
                rows[i] = ec::comparison_csv_row(rec, e.what());
            }
        });

        std::ostringstream csv;
        csv << ec::comparison_csv_header() << "\n";
        for (const auto& row : rows) csv << row << "\n";
        if (out_path.empty()) {
            std::cout << csv.str();
        } else {
            std::ofstream outf(out_path);
            if (!outf) throw std::invalid_argument("cannot write '" + out_path + "'");
            outf << csv.str();
        }
        return 0;
    }

    if (*gen) {
        ec::Graph g = ec::random_even_graph(gen_n, p, seed);
        std::string text = ec::serialize_graph(g);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream outf(out_path);
            if (!outf) throw std::invalid_argument("cannot write '" + out_path + "'");
            outf << text;
        }
        return 0;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ec::RetriesExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ec::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
