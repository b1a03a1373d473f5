#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "euler_census/asymptotic.hpp"
#include "euler_census/compare.hpp"
#include "euler_census/enumeration.hpp"
#include "euler_census/graph.hpp"
#include "euler_census/integral.hpp"
#include "euler_census/spectral.hpp"

namespace py = pybind11;
using namespace ec;

namespace {

py::int_ big_int(const mpz_class& v) {
    std::string s = v.get_str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::dict validation_dict(const ValidationReport& r) {
    py::dict d;
    d["is_simple"] = r.is_simple;
    d["is_connected"] = r.is_connected;
    d["all_degrees_even"] = r.all_degrees_even;
    d["odd_vertices"] = r.odd_vertices;
    d["component_count"] = r.component_count;
    d["all_ok"] = r.all_ok();
    return d;
}

py::dict integral_dict(const IntegralResult& r) {
    py::dict d;
    d["method"] = r.method;
    d["value"] = r.value;
    d["std_error"] = r.std_error;
    d["std_error_re"] = r.std_error_re;
    d["std_error_im"] = r.std_error_im;
    d["samples"] = r.samples;
    d["ln_ec_implied"] = r.ln_ec_implied;
    d["elapsed_ms"] = r.elapsed_ms;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Eulerian circuit census core";

    py::class_<Graph>(m, "Graph")
        .def_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::m)
        .def_readonly("edges", &Graph::edges)
        .def("degrees", &Graph::degrees)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.n) + " m=" + std::to_string(g.m()) + ">";
        });

    m.def("parse_graph", &parse_graph, py::arg("text"));
    m.def("serialize_graph", &serialize_graph, py::arg("g"));
    m.def("make_graph", &make_graph, py::arg("n"), py::arg("edges"));
    m.def("complete_graph", &complete_graph, py::arg("n"));
    m.def("cycle_graph", &cycle_graph, py::arg("n"));
    m.def("random_even_graph", &random_even_graph, py::arg("n"), py::arg("p"), py::arg("seed"));
    m.def("validate", [](const Graph& g) { return validation_dict(validate(g)); }, py::arg("g"));

    m.def("spectral_summary", [](const Graph& g) {
        SpectralSummary s = spectral_summary(g);
        py::dict d;
        d["eigenvalues"] = s.eigenvalues;
        d["lambda2"] = s.lambda2;
        d["lambda_max"] = s.lambda_max;
        d["t"] = big_int(s.t_exact);
        d["log_t"] = s.log_t;
        d["gamma_observed"] = s.gamma_observed;
        return d;
    }, py::arg("g"));
    m.def("spanning_tree_count", [](const Graph& g) { return big_int(spanning_tree_count_exact(g)); },
          py::arg("g"));

    m.def("k_ec", &k_ec, py::arg("g"));
    m.def("ln_ec_estimate", [](const Graph& g) {
        AsymptoticEstimate e = ln_ec_estimate(g);
        py::dict d;
        d["ln_ec"] = e.ln_ec;
        d["k_ec"] = e.k_ec;
        d["ln_prefactor"] = e.ln_prefactor;
        d["components"] = e.components;
        return d;
    }, py::arg("g"));
    m.def("ln_ec_complete", &ln_ec_complete, py::arg("n"));

    m.def("count_eulerian_circuits",
          [](const Graph& g, std::uint64_t node_budget, unsigned workers) {
              ExactCount c = count_eulerian_circuits(g, node_budget, workers);
              py::dict d;
              d["count"] = big_int(c.count);
              d["nodes_explored"] = c.nodes_explored;
              d["elapsed_s"] = c.elapsed_s;
              d["budget_exhausted"] = c.budget_exhausted;
              return d;
          },
          py::arg("g"), py::arg("node_budget") = 1000000000ULL, py::arg("workers") = 0);

    m.def("mc_estimate_int",
          [](const Graph& g, double epsilon, std::uint64_t n_samples, std::uint64_t seed,
             unsigned workers) {
              IntegralModel model = build_model(g, epsilon);
              return integral_dict(mc_estimate_int(model, n_samples, seed, {}, workers));
          },
          py::arg("g"), py::arg("epsilon") = 0.05, py::arg("n_samples") = 100000,
          py::arg("seed") = 1, py::arg("workers") = 0);

    m.def("quadrature_s",
          [](const Graph& g, int grid, unsigned workers) {
              return integral_dict(quadrature_S(g, grid, workers));
          },
          py::arg("g"), py::arg("grid_points_per_axis") = 16, py::arg("workers") = 0);

    m.def("correction_constants", [](const Graph& g) {
        CorrectionConstants c = correction_constants(g);
        py::dict d;
        d["alpha"] = c.alpha;
        d["beta"] = c.beta;
        d["r_diag"] = c.r_diag;
        d["c1"] = c.c1;
        d["c2"] = c.c2;
        d["c3"] = c.c3;
        d["c4"] = c.c4;
        return d;
    }, py::arg("g"));

    m.def("analyze_report_json",
          [](const Graph& g, const std::string& graph_id) {
              return analyze_report(g, graph_id).dump();
          },
          py::arg("g"), py::arg("graph_id") = "graph");
}
