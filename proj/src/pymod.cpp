// Python bindings for the core operations: graph/biclique model, solvers,
// reductions, bicluster scoring and matrix summarization.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "mweb/core.hpp"
#include "mweb/mdlh.hpp"
#include "mweb/reduce.hpp"
#include "mweb/samba.hpp"
#include "mweb/solve.hpp"

namespace py = pybind11;
using namespace mweb;

PYBIND11_MODULE(_mweb, m) {
    m.doc() = "weighted bipartite biclique toolkit";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

    py::enum_<Objective>(m, "Objective")
        .value("EDGE_WEIGHT", Objective::EdgeWeight)
        .value("NODE_PLUS_EDGE", Objective::NodePlusEdge);

    py::enum_<Method>(m, "Method")
        .value("EXACT_ENUMERATION", Method::ExactEnumeration)
        .value("BRANCH_AND_BOUND", Method::BranchAndBound)
        .value("LOCAL_SEARCH", Method::LocalSearch);

    py::class_<WeightedBipartiteGraph>(m, "WeightedBipartiteGraph")
        .def(py::init<std::size_t, std::size_t, std::vector<double>>(), py::arg("n1"),
             py::arg("n2"), py::arg("weights"))
        .def_property_readonly("n1", &WeightedBipartiteGraph::n1)
        .def_property_readonly("n2", &WeightedBipartiteGraph::n2)
        .def_property_readonly("eta", &WeightedBipartiteGraph::eta)
        .def("weight", &WeightedBipartiteGraph::weight)
        .def_property_readonly("weights", &WeightedBipartiteGraph::weights);

    py::class_<Biclique>(m, "Biclique")
        .def(py::init<std::vector<std::size_t>, std::vector<std::size_t>>(), py::arg("u1"),
             py::arg("u2"))
        .def_readonly("u1", &Biclique::u1)
        .def_readonly("u2", &Biclique::u2)
        .def("__eq__", [](const Biclique& a, const Biclique& b) { return a == b; });

    py::class_<OptResult>(m, "OptResult")
        .def_readonly("value", &OptResult::value)
        .def_readonly("witness", &OptResult::witness)
        .def_readonly("explored", &OptResult::explored)
        .def_readonly("optimal", &OptResult::optimal);

    py::class_<WeightSetDescriptor>(m, "WeightSetDescriptor")
        .def_readonly("min_weight", &WeightSetDescriptor::min_weight)
        .def_readonly("max_weight", &WeightSetDescriptor::max_weight)
        .def_readonly("ratio", &WeightSetDescriptor::ratio);

    py::class_<BinaryMatrix>(m, "BinaryMatrix")
        .def(py::init<std::size_t, std::size_t, std::vector<std::uint8_t>>(), py::arg("n1"),
             py::arg("n2"), py::arg("data"))
        .def_property_readonly("n1", &BinaryMatrix::n1)
        .def_property_readonly("n2", &BinaryMatrix::n2)
        .def("at", &BinaryMatrix::at);

    m.def("biclique_weight", &biclique_weight);
    m.def("problem_p_value", &problem_p_value);
    m.def("weight_set_of", &weight_set_of);
    m.def("ratio_within_window", &ratio_within_window);

    m.def(
        "solve_exact",
        [](const WeightedBipartiteGraph& g, Objective obj, unsigned threads, std::size_t cap) {
            return solve_exact(g, obj, threads, cap);
        },
        py::arg("g"), py::arg("objective") = Objective::EdgeWeight, py::arg("threads") = 1,
        py::arg("enumeration_cap") = 26);
    m.def(
        "solve_branch_bound",
        [](const WeightedBipartiteGraph& g, Objective obj) { return solve_branch_bound(g, obj); },
        py::arg("g"), py::arg("objective") = Objective::EdgeWeight);
    m.def(
        "solve_local_search",
        [](const WeightedBipartiteGraph& g, Objective obj, std::uint64_t seed, unsigned restarts) {
            SolverConfig cfg;
            cfg.seed = seed;
            cfg.restarts = restarts;
            return solve_local_search(g, obj, cfg);
        },
        py::arg("g"), py::arg("objective") = Objective::EdgeWeight, py::arg("seed") = 0,
        py::arg("restarts") = 8);

    py::class_<SimpleGraph>(m, "SimpleGraph")
        .def(py::init<std::size_t, const std::vector<std::pair<std::size_t, std::size_t>>&>(),
             py::arg("n"), py::arg("edges"))
        .def_readonly("n", &SimpleGraph::n);

    m.def("clique_number", &clique_number, py::arg("g"), py::arg("cap") = 16);
    m.def("clique_to_mweb", &clique_to_mweb);

    py::class_<ProductParams>(m, "ProductParams")
        .def(py::init([](double gamma, double alpha, double beta, std::size_t n_copies,
                         double delta, std::uint64_t seed) {
                 ProductParams p{gamma, alpha, beta, n_copies, delta, seed};
                 p.validate();
                 return p;
             }),
             py::arg("gamma") = 0.0, py::arg("alpha") = -1.0, py::arg("beta") = 1.0,
             py::arg("n_copies") = 1, py::arg("delta") = 0.5, py::arg("seed") = 0)
        .def_property_readonly("q", &ProductParams::q);

    m.def("gamma_product", &gamma_product);
    m.def("project_solution", &project_solution);
    m.def("theoretical_copies", &theoretical_copies);
    m.def("amplification_factor", &amplification_factor);
    m.def("mweb_to_problem_p", &mweb_to_problem_p, py::arg("g"),
          py::arg("n_copies") = std::optional<std::size_t>{});

    m.def("simple_weights", &simple_weights, py::arg("m"), py::arg("log_base") = 2.0);
    m.def("significance", &significance);
    m.def("p_star", &p_star);
    m.def("binomial_tail", &binomial_tail);

    py::class_<SambaRefinedParams>(m, "SambaRefinedParams")
        .def(py::init([](std::vector<double> p, double p_c) {
                 return SambaRefinedParams{std::move(p), p_c};
             }),
             py::arg("p"), py::arg("p_c"));
    py::class_<SambaSimpleParams>(m, "SambaSimpleParams")
        .def_readonly("p", &SambaSimpleParams::p)
        .def_readonly("w_edge", &SambaSimpleParams::w_edge)
        .def_readonly("w_nonedge", &SambaSimpleParams::w_nonedge)
        .def_readonly("density_warning", &SambaSimpleParams::density_warning);

    m.def("refined_weights", &refined_weights, py::arg("m"), py::arg("params"),
          py::arg("log_base") = 2.0);
    m.def("log_likelihood_ratio", &log_likelihood_ratio);

    py::class_<Summary>(m, "Summary")
        .def_property_readonly("length", &Summary::length)
        .def_property_readonly("num_regions",
                               [](const Summary& s) { return s.regions.size(); })
        .def_property_readonly("holes", [](const Summary& s) { return s.holes; });

    m.def("validate_summary",
          [](const BinaryMatrix& m_, const Summary& s) { return validate_summary(m_, s); });
    m.def("mdlh_to_problem_p", &mdlh_to_problem_p);
    m.def("solve_mdlh", &solve_mdlh);
    m.def("brute_force_mdlh", &brute_force_mdlh);
}
