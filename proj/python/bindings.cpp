#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kended/corpus.hpp"
#include "kended/degree_sums.hpp"
#include "kended/errors.hpp"
#include "kended/families.hpp"
#include "kended/graph6.hpp"
#include "kended/harness.hpp"
#include "kended/solver.hpp"
#include "kended/transforms.hpp"

namespace py = pybind11;
using namespace kended;

namespace {

py::object count_object(const ExtendedCount& c) {
    if (c.is_infinite()) return py::float_(std::numeric_limits<double>::infinity());
    return py::int_(c.value());
}

std::vector<std::pair<int, int>> edge_pairs(const std::vector<Edge>& edges) {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.emplace_back(e.u, e.v);
    return out;
}

py::dict tree_dict(const SubTree& t) {
    py::dict d;
    d["vertices"] = to_vector(t.vertices());
    d["edges"] = edge_pairs(t.edges());
    d["leaves"] = to_vector(leaves(t));
    return d;
}

py::dict tk_dict(const TkResult& r) {
    py::dict d;
    d["k"] = r.k;
    d["order"] = r.order;
    if (const auto* cycle = std::get_if<Cycle>(&r.witness)) {
        d["cycle"] = cycle->vertices;
    } else {
        d["tree"] = tree_dict(std::get<SubTree>(r.witness));
    }
    return d;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph family(const std::string& name, const std::vector<int>& params) {
    auto need = [&](std::size_t count) {
        if (params.size() != count) {
            throw ParameterError("family " + name + " takes " + std::to_string(count) + " parameters");
        }
    };
    if (name == "complete") { need(1); return build_family(FamilySpec::complete(params[0])); }
    if (name == "complete_bipartite") { need(2); return build_family(FamilySpec::complete_bipartite(params[0], params[1])); }
    if (name == "path") { need(1); return build_family(FamilySpec::path(params[0])); }
    if (name == "cycle") { need(1); return build_family(FamilySpec::cycle(params[0])); }
    if (name == "star") { need(1); return build_family(FamilySpec::star(params[0])); }
    if (name == "g1") { need(2); return build_family(FamilySpec::g1(params[0], params[1])); }
    if (name == "g2") { need(2); return build_family(FamilySpec::g2(params[0], params[1])); }
    if (name == "g3") { need(1); return build_family(FamilySpec::g3(params[0])); }
    if (name == "krr") { need(1); return build_family(FamilySpec::krr(params[0])); }
    throw ParameterError("unknown family: " + name);
}

py::dict check(const Graph& g, const std::string& theorem, int k, int lambda, int m) {
    const auto id = theorem_from_string(theorem);
    if (!id) throw ParameterError("unknown theorem: " + theorem);
    const CheckOutcome o = check_instance(g, TheoremInstance{*id, k, lambda, m});
    py::dict d;
    d["condition_holds"] = o.condition_holds;
    d["conclusion_holds"] = o.conclusion_holds;
    d["vacuous"] = o.vacuous;
    d["violation"] = o.violation();
    d["t_k"] = o.t_k;
    d["t_k1"] = o.t_k1;
    d["sigma_m"] = o.sigma_m ? count_object(*o.sigma_m) : py::object(py::none());
    d["n"] = o.n;
    return d;
}

std::string verify(const std::vector<Graph>& graphs, const std::string& description, int k_max,
                   int lambda_max, std::optional<int> m, const std::vector<std::string>& theorems,
                   int jobs, const std::string& format) {
    InstanceRanges ranges;
    ranges.k_max = k_max;
    ranges.lambda_max = lambda_max;
    ranges.m = m;
    for (const std::string& name : theorems) {
        const auto id = theorem_from_string(name);
        if (!id) throw ParameterError("unknown theorem: " + name);
        ranges.theorems.push_back(*id);
    }
    const VerificationReport r = verify_corpus(graphs, description, ranges, jobs);
    return render_report(r, format == "text" ? ReportFormat::text : ReportFormat::json);
}

py::dict replay(const Graph& g, int k, int lambda) {
    const ReplayReport r = proof_replay(g, k, lambda);
    py::dict d;
    d["t_k"] = r.t_k;
    d["t_k1"] = r.t_k1;
    d["precondition_held"] = r.precondition_held;
    d["trees_checked"] = r.trees_checked;
    d["exchanges_checked"] = r.exchanges_checked;
    d["ok"] = r.ok();
    py::list failures;
    for (const ReplayFailure& f : r.failures) {
        failures.append(py::dict(py::arg("claim") = f.claim, py::arg("detail") = f.detail));
    }
    d["failures"] = failures;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Largest k-ended trees and degree-sum conditions";

    auto base = py::register_exception<Error>(m, "KendedError");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<SizeError>(m, "SizeError", base.ptr());
    py::register_exception<ParameterError>(m, "ParameterError", base.ptr());
    py::register_exception<ConnectivityError>(m, "ConnectivityError", base.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init(&from_edge_list), py::arg("n"), py::arg("edges"))
        .def_static("from_graph6", &parse_graph6, py::arg("text"))
        .def("graph6", &write_graph6)
        .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
        .def("order", &Graph::order)
        .def("size", &Graph::size)
        .def("degree", &Graph::degree, py::arg("v"))
        .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
        .def("edges", [](const Graph& g) { return edge_pairs(g.edges()); })
        .def("is_connected", [](const Graph& g) { return g.is_connected(); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) { return "Graph('" + write_graph6(g) + "')"; });

    m.def("family", &family, py::arg("name"), py::arg("params"));
    m.def("parse_graph6", &parse_graph6, py::arg("text"));
    m.def("write_graph6", &write_graph6, py::arg("graph"));
    m.def("connected_graphs", [](int n) {
        std::vector<Graph> out;
        LabeledConnectedGraphs stream(n);
        while (auto g = stream.next()) out.push_back(std::move(*g));
        return out;
    }, py::arg("n"));
    m.def("random_connected", [](int n, double p, std::uint64_t seed) {
        return random_connected(n, p, seed);
    }, py::arg("n"), py::arg("p"), py::arg("seed"));

    m.def("sigma", [](const Graph& g, int k) { return count_object(sigma(g, k)); },
          py::arg("graph"), py::arg("m"));
    m.def("independence_number", &independence_number, py::arg("graph"));
    m.def("t_k", [](const Graph& g, int k) { return t_k_exact(g, k).order; },
          py::arg("graph"), py::arg("k"));
    m.def("t_k_witness", [](const Graph& g, int k) { return tk_dict(t_k_exact(g, k)); },
          py::arg("graph"), py::arg("k"));
    m.def("t_profile", [](const Graph& g, int k_max) {
        std::vector<int> out;
        for (const TkResult& r : t_profile(g, k_max)) out.push_back(r.order);
        return out;
    }, py::arg("graph"), py::arg("k_max"));
    m.def("min_leaf_count", [](const Graph& g) { return min_leaf_count_spanning(g).count; },
          py::arg("graph"));
    m.def("max_trees", [](const Graph& g, int k) {
        std::vector<py::dict> out;
        for (const SubTree& t : enumerate_max_trees(g, k)) out.push_back(tree_dict(t));
        return out;
    }, py::arg("graph"), py::arg("k"));
    m.def("has_dominating", [](const Graph& g, int k) { return has_dominating_k_ended(g, k); },
          py::arg("graph"), py::arg("k"));
    m.def("heuristic", [](const Graph& g, int k, std::uint64_t seed) {
        return tree_dict(heuristic_k_ended(g, k, seed));
    }, py::arg("graph"), py::arg("k"), py::arg("seed") = 0);
    m.def("size_guard", &solver_size_guard);

    m.def("theorems", [] {
        std::vector<std::string> out;
        for (TheoremId id : all_theorems()) out.push_back(to_string(id));
        return out;
    });
    m.def("check", &check, py::arg("graph"), py::arg("theorem"), py::arg("k"),
          py::arg("lambda_") = 0, py::arg("m") = 0);
    m.def("verify", &verify, py::arg("graphs"), py::arg("description") = "python",
          py::arg("k_max") = 3, py::arg("lambda_max") = 3, py::arg("m") = std::nullopt,
          py::arg("theorems") = std::vector<std::string>{}, py::arg("jobs") = 1,
          py::arg("format") = "json");
    m.def("sharpness", [](int k_max, int lambda_max, std::optional<int> max_order) {
        return render_report(sharpness_suite(1, k_max, 1, lambda_max, max_order.value_or(solver_size_guard())),
                             ReportFormat::json);
    }, py::arg("k_max") = 3, py::arg("lambda_max") = 3, py::arg("max_order") = std::nullopt);
    m.def("replay", &replay, py::arg("graph"), py::arg("k"), py::arg("lambda_"));
}
