#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "treeirr/canonical.hpp"
#include "treeirr/claims.hpp"
#include "treeirr/cli.hpp"
#include "treeirr/construct.hpp"
#include "treeirr/degseq.hpp"
#include "treeirr/enumerate.hpp"
#include "treeirr/formats.hpp"
#include "treeirr/indices.hpp"

namespace py = pybind11;
using namespace treeirr;

namespace {

FibConvention conv(const std::string& s) { return fib_convention_from_string(s); }

py::dict bundle_dict(const IndexBundle& b) {
    py::dict d;
    d["n"] = b.n;
    d["m"] = b.m;
    d["max_degree"] = b.max_degree;
    d["min_degree"] = b.min_degree;
    d["irr"] = b.irr;
    d["sigma"] = b.sigma;
    d["irr_t"] = b.irr_t;
    d["sigma_t"] = b.sigma_t.is_integer() ? py::cast(b.sigma_t.numerator())
                                          : py::cast(b.sigma_t.to_double());
    d["m1"] = b.m1;
    d["m2"] = b.m2;
    d["forgotten"] = b.forgotten;
    return d;
}

TreeClassFilter make_filter(int n, std::optional<int> max_degree) {
    return TreeClassFilter{n, max_degree, std::nullopt};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "tree irregularity indices, generators, enumeration and claim checking";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::m)
        .def("degree", &Graph::degree)
        .def("degrees", &Graph::degrees)
        .def("edges", &Graph::edges)
        .def("has_edge", &Graph::has_edge)
        .def("is_connected", &Graph::is_connected)
        .def("max_degree", &Graph::max_degree)
        .def("min_degree", &Graph::min_degree)
        .def("__repr__", [](const Graph& g) {
            std::ostringstream s;
            s << "Graph(n=" << g.n() << ", m=" << g.m() << ")";
            return s.str();
        });

    py::class_<Tree, Graph>(m, "Tree")
        .def(py::init<int, std::vector<Edge>>(), py::arg("n"), py::arg("edges"))
        .def("__repr__", [](const Tree& t) {
            std::ostringstream s;
            s << "Tree(n=" << t.n() << ")";
            return s.str();
        });

    m.def("make_tree", &make_tree, py::arg("n"), py::arg("edges"));
    m.def("degree_sequence",
          [](const Graph& g) { return degree_sequence(g).values(); });
    m.def("canonical_code", &canonical_code);
    m.def("tree_center", &tree_center);

    m.def("parse_graph6", &parse_graph6);
    m.def("write_graph6", &write_graph6);
    m.def("parse_edgelist", &parse_edgelist);
    m.def("write_edgelist", &write_edgelist);
    m.def("tree_from_graph6",
          [](const std::string& s) { return Tree(parse_graph6(s)); });

    m.def("is_graphical",
          [](const std::vector<int>& v) { return is_graphical(DegreeSequence(v)); });
    m.def("realize_graph",
          [](const std::vector<int>& v) { return realize_graph(DegreeSequence(v)); });
    m.def("is_tree_realizable",
          [](const std::vector<int>& v) { return is_tree_realizable(DegreeSequence(v)); });
    m.def("realize_tree",
          [](const std::vector<int>& v) { return realize_tree(DegreeSequence(v)); });
    m.def("majorizes", [](const std::vector<int>& a, const std::vector<int>& b) {
        return majorizes(DegreeSequence(a), DegreeSequence(b));
    });
    m.def("fibonacci_degrees", [](int n, const std::string& convention) {
        return fibonacci_degrees(n, conv(convention)).values();
    }, py::arg("n"), py::arg("convention"));

    m.def("albertson", &albertson);
    m.def("sigma", &sigma);
    m.def("general_albertson", &general_albertson, py::arg("g"), py::arg("p"));
    m.def("total_albertson", &total_albertson);
    m.def("total_albertson_sorted_formula", [](const std::vector<int>& v) {
        return total_albertson_sorted_formula(DegreeSequence(v));
    });
    m.def("sigma_t", [](const Graph& g) {
        HalfInt h = sigma_t(g);
        return h.is_integer() ? py::cast(h.numerator()) : py::cast(h.to_double());
    });
    m.def("zagreb_m1", &zagreb_m1);
    m.def("zagreb_m2", &zagreb_m2);
    m.def("forgotten", &forgotten);
    m.def("imbalance_along_path", &imbalance_along_path);
    m.def("caterpillar_irr_formula", &caterpillar_irr_formula);
    m.def("mainalb2_formula", [](const std::vector<int>& v) {
        return mainalb2_formula(DegreeSequence(v));
    });
    m.def("compute_bundle", [](const Graph& g) { return bundle_dict(compute_bundle(g)); });

    m.def("star", &star);
    m.def("path", &path);
    m.def("caterpillar", &caterpillar);
    m.def("fibonacci_caterpillar", [](int n, const std::string& convention) {
        return fibonacci_caterpillar(n, conv(convention));
    }, py::arg("n"), py::arg("convention"));
    m.def("random_tree", &random_tree, py::arg("n"), py::arg("seed"));

    m.def("free_trees", [](int n, std::optional<int> max_degree) {
        return free_trees(make_filter(n, max_degree));
    }, py::arg("n"), py::arg("max_degree") = py::none());
    m.def("labeled_tree_class_count", [](int n) {
        return labeled_trees_oracle(n).representatives.size();
    });
    m.def("extremal",
          [](int n, const std::string& index, const std::string& objective,
             std::optional<int> max_degree, std::uint64_t seed, int exhaustive_limit) {
              ExtremalOptions opt;
              opt.seed = seed;
              opt.exhaustive_limit = exhaustive_limit;
              ExtremalResult r = extremal(
                  make_filter(n, max_degree), index_name_from_string(index),
                  objective == "max" ? Objective::maximize : Objective::minimize, opt);
              py::dict d;
              d["value"] = r.value;
              d["witness_graph6"] = write_graph6(r.witness);
              d["exhaustive"] = r.exhaustive;
              return d;
          },
          py::arg("n"), py::arg("index"), py::arg("objective"),
          py::arg("max_degree") = py::none(), py::arg("seed") = 0,
          py::arg("exhaustive_limit") = 14);

    m.def("claim_ids", []() {
        std::vector<std::string> ids;
        for (const auto& c : claim_registry()) ids.push_back(c.id);
        return ids;
    });
    m.def("evaluate_claims",
          [](int n_min, int n_max, std::uint64_t seed, std::vector<std::string> ids,
             int workers) {
              EvalConfig cfg{n_min, n_max, seed, workers};
              EvaluationReport r = evaluate_all(cfg, ids);
              return py::module_::import("json").attr("loads")(
                  report_to_json(r).dump());
          },
          py::arg("n_min") = 4, py::arg("n_max") = 9, py::arg("seed") = 0,
          py::arg("claims") = std::vector<std::string>{}, py::arg("workers") = 1);

    m.def("run_cli", [](const std::vector<std::string>& args, const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out, err;
        int code = cli::run(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), py::arg("input") = std::string{});

    m.attr("__version__") = kVersion;
}
