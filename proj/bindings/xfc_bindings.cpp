// Python bindings for the core operations. Exact rationals cross the
// boundary as fractions.Fraction; matrices keep their labels and masks.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xfc/density.hpp"
#include "xfc/embed.hpp"
#include "xfc/errors.hpp"
#include "xfc/factorization.hpp"
#include "xfc/gadget.hpp"
#include "xfc/gnp.hpp"
#include "xfc/induced.hpp"
#include "xfc/lp.hpp"
#include "xfc/matrix.hpp"
#include "xfc/mc.hpp"
#include "xfc/nmf.hpp"
#include "xfc/nnrank.hpp"
#include "xfc/problem.hpp"
#include "xfc/rectangle.hpp"
#include "xfc/regime.hpp"
#include "xfc/stable.hpp"
#include "xfc/udisj.hpp"

namespace py = pybind11;
using namespace xfc;

namespace {

py::object to_fraction(const Rat& r) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(rat_to_string(r));
}

Rat from_py_rational(const py::object& obj) {
    if (py::isinstance<py::int_>(obj)) return Rat(Int(py::str(obj).cast<std::string>()));
    return rat_from_string(py::str(obj).cast<std::string>());
}

py::object matrix_entry(const RatMatrix& m, std::size_t r, std::size_t c) {
    if (!m.is_defined(r, c)) return py::none();
    return to_fraction(m.at(r, c));
}

py::dict estimate_dict(const McEstimate& e) {
    py::dict d;
    d["trials"] = e.trials;
    d["successes"] = e.successes;
    d["undecided"] = e.undecided;
    d["point"] = e.point;
    d["ci_low"] = e.ci_low;
    d["ci_high"] = e.ci_high;
    d["seed"] = e.seed;
    d["flagged"] = e.flagged;
    d["flag_reason"] = e.flag_reason;
    return d;
}

py::dict regime_dict(const RegimeParams& rp) {
    py::dict d;
    d["regime"] = regime_name(rp.regime);
    d["t"] = rp.t;
    d["ell"] = rp.ell;
    d["gamma"] = to_fraction(rp.gamma);
    d["d"] = to_fraction(rp.d);
    d["v"] = rp.v;
    d["g"] = rp.g_valid ? py::object(py::float_(rp.g)) : py::object(py::none());
    d["predicted_exponent"] = rp.predicted_exponent;
    d["flags"] = rp.flags;
    d["asymptotic_ok"] = rp.asymptotic_ok;
    return d;
}

RatFactorization factorization_from_lists(const std::vector<std::vector<py::object>>& left,
                                          const std::vector<std::vector<py::object>>& right) {
    RatFactorization f;
    for (const auto& row : left) {
        std::vector<Rat> r;
        for (const auto& v : row) r.push_back(from_py_rational(v));
        f.left.push_back(std::move(r));
    }
    for (const auto& row : right) {
        std::vector<Rat> r;
        for (const auto& v : row) r.push_back(from_py_rational(v));
        f.right.push_back(std::move(r));
    }
    f.validate();
    return f;
}

}  // namespace

PYBIND11_MODULE(_xfc, m) {
    m.doc() = "stable set formulation complexity toolkit";
    m.attr("__version__") = "1.0.0";

    py::register_exception<BudgetExceeded>(m, "BudgetExceededError");
    py::register_exception<InstanceTooLarge>(m, "InstanceTooLargeError");
    py::register_exception<Error>(m, "XfcError");

    py::class_<Graph>(m, "Graph")
        .def_static("from_edges",
                    [](std::vector<int> vertices, std::vector<std::pair<int, int>> edges) {
                        return Graph::from_edges(std::move(vertices), edges);
                    },
                    py::arg("vertices"), py::arg("edges"))
        .def_static("complete", &Graph::complete, py::arg("t"))
        .def_static("cycle", &Graph::cycle, py::arg("t"))
        .def_static("path", &Graph::path, py::arg("t"))
        .def_static("edgeless", &Graph::edgeless, py::arg("vertices"))
        .def_static("from_json", &graph_from_json)
        .def_static("from_edge_list", &graph_from_edge_list)
        .def_property_readonly("vertices", &Graph::vertices)
        .def_property_readonly("edges", &Graph::edges)
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("has_edge", &Graph::has_edge)
        .def("has_vertex", &Graph::has_vertex)
        .def("induced", &Graph::induced, py::arg("subset"))
        .def("to_json",
             [](const Graph& g, std::optional<int> universe) {
                 return graph_to_json(g, universe);
             },
             py::arg("universe") = std::nullopt)
        .def("to_edge_list", &graph_to_edge_list)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "Graph(" + std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.edge_count()) + " edges)";
        });

    m.def("stability_number", &stability_number, py::arg("g"),
          "Exact stability number (branch and bound, certificate checked).");
    m.def("stable_set_witness",
          [](const Graph& g) { return stability_number_with_witness(g).witness; });
    m.def("enumerate_stable_sets",
          [](const Graph& g, std::optional<int> size_cap, std::uint64_t budget) {
              return enumerate_stable_sets(g, size_cap, budget);
          },
          py::arg("g"), py::arg("size_cap") = std::nullopt,
          py::arg("budget") = std::uint64_t(1) << 22);
    m.def("count_stable_sets",
          [](const Graph& g, std::uint64_t budget) { return count_stable_sets(g, budget); },
          py::arg("g"), py::arg("budget") = UINT64_MAX);
    m.def("max_avg_degree_induced",
          [](const Graph& g) { return to_fraction(max_avg_degree_induced(g)); },
          "Exact maximum of 2|E(H)|/|V(H)| over induced subgraphs, as Fraction.");

    py::class_<GadgetGraph>(m, "GadgetGraph")
        .def_static("build", &GadgetGraph::build, py::arg("template_graph"), py::arg("ell"))
        .def_property_readonly("graph", &GadgetGraph::graph)
        .def_property_readonly("template_graph", &GadgetGraph::tmpl)
        .def_property_readonly("ell", &GadgetGraph::ell)
        .def("u_vertex", &GadgetGraph::u_vertex)
        .def("v_vertex", &GadgetGraph::v_vertex)
        .def("sub", &GadgetGraph::sub, py::arg("a"))
        .def("small", &GadgetGraph::small, py::arg("a"))
        .def("extend_stable_set", &GadgetGraph::extend_stable_set, py::arg("b"))
        .def("to_json", &GadgetGraph::to_json);

    py::class_<RatMatrix>(m, "Matrix")
        .def_static("from_csv", &rat_matrix_from_csv)
        .def_static("from_json", &rat_matrix_from_json)
        .def_property_readonly("rows", &RatMatrix::rows)
        .def_property_readonly("cols", &RatMatrix::cols)
        .def_property_readonly("row_labels", &RatMatrix::row_labels)
        .def_property_readonly("col_labels", &RatMatrix::col_labels)
        .def("is_defined", &RatMatrix::is_defined)
        .def("at", &matrix_entry, "Entry as Fraction, or None when undefined.")
        .def("shifted",
             [](const RatMatrix& m2, const py::object& rho) {
                 return m2.shifted(from_py_rational(rho));
             },
             py::arg("rho"))
        .def("rank1_shifted",
             [](const RatMatrix& m2, const std::vector<py::object>& u) {
                 std::vector<Rat> ru;
                 for (const auto& v : u) ru.push_back(from_py_rational(v));
                 return m2.rank1_shifted(ru);
             },
             py::arg("u"))
        .def("submatrix", &RatMatrix::submatrix)
        .def("to_csv", [](const RatMatrix& m2) { return matrix_to_csv(m2); })
        .def("to_json", [](const RatMatrix& m2) { return matrix_to_json(m2); })
        .def("__eq__", [](const RatMatrix& a, const RatMatrix& b) { return a == b; });

    py::class_<MaxProblem>(m, "MaxProblem")
        .def_readonly("solution_labels", &MaxProblem::solution_labels)
        .def_readonly("objective_labels", &MaxProblem::objective_labels)
        .def_property_readonly("guarantees",
                               [](const MaxProblem& p) {
                                   std::vector<py::object> out;
                                   for (const Rat& g : p.guarantees)
                                       out.push_back(to_fraction(g));
                                   return out;
                               })
        .def("objective_value", [](const MaxProblem& p, std::size_t f, std::size_t s) {
            return to_fraction(p.objective_values.at(f).at(s));
        });

    m.def("slack_matrix", &slack_matrix, py::arg("problem"));
    m.def("stab_u_problem",
          [](const std::vector<Graph>& family, int n, const py::object& rho) {
              return stab_u_problem(family, n, from_py_rational(rho));
          },
          py::arg("family"), py::arg("n"), py::arg("rho") = 0);
    m.def("stab_nu_problem",
          [](const Graph& g, std::optional<std::vector<std::vector<int>>> family,
             std::uint64_t cap) { return stab_nu_problem(g, std::move(family), cap); },
          py::arg("g"), py::arg("objective_family") = std::nullopt,
          py::arg("solution_cap") = std::uint64_t(1) << 20);
    m.def("uniform_model_toy",
          [](int n, int k, const py::object& rho) {
              UniformToy toy = uniform_model_toy(n, k, from_py_rational(rho));
              py::dict d;
              d["problem"] = toy.problem;
              d["good_graphs"] = toy.good_graphs;
              std::vector<py::object> shift;
              for (const Rat& u : toy.shift_vector) shift.push_back(to_fraction(u));
              d["shift_vector"] = shift;
              d["shifted_high"] = to_fraction(toy.shifted_high);
              return d;
          },
          py::arg("n"), py::arg("k"), py::arg("rho") = 0);

    m.def("build_udisj",
          [](int n, std::optional<int> k) { return build_udisj(n, k); }, py::arg("n"),
          py::arg("k") = std::nullopt);
    m.def("complete_family_example", &complete_family_example, py::arg("n"));
    m.def("embed_udisj_via_gadget", [](const GadgetGraph& gg) {
        EmbedResult res = embed_udisj_via_gadget(gg);
        py::dict d;
        d["N"] = res.N;
        d["gadget_vertices_per_row"] = res.row_gadget_vertices;
        d["small_gadget_vertices_per_row"] = res.row_small_vertices;
        d["stable_extension_per_col"] = res.col_stable_sets;
        return d;
    });

    m.def("verify_factorization",
          [](const RatMatrix& m2, const std::vector<std::vector<py::object>>& left,
             const std::vector<std::vector<py::object>>& right, const py::object& tol) {
              auto f = factorization_from_lists(left, right);
              auto res = verify_factorization(m2, f, from_py_rational(tol));
              py::dict d;
              d["ok"] = res.ok;
              d["max_residual"] = res.max_residual;
              return d;
          },
          py::arg("matrix"), py::arg("left"), py::arg("right"), py::arg("tol") = 0);
    m.def("nmf_upper",
          [](const RatMatrix& m2, int r, int restarts, int iters, std::uint64_t seed) {
              NmfResult res = nmf_upper(to_real(m2), r, restarts, iters, seed);
              py::dict d;
              d["found"] = res.found;
              d["max_residual"] = res.max_residual;
              d["restart_index"] = res.restart_index;
              d["left"] = res.factorization.left;
              d["right"] = res.factorization.right;
              return d;
          },
          py::arg("matrix"), py::arg("rank"), py::arg("restarts") = 8,
          py::arg("iters") = 20000, py::arg("seed") = 0);
    m.def("rectangle_cover_bound",
          [](const RatMatrix& m2, std::uint64_t budget) {
              RectangleCover rc = rectangle_cover_bound(m2, budget);
              py::dict d;
              d["bound"] = rc.bound;
              d["exact"] = rc.exact;
              d["nodes_used"] = rc.nodes_used;
              return d;
          },
          py::arg("matrix"), py::arg("node_budget") = std::uint64_t(1) << 22);
    m.def("exact_nnegrk_small",
          [](const RatMatrix& m2, int rmax, int restarts, int iters, std::uint64_t seed) {
              NnrOptions opt;
              opt.rmax = rmax;
              opt.restarts = restarts;
              opt.iters = iters;
              opt.seed = seed;
              RankInterval ri = exact_nnegrk_small(m2, opt);
              py::dict d;
              d["lower"] = ri.lower;
              d["upper"] = ri.upper;
              d["lower_method"] = ri.lower_method;
              d["upper_method"] = ri.upper_method;
              d["certified"] = ri.certified();
              return d;
          },
          py::arg("matrix"), py::arg("rmax") = 6, py::arg("restarts") = 8,
          py::arg("iters") = 20000, py::arg("seed") = 1);
    m.def("theory_corlb", [](int t) {
        CorLbBound b = theory_corlb(t);
        py::dict d;
        d["t"] = b.t;
        d["exponent"] = b.exponent;
        d["value"] = b.value;
        d["ceil_value"] = b.ceil_value;
        return d;
    });
    m.def("theory_shifted_udisj",
          [](double n, double rho, double alpha, double beta) {
              ShiftedUdisjBound b = theory_shifted_udisj(n, rho, alpha, beta);
              py::dict d;
              d["leading_exponent"] = b.leading_exponent;
              d["entropy_quarter"] = b.entropy_quarter;
              d["note"] = b.note;
              return d;
          },
          py::arg("n"), py::arg("rho") = 0.0, py::arg("alpha") = 0.0, py::arg("beta") = 0.0);
    m.def("binary_entropy", &binary_entropy);

    m.def("factorization_to_lp",
          [](const std::vector<std::vector<py::object>>& left,
             const std::vector<std::vector<py::object>>& right, const MaxProblem& prob) {
              return lp_to_json(factorization_to_lp(factorization_from_lists(left, right),
                                                    prob));
          },
          py::arg("left"), py::arg("right"), py::arg("problem"),
          "Returns the LP formulation as JSON text.");
    m.def("lp_to_factorization",
          [](const std::string& lp_json, const MaxProblem& prob) {
              RatFactorization f = lp_to_factorization(lp_from_json(lp_json), prob);
              py::list left, right;
              for (const auto& row : f.left) {
                  py::list r;
                  for (const Rat& v : row) r.append(to_fraction(v));
                  left.append(r);
              }
              for (const auto& row : f.right) {
                  py::list r;
                  for (const Rat& v : row) r.append(to_fraction(v));
                  right.append(r);
              }
              py::dict d;
              d["left"] = left;
              d["right"] = right;
              return d;
          },
          py::arg("lp_json"), py::arg("problem"));

    m.def("sample_gnp",
          [](int n, double p, std::uint64_t seed) { return sample_gnp({n, p, seed}); },
          py::arg("n"), py::arg("p"), py::arg("seed") = 0);
    m.def("find_induced",
          [](const Graph& h, const Graph& g, std::uint64_t budget) {
              InducedSearchResult r = find_induced(h, g, budget);
              py::dict d;
              d["outcome"] = r.outcome == InducedSearchResult::Found      ? "found"
                             : r.outcome == InducedSearchResult::Absent   ? "absent"
                                                                          : "budget";
              d["map"] = r.map;
              d["nodes_used"] = r.nodes_used;
              return d;
          },
          py::arg("h"), py::arg("g"), py::arg("node_budget") = std::uint64_t(1) << 24);
    m.def("lambert_w", &lambert_w);
    m.def("c0_constant", &c0_constant);
    m.def("g_statistic",
          [](double n, double p, double v, double d) {
              GStat s = g_statistic(n, p, v, d);
              py::dict out;
              out["g"] = s.g;
              out["c0_g_squared"] = s.c0_g_squared;
              return out;
          },
          py::arg("n"), py::arg("p"), py::arg("v"), py::arg("d"));
    m.def("select_parameters",
          [](double n, double p, double c, double delta) {
              return regime_dict(select_parameters(n, p, c, delta));
          },
          py::arg("n"), py::arg("p"), py::arg("c") = 1.0, py::arg("delta") = 0.5);
    m.def("xc_bound_report",
          [](double n, double p, double c, double delta) {
              XcBoundReport rep = xc_bound_report(n, p, c, delta);
              py::dict d;
              d["params"] = regime_dict(rep.params);
              d["lower_exponent"] = rep.lower_exponent;
              d["upper_exponent"] = rep.upper_exponent;
              d["caveat"] = rep.caveat;
              return d;
          },
          py::arg("n"), py::arg("p"), py::arg("c") = 1.0, py::arg("delta") = 0.5);
    m.def("containment_probability_mc",
          [](const Graph& h, int n, double p, int trials, std::uint64_t seed,
             std::uint64_t budget, std::optional<double> d_override, int threads) {
              ContainmentReport rep = containment_probability_mc(h, n, p, trials, seed,
                                                                 budget, d_override, threads);
              py::dict d;
              d["estimate"] = estimate_dict(rep.estimate);
              d["g"] = rep.g;
              d["c0_g_squared"] = rep.c0_g_squared;
              d["d_used"] = rep.d_used;
              d["bound_valid"] = rep.bound_valid;
              return d;
          },
          py::arg("h"), py::arg("n"), py::arg("p"), py::arg("trials"), py::arg("seed") = 0,
          py::arg("node_budget") = std::uint64_t(1) << 24,
          py::arg("d_override") = std::nullopt, py::arg("threads") = 1);
    m.def("alpha_tail_experiment",
          [](int n, double p, int threshold, int trials, std::uint64_t seed, int threads) {
              AlphaTailReport rep =
                  alpha_tail_experiment(n, p, threshold, trials, seed, threads);
              py::dict d;
              d["estimate"] = estimate_dict(rep.estimate);
              d["threshold"] = rep.threshold;
              d["analytic_bound"] = rep.analytic_bound;
              return d;
          },
          py::arg("n"), py::arg("p"), py::arg("threshold"), py::arg("trials"),
          py::arg("seed") = 0, py::arg("threads") = 1);
    m.def("stable_count_check", [](const Graph& g) {
        StableCountReport rep = stable_count_check(g);
        py::dict d;
        d["count"] = rep.count;
        d["alpha"] = rep.alpha;
        d["bound"] = py::module_::import("builtins").attr("int")(rep.bound.str());
        d["holds"] = rep.holds;
        return d;
    });
}
