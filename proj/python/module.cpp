#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conex/cycles.hpp"
#include "conex/embedding.hpp"
#include "conex/enumerate.hpp"
#include "conex/families.hpp"
#include "conex/formulas.hpp"
#include "conex/graph6.hpp"
#include "conex/oracle.hpp"
#include "conex/report.hpp"
#include "conex/tree.hpp"
#include "conex/verify.hpp"

namespace py = pybind11;
using namespace conex;

namespace {

py::object bipartition_py(const Graph& g) {
  auto b = g.bipartition();
  if (!b) return py::none();
  return py::make_tuple(b->first, b->second);
}

py::object find_embedding_py(const Graph& host, const Tree& pattern, uint64_t budget) {
  EmbedOptions opts;
  opts.max_nodes = budget;
  EmbedResult r = find_tree_embedding(host, pattern, opts);
  if (r.outcome == SearchOutcome::budget_exceeded)
    throw std::runtime_error("search budget exceeded");
  if (r.outcome == SearchOutcome::absent) return py::none();
  return py::cast(r.witness->map);
}

py::dict record_py(const ExtremalRecord& r) {
  py::dict d;
  d["n"] = r.n;
  d["forbid"] = r.forbid;
  d["connected"] = r.connected_only;
  d["max_edges"] = r.max_edges;
  d["witnesses"] = r.witnesses;
  return d;
}

}  // namespace

PYBIND11_MODULE(conex, m) {
  m.doc() = "Graph families, tree containment and exact extremal numbers";

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"),
           py::arg("edges"))
      .def_property_readonly("n", &Graph::order)
      .def("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edge_list)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("degree_sequence", &Graph::degree_sequence)
      .def("is_connected", &Graph::is_connected)
      .def("blocks", &Graph::blocks)
      .def("bipartition", &bipartition_py)
      .def("graph6", [](const Graph& g) { return graph6_encode(g); })
      .def("dot", [](const Graph& g) { return to_dot(g); })
      .def_static("from_graph6", [](const std::string& s) { return graph6_decode(s); })
      .def_static("complete", &Graph::complete)
      .def_static("empty", &Graph::empty_graph)
      .def_static("path", &Graph::path)
      .def_static("cycle", &Graph::cycle)
      .def_static("star", &Graph::star)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) +
               " m=" + std::to_string(g.edge_count()) + ">";
      });

  py::class_<Tree>(m, "Tree")
      .def(py::init<Graph>(), py::arg("graph"))
      .def_property_readonly("n", &Tree::order)
      .def("graph", &Tree::graph, py::return_value_policy::copy)
      .def("__repr__",
           [](const Tree& t) { return "<Tree n=" + std::to_string(t.order()) + ">"; });

  py::class_<SpiderShape>(m, "SpiderShape")
      .def_readonly("center", &SpiderShape::center)
      .def_readonly("legs", &SpiderShape::legs);

  m.def("disjoint_union", &disjoint_union);
  m.def("join", &join);

  m.def("barycenter", &barycenter);
  m.def("broom", &broom, py::arg("k"), py::arg("d"));
  m.def("as_spider", [](const Tree& t) -> py::object {
    auto s = as_spider(t);
    return s ? py::cast(*s) : py::none();
  });
  m.def("binary_tree", &binary_tree, py::arg("r"));
  m.def("max_bare_path", &max_bare_path);
  m.def("enumerate_trees", &enumerate_trees, py::arg("k"));
  m.def("tree_diameter", &tree_diameter);

  m.def("g_family", &g_family);
  m.def("g_family_edges", &g_family_edges);
  m.def("a_x", &a_x);
  m.def("s_family", &s_family);
  m.def("s_family_edges", &s_family_edges);
  m.def("p_family", &p_family);
  m.def("p_family_edges", &p_family_edges);
  m.def("f1", &f1);
  m.def("f2", &f2);
  m.def("f3", &f3);
  m.def("f1_edges", &f1_edges);
  m.def("f2_edges", &f2_edges);
  m.def("f3_edges", &f3_edges);
  m.def("almost_regular", &almost_regular);
  m.def("complete_bipartite", &complete_bipartite);
  m.def("union_cliques", &union_cliques);

  m.def("kopylov_ex_c_path", &kopylov_ex_c_path);
  m.def("woodall_ex_long_cycle", &woodall_ex_long_cycle);
  m.def("two_connected_bound", &two_connected_bound);
  m.def("broom_ex_c", [](long long n, long long k, long long d) {
    BroomExc b = broom_ex_c(n, k, d);
    return py::make_tuple(b.edges, b.f3_undefined);
  });

  m.def("find_tree_embedding", &find_embedding_py, py::arg("host"), py::arg("pattern"),
        py::arg("budget") = 0);
  m.def("is_tree_free", &is_tree_free);
  m.def("circumference", &circumference);
  m.def("has_cycle_at_least", &has_cycle_at_least);
  m.def("has_cycle_exact", &has_cycle_exact);
  m.def("longest_path", &longest_path);

  m.def("count_graphs", &count_graphs, py::arg("n"), py::arg("connected_only"),
        py::arg("force") = false);
  m.def(
      "enumerate_graphs",
      [](int n, bool connected_only, bool force) {
        std::vector<std::string> out;
        for_each_graph(
            n, connected_only,
            [&](const SmallGraph& g, const CanonResult& c) {
              out.push_back(small_canonical_g6(g, c));
            },
            nullptr, force);
        return out;
      },
      py::arg("n"), py::arg("connected_only"), py::arg("force") = false);
  m.def(
      "extremal_number",
      [](int n, const std::string& forbid, bool connected_only, int workers, bool force) {
        return record_py(extremal_number(n, Forbid::parse(forbid), connected_only, workers, force));
      },
      py::arg("n"), py::arg("forbid"), py::arg("connected_only") = false, py::arg("workers") = 1,
      py::arg("force") = false);

  m.def("gamma_report", [](const std::vector<int>& ks) {
    py::list rows;
    for (const RatioReport& r : gamma_report(ks)) {
      py::dict d;
      d["k"] = r.k;
      d["construction"] = r.construction;
      d["n"] = r.n;
      d["edges"] = r.edges;
      d["ratio_to_half"] = r.ratio_to_half;
      d["ratio_to_quarter"] = r.ratio_to_quarter;
      d["applicable"] = r.applicable;
      rows.append(d);
    }
    return rows;
  });

  m.def("verify", [](const std::string& suite, int max_n) {
    SuiteReport rep;
    auto n_or = [&](int d) { return max_n > 0 ? max_n : d; };
    if (suite == "eq1")
      rep = verify_eq1(n_or(8));
    else if (suite == "thm2.2")
      rep = verify_thm2_2(n_or(8));
    else if (suite == "thm2.3-lb")
      rep = verify_thm2_3_lb(n_or(40), 20);
    else if (suite == "thm1.3-lower")
      rep = verify_thm1_3_lower(13, n_or(80));
    else if (suite == "thm1.2")
      rep = verify_thm1_2(12, n_or(80));
    else if (suite == "claim3.1")
      rep = verify_claim3_1(12, n_or(80), {-12, -8, -4, 0});
    else if (suite == "prop2.1")
      rep = verify_prop2_1(n_or(12));
    else if (suite == "prop5.1")
      rep = verify_prop5_1(n_or(7));
    else if (suite == "edge-identities")
      rep = verify_edge_identities();
    else if (suite == "gamma")
      rep = verify_gamma({50, 100, 200});
    else if (suite == "enum-counts")
      rep = verify_enum_counts(n_or(8), 4);
    else
      throw std::invalid_argument("unknown suite: " + suite);
    py::module json = py::module::import("json");
    return json.attr("loads")(rep.to_json().dump());
  }, py::arg("suite"), py::arg("max_n") = -1);
}
