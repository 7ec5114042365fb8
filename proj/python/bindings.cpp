#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bcpc/abenum.hpp"
#include "bcpc/bigraph.hpp"
#include "bcpc/community.hpp"
#include "bcpc/gen.hpp"
#include "bcpc/mbag.hpp"
#include "bcpc/oracle.hpp"
#include "bcpc/pbcpc.hpp"

namespace py = pybind11;
using namespace bcpc;

namespace {

using PyBiclique = std::pair<std::vector<int>, std::vector<int>>;

PyBiclique to_pair(const Biclique& b) { return {b.xs, b.ys}; }

std::vector<std::vector<PyBiclique>> to_partition(
    const std::vector<std::vector<Biclique>>& parts) {
  std::vector<std::vector<PyBiclique>> out;
  out.reserve(parts.size());
  for (const auto& part : parts) {
    std::vector<PyBiclique> members;
    members.reserve(part.size());
    for (const Biclique& b : part) members.push_back(to_pair(b));
    out.push_back(std::move(members));
  }
  return out;
}

py::dict stats_dict(const RunStats& s) {
  py::dict d;
  d["n_biclique"] = s.n_biclique;
  d["filtered"] = s.filtered;
  d["pbcpc"] = s.pbcpc;
  d["pbcpc_plus"] = s.pbcpc_plus;
  d["bcpc"] = s.bcpc;
  d["tree_nodes"] = s.tree_nodes;
  d["adjacency_tests"] = s.adjacency_tests;
  d["unions"] = s.unions;
  d["wall_ms"] = s.wall_ms;
  return d;
}

CommunityResult dispatch(const BipartiteGraph& g, const std::string& algo,
                         int alpha, int beta) {
  if (algo == "mbag") return detect_mbag(g, alpha, beta);
  if (algo == "pbcpc") return detect_pbcpc(g, alpha, beta);
  if (algo == "pbcpc-plus") return detect_pbcpc_plus(g, alpha, beta);
  if (algo == "ab") return detect_ab(g, alpha, beta);
  if (algo == "ab-m") return detect_ab_m(g, alpha, beta);
  if (algo == "ab-p") return detect_ab_p(g, alpha, beta);
  throw std::invalid_argument("unknown algorithm '" + algo + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Biclique percolation community detection on bipartite graphs";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<OracleLimitError>(m, "OracleLimitError");

  py::class_<BipartiteGraph>(m, "BipartiteGraph")
      .def_readonly("n_u", &BipartiteGraph::n_u)
      .def_readonly("n_v", &BipartiteGraph::n_v)
      .def_readonly("m", &BipartiteGraph::m)
      .def("neighbors_u", &BipartiteGraph::neighbors_u, py::arg("u"))
      .def("neighbors_v", &BipartiteGraph::neighbors_v, py::arg("v"))
      .def("__repr__", [](const BipartiteGraph& g) {
        std::ostringstream out;
        out << "BipartiteGraph(n_u=" << g.n_u << ", n_v=" << g.n_v << ", m=" << g.m
            << ")";
        return out.str();
      });

  m.def(
      "from_edges",
      [](int n_u, int n_v, const std::vector<std::pair<int, int>>& edges) {
        return from_edges(n_u, n_v, edges);
      },
      py::arg("n_u"), py::arg("n_v"), py::arg("edges"));

  m.def(
      "load_edge_list",
      [](const std::string& path, bool swap_sides) {
        return load_edge_list_file(path, swap_sides);
      },
      py::arg("path"), py::arg("swap_sides") = false,
      "Load a whitespace edge list; '%'/'#' lines are comments.");

  m.def(
      "loads_edge_list",
      [](const std::string& text, bool swap_sides) {
        std::istringstream in(text);
        return load_edge_list(in, swap_sides);
      },
      py::arg("text"), py::arg("swap_sides") = false);

  m.def("gen_random", &gen_random, py::arg("n_u"), py::arg("n_v"), py::arg("p"),
        py::arg("seed"));
  m.def("gen_block_chain", &gen_block_chain, py::arg("blocks"), py::arg("size"),
        py::arg("overlap"));
  m.def("two_hop_order", &two_hop_order, py::arg("graph"));

  m.def(
      "maximal_bicliques",
      [](const BipartiteGraph& g) {
        MbeTree tree = enumerate_maximal_bicliques(g);
        std::sort(tree.bicliques.begin(), tree.bicliques.end());
        std::vector<PyBiclique> out;
        out.reserve(tree.bicliques.size());
        for (const Biclique& b : tree.bicliques) out.push_back(to_pair(b));
        return out;
      },
      py::arg("graph"), "All maximal bicliques, canonically sorted.");

  m.def(
      "count_ab",
      [](const BipartiteGraph& g, int alpha, int beta) {
        return count_ab(g, alpha, beta);
      },
      py::arg("graph"), py::arg("alpha"), py::arg("beta"),
      "Number of (alpha,beta)-bicliques.");

  m.def(
      "detect",
      [](const BipartiteGraph& g, const std::string& algo, int alpha, int beta) {
        CommunityResult r = dispatch(g, algo, alpha, beta);
        py::dict out;
        out["communities"] = to_partition(r.communities());
        out["stats"] = stats_dict(r.stats);
        return out;
      },
      py::arg("graph"), py::arg("algo"), py::arg("alpha"), py::arg("beta"),
      "Run one detection algorithm; algo is one of mbag, pbcpc, pbcpc-plus, "
      "ab, ab-m, ab-p.");

  m.def(
      "oracle_maximal_bicliques",
      [](const BipartiteGraph& g) {
        std::vector<PyBiclique> out;
        for (const Biclique& b : oracle_maximal_bicliques(g)) out.push_back(to_pair(b));
        return out;
      },
      py::arg("graph"));

  m.def(
      "oracle_bcpc",
      [](const BipartiteGraph& g, int alpha, int beta) {
        return to_partition(oracle_bcpc(g, alpha, beta));
      },
      py::arg("graph"), py::arg("alpha"), py::arg("beta"),
      "Brute-force reference partition (desk-scale inputs only).");

  m.def(
      "oracle_count_ab",
      [](const BipartiteGraph& g, int alpha, int beta) {
        return oracle_count_ab(g, alpha, beta);
      },
      py::arg("graph"), py::arg("alpha"), py::arg("beta"));
}
