#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "mvd/block_decomposition.hpp"
#include "mvd/catalog.hpp"
#include "mvd/compose.hpp"
#include "mvd/errors.hpp"
#include "mvd/families.hpp"
#include "mvd/formats.hpp"
#include "mvd/scan.hpp"
#include "mvd/solver.hpp"

namespace py = pybind11;
using namespace mvd;

namespace {

FamilySpec spec_from(const std::string& family, const std::vector<int>& params) {
    const auto fam = family_from_name(family);
    if (!fam) throw InputError("unknown family '" + family + "'");
    return {*fam, params};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "monochromatic vertex-disconnection toolkit";

    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
    py::register_exception<IntegrityError>(m, "IntegrityError", PyExc_RuntimeError);
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def_static("from_edge_list", &Graph::from_edge_list, py::arg("labels"), py::arg("edges"))
        .def_static("from_adjacency_matrix", &Graph::from_adjacency_matrix, py::arg("labels"),
                    py::arg("matrix"))
        .def_property_readonly("n", &Graph::order)
        .def_property_readonly("m", &Graph::size)
        .def_property_readonly("labels", &Graph::labels)
        .def("label", &Graph::label)
        .def("index_of", &Graph::index_of)
        .def("adjacent", &Graph::adjacent)
        .def("neighbors", &Graph::neighbors)
        .def("degree", &Graph::degree)
        .def("edges", &Graph::edges)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
        });

    py::class_<Coloring>(m, "Coloring")
        .def(py::init([](std::vector<int> colors) { return Coloring{std::move(colors)}; }))
        .def_readonly("colors", &Coloring::colors)
        .def_property_readonly("color_count", &Coloring::color_count)
        .def("classes", &Coloring::classes)
        .def("normalized", &Coloring::normalized);

    py::class_<MvdCheck>(m, "MvdCheck")
        .def_readonly("ok", &MvdCheck::ok)
        .def_readonly("fail_x", &MvdCheck::fail_x)
        .def_readonly("fail_y", &MvdCheck::fail_y)
        .def("__bool__", [](const MvdCheck& c) { return c.ok; });

    py::class_<BlockLine>(m, "BlockLine")
        .def_readonly("block", &BlockLine::block)
        .def_readonly("order", &BlockLine::order)
        .def_readonly("value", &BlockLine::value)
        .def_readonly("source", &BlockLine::source);

    py::class_<SolveReport>(m, "SolveReport")
        .def_readonly("value", &SolveReport::value)
        .def_readonly("witness", &SolveReport::witness)
        .def_property_readonly("method",
                               [](const SolveReport& r) { return std::string(to_string(r.method)); })
        .def_readonly("per_block", &SolveReport::per_block);

    py::class_<BlockDecomposition>(m, "BlockDecomposition")
        .def_readonly("blocks", &BlockDecomposition::blocks)
        .def_readonly("block_graphs", &BlockDecomposition::block_graphs)
        .def_readonly("cut_vertices", &BlockDecomposition::cut_vertices)
        .def_property_readonly("r", &BlockDecomposition::block_count)
        .def_property_readonly("t", &BlockDecomposition::trivial_block_count);

    py::class_<CatalogEntry>(m, "CatalogEntry")
        .def_readonly("name", &CatalogEntry::name)
        .def_readonly("graph", &CatalogEntry::graph)
        .def_readonly("coloring", &CatalogEntry::coloring)
        .def_readonly("mvd_value", &CatalogEntry::mvd_value)
        .def_readonly("tags", &CatalogEntry::tags);

    py::class_<CatalogStore>(m, "CatalogStore")
        .def_static("load_directory", &CatalogStore::load_directory)
        .def_readonly("entries", &CatalogStore::entries)
        .def("__len__", [](const CatalogStore& s) { return s.entries.size(); });

    py::class_<ScanRow>(m, "ScanRow")
        .def_readonly("k", &ScanRow::k)
        .def_readonly("expected", &ScanRow::expected)
        .def_readonly("observed", &ScanRow::observed)
        .def_readonly("ok", &ScanRow::ok);

    py::class_<ScanResult>(m, "ScanResult")
        .def_readonly("n", &ScanResult::n)
        .def_readonly("total_codes", &ScanResult::total_codes)
        .def_readonly("connected_count", &ScanResult::connected_count)
        .def_readonly("emax_rows", &ScanResult::emax_rows)
        .def_readonly("fv_rows", &ScanResult::fv_rows)
        .def("ok", &ScanResult::ok);

    py::class_<PropertyScan>(m, "PropertyScan")
        .def_readonly("n", &PropertyScan::n)
        .def_readonly("property", &PropertyScan::property)
        .def_readonly("connected_checked", &PropertyScan::connected_checked)
        .def_readonly("violations", &PropertyScan::violations)
        .def("ok", &PropertyScan::ok);

    m.def("induced_subgraph", &induced_subgraph);
    m.def("is_connected", &is_connected);
    m.def("components", &components);
    m.def("is_separated", &is_separated);
    m.def("local_connectivity", &local_connectivity);
    m.def("kappa_plus", &kappa_plus);
    m.def("is_complete", &is_complete);
    m.def("is_2_connected", &is_2_connected);
    m.def("is_minimally_2_connected", &is_minimally_2_connected);
    m.def("is_triangle_free", &is_triangle_free);

    m.def("decompose", &decompose);
    m.def("has_monochromatic_cut", &has_monochromatic_cut);
    m.def("is_mvd_coloring", &is_mvd_coloring);
    m.def("mvd_upper_bound", &mvd_upper_bound);
    m.def("mvd_exact", &mvd_exact, py::arg("g"), py::arg("cap") = kDefaultCap,
          py::arg("jobs") = 1);

    m.def(
        "solve_block",
        [](const Graph& block, const CatalogStore* store, int cap) {
            const BlockSolve s = solve_block(block, store, cap);
            return py::make_tuple(s.value, s.coloring, s.source);
        },
        py::arg("block"), py::arg("store") = nullptr, py::arg("cap") = kDefaultCap);
    m.def(
        "mvd_compose",
        [](const Graph& g, const CatalogStore* store, int cap) {
            return mvd_compose(g, store, cap);
        },
        py::arg("g"), py::arg("store") = nullptr, py::arg("cap") = kDefaultCap);
    m.def(
        "solve_auto",
        [](const Graph& g, const CatalogStore* store, int cap) {
            if (auto formula = formula_solve(g)) {
                SolveReport report;
                report.value = formula->value;
                report.witness = formula->witness;
                report.method = SolveMethod::formula;
                return report;
            }
            return mvd_compose(g, store, cap);
        },
        py::arg("g"), py::arg("store") = nullptr, py::arg("cap") = kDefaultCap);

    m.def("generate",
          [](const std::string& family, const std::vector<int>& params) {
              return generate(spec_from(family, params));
          },
          py::arg("family"), py::arg("params") = std::vector<int>{});
    m.def("join", &join);
    m.def("cartesian_product", &cartesian_product);
    m.def("mvd_formula",
          [](const std::string& family, const std::vector<int>& params) {
              return mvd_formula(spec_from(family, params));
          },
          py::arg("family"), py::arg("params") = std::vector<int>{});
    m.def("f_v", &f_v);
    m.def("emax", &emax);
    m.def("block_bound", &block_bound);

    m.def("find_isomorphism", &find_isomorphism);
    m.def("catalog_check", [](const CatalogStore& store, int cap) {
        const CatalogCheckReport report = catalog_check(store, cap);
        py::list issues;
        for (const auto& issue : report.issues) {
            issues.append(py::make_tuple(issue.entry, issue.problem, issue.warning));
        }
        return py::make_tuple(report.ok(), issues);
    }, py::arg("store"), py::arg("cap") = kDefaultCap);

    m.def("scan_extremal", &scan_extremal, py::arg("n"), py::arg("cap") = kDefaultCap,
          py::arg("jobs") = 1, py::arg("max_n") = 6);
    m.def("scan_property", &scan_property, py::arg("n"), py::arg("property"), py::arg("jobs") = 1,
          py::arg("max_n") = 7);

    m.def("parse_mvdg", [](const std::string& text) { return parse_mvdg(text); });
    m.def("format_mvdg", &format_mvdg);
    m.def("load_graph_file", &load_graph_file);
    m.def("parse_coloring",
          [](const Graph& g, const std::string& text) { return parse_coloring(g, text); });
    m.def("format_coloring", &format_coloring);
}
