#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "rect_index/grid.hpp"
#include "rect_index/index2d.hpp"
#include "rect_index/reference.hpp"
#include "rect_index/workload.hpp"

namespace py = pybind11;
using namespace rect_index;

namespace {

std::vector<std::pair<std::size_t, std::size_t>> as_pairs(const std::vector<Occurrence>& occ) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(occ.size());
    for (const auto& o : occ) {
        out.emplace_back(o.row, o.col);
    }
    return out;
}

std::vector<std::string> rows_of(const Grid2D& g) {
    std::vector<std::string> rows;
    for (std::size_t i = 1; i <= g.height(); ++i) {
        std::string r;
        for (auto c : g.row(i)) {
            r.push_back(char(c));
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

}

PYBIND11_MODULE(_core, m) {
    m.doc() = "Rectangular pattern index over 2D texts";

    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);

    py::class_<Grid2D>(m, "Grid")
        .def(py::init(&Grid2D::from_rows), py::arg("rows"))
        .def_property_readonly("height", &Grid2D::height)
        .def_property_readonly("width", &Grid2D::width)
        .def("at", &Grid2D::at, py::arg("row"), py::arg("col"), "1-based symbol access")
        .def("rows", &rows_of)
        .def("transpose", [](const Grid2D& g) { return transpose(g); })
        .def("__str__", &serialize_grid)
        .def("__eq__", [](const Grid2D& a, const Grid2D& b) { return a == b; });
    py::implicitly_convertible<std::vector<std::string>, Grid2D>();

    m.def("parse_grid", [](const std::string& s) { return parse_grid(std::string_view(s)); }, py::arg("text"));
    m.def("read_grid_file", &read_grid_file, py::arg("path"));
    m.def(
        "random_grid",
        [](std::size_t h, std::size_t w, std::uint32_t sigma, std::uint64_t seed) {
            return Workload(seed).random_grid(h, w, sigma);
        },
        py::arg("height"), py::arg("width"), py::arg("sigma"), py::arg("seed") = 0);

    py::class_<SpaceStats>(m, "SpaceStats")
        .def_readonly("text_words", &SpaceStats::text_words)
        .def_readonly("kmr_words", &SpaceStats::kmr_words)
        .def_readonly("fragment_trie_words", &SpaceStats::fragment_trie_words)
        .def_readonly("suffix_index_words", &SpaceStats::suffix_index_words)
        .def_readonly("long_index_trie_words", &SpaceStats::long_index_trie_words)
        .def_readonly("point_words", &SpaceStats::point_words)
        .def_readonly("trie_nodes", &SpaceStats::trie_nodes)
        .def_readonly("trie_leaves", &SpaceStats::trie_leaves)
        .def_readonly("cuts", &SpaceStats::cuts)
        .def_readonly("points", &SpaceStats::points)
        .def_readonly("lce_build_peak_words", &SpaceStats::lce_build_peak_words)
        .def_property_readonly("total_words", &SpaceStats::total_words);

    py::class_<Index2D>(m, "Index2D")
        .def(py::init<const Grid2D&>(), py::arg("text"))
        .def("query", [](const Index2D& idx, const Grid2D& p) { return as_pairs(idx.query(p)); }, py::arg("pattern"),
             "1-based (row, col) of every occurrence, ascending")
        .def("space_stats", &Index2D::space_stats)
        .def_property_readonly("small_width_threshold", &Index2D::small_width_threshold)
        .def_property_readonly("text", &Index2D::text, py::return_value_policy::reference_internal);

    m.def("naive_search", [](const Grid2D& t, const Grid2D& p) { return as_pairs(reference::naive_search_2d(t, p)); },
          py::arg("text"), py::arg("pattern"));
}
