#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "ctqw/enumerate.hpp"
#include "ctqw/equivalence.hpp"
#include "ctqw/families.hpp"
#include "ctqw/graph6.hpp"
#include "ctqw/scan.hpp"

namespace py = pybind11;
using namespace ctqw;

namespace {

std::vector<std::vector<double>> matrix_rows(const SymmetricMatrix& m) {
    std::vector<std::vector<double>> rows(m.size(), std::vector<double>(m.size()));
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) rows[i][j] = m(i, j);
    return rows;
}

}  // namespace

PYBIND11_MODULE(_ctqw, m) {
    m.doc() = "Laplacian vs adjacency continuous-time quantum walk equivalence";

    py::class_<Graph>(m, "Graph")
        .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def("degrees", &Graph::degrees)
        .def("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            std::ostringstream s;
            s << "Graph(n=" << g.vertex_count() << ", edges=" << g.edge_count() << ")";
            return s.str();
        });

    m.def("laplacian", [](const Graph& g) { return matrix_rows(laplacian(g)); });
    m.def("adjacency_matrix", [](const Graph& g) { return matrix_rows(adjacency_matrix(g)); });
    m.def("degree_profile", [](const Graph& g) {
        const DegreeProfile p = degree_profile(g);
        return py::make_tuple(p.degrees, p.is_regular);
    });
    m.def("is_connected", &is_connected);
    m.def("cartesian_product", &cartesian_product);

    m.def("graph6_decode", [](const std::string& s) { return graph6_decode(s); });
    m.def("graph6_encode", &graph6_encode);
    m.def("read_graph6_lines", &read_graph6_lines);

    m.def("enumerate_connected", &enumerate_connected, py::arg("n"));
    m.def("canonical_min_code",
          [](const Graph& g) { return py::make_tuple(g.vertex_count(), canonical_min_code(g).bits); });

    py::enum_<Generator>(m, "Generator")
        .value("LAPLACIAN", Generator::Laplacian)
        .value("ADJACENCY", Generator::Adjacency);

    py::class_<SpectralDecomposition>(m, "SpectralDecomposition")
        .def_readonly("n", &SpectralDecomposition::n)
        .def_readonly("eigenvalues", &SpectralDecomposition::eigenvalues)
        .def("eigenvector", [](const SpectralDecomposition& d, int k) {
            std::vector<double> v(d.n);
            for (int i = 0; i < d.n; ++i) v[i] = d.vec(k, i);
            return v;
        });

    m.def("decompose", &decompose, py::arg("graph"), py::arg("generator"));

    py::class_<WalkState>(m, "WalkState")
        .def_readonly("time", &WalkState::time)
        .def_readonly("amplitudes", &WalkState::amplitudes);

    m.def("evolve", &evolve, py::arg("decomposition"), py::arg("start"), py::arg("t"));
    m.def("probabilities", &probabilities);

    py::class_<MixingMatrix>(m, "MixingMatrix")
        .def_readonly("time", &MixingMatrix::time)
        .def_readonly("n", &MixingMatrix::n)
        .def("at", &MixingMatrix::at);

    m.def("mixing_matrix", &mixing_matrix, py::arg("decomposition"), py::arg("t"));

    py::class_<CosineSignature>(m, "CosineSignature")
        .def_readonly("start", &CosineSignature::start)
        .def_readonly("target", &CosineSignature::target)
        .def_readonly("terms", &CosineSignature::terms)
        .def("evaluate", &CosineSignature::evaluate);

    m.def(
        "cosine_signature",
        [](const SpectralDecomposition& dec, int s, int v, double cluster_tol, double drop_tol) {
            return cosine_signature(dec, s, v, SignatureConfig{cluster_tol, drop_tol});
        },
        py::arg("decomposition"), py::arg("start"), py::arg("target"),
        py::arg("cluster_tol") = 0.0, py::arg("drop_tol") = defaults::kDropTol);
    m.def("signatures_equal", &signatures_equal, py::arg("x"), py::arg("y"),
          py::arg("coeff_tol") = 1e-8, py::arg("cluster_tol") = 1e-8);

    py::class_<VertexWitness>(m, "VertexWitness")
        .def_readonly("target", &VertexWitness::target)
        .def_readonly("gap", &VertexWitness::gap)
        .def_readonly("coeff_laplacian", &VertexWitness::coeff_laplacian)
        .def_readonly("coeff_adjacency", &VertexWitness::coeff_adjacency);

    py::class_<StartClassification>(m, "StartClassification")
        .def_readonly("start", &StartClassification::start)
        .def_readonly("equivalent", &StartClassification::equivalent)
        .def_readonly("witness", &StartClassification::witness);

    py::class_<EquivalenceReport>(m, "EquivalenceReport")
        .def_readonly("graph", &EquivalenceReport::graph)
        .def_readonly("equivalent_starts", &EquivalenceReport::equivalent_starts)
        .def_readonly("detail", &EquivalenceReport::detail)
        .def_readonly("regular_shortcut", &EquivalenceReport::regular_shortcut)
        .def_readonly("merged_gap_warning", &EquivalenceReport::merged_gap_warning);

    m.def(
        "classify_start_vertices",
        [](const Graph& g) { return classify_start_vertices(g); },
        py::arg("graph"));

    py::class_<FamilyInstance>(m, "FamilyInstance")
        .def_readonly("graph", &FamilyInstance::graph)
        .def_readonly("designated_starts", &FamilyInstance::designated_starts)
        .def_readonly("label", &FamilyInstance::label);

    m.def("family", [](const std::string& descriptor) {
        return generate(parse_family_descriptor(descriptor));
    });

    py::class_<ScanHit>(m, "ScanHit")
        .def_readonly("graph6", &ScanHit::graph6)
        .def_readonly("starts", &ScanHit::starts);

    py::class_<ScanSummary>(m, "ScanSummary")
        .def_readonly("n", &ScanSummary::n)
        .def_readonly("total", &ScanSummary::total_connected)
        .def_readonly("regular", &ScanSummary::regular)
        .def_readonly("irregular", &ScanSummary::irregular)
        .def_readonly("equivalent", &ScanSummary::equivalent_irregular)
        .def_readonly("hits", &ScanSummary::hits)
        .def_readonly("elapsed_sec", &ScanSummary::elapsed_sec)
        .def("to_json", [](const ScanSummary& s) { return summary_to_json(s); });

    m.def(
        "scan_file",
        [](const std::filesystem::path& path, int workers) {
            py::gil_scoped_release release;
            return scan_file(path, workers);
        },
        py::arg("path"), py::arg("workers") = 0);
}
