// Python bindings. Results cross the boundary as JSON text, which the
// package decodes into plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "extclosure/reference_corpus.hpp"

namespace py = pybind11;
using namespace extclosure;

namespace {

FpModule module_from_spec(const LoadedRing& ring, const std::string& spec) {
    const AlgebraPtr& a = ring.algebra();
    if (spec == "R") return free_module(a, 1);
    if (spec == "k") return residue_field(a);
    if (spec == "E") return matlis_dual(free_module(a, 1));
    return cyclic_module(ideal_generated(a, {ring.element(spec)}));
}

std::string analyze(const std::string& text) { return analyze_json(load_ring_text(text).algebra()).dump(); }

std::string diagnose_ring(const std::string& text, std::size_t depth, std::size_t workers) {
    const LoadedRing ring = load_ring_text(text);
    DiagnoseOptions o;
    o.depth = depth;
    o.enumeration.workers = workers;
    return diagnosis_json(ring.algebra(), diagnose(ring.algebra(), &ring.presentation, o)).dump();
}

std::string closure(const std::string& text, const std::string& element, std::size_t depth, std::size_t workers) {
    const LoadedRing ring = load_ring_text(text);
    EnumerationOptions e;
    e.workers = workers;
    return closure_json(ext_closure_contains_k(ring.algebra(), ring.element(element), depth, e)).dump();
}

std::size_t tor_dim(const std::string& text, const std::string& left, const std::string& right, std::size_t i) {
    const LoadedRing ring = load_ring_text(text);
    return tor(module_from_spec(ring, left), module_from_spec(ring, right), i).dim;
}

std::size_t ext1_dim(const std::string& text, const std::string& left, const std::string& right) {
    const LoadedRing ring = load_ring_text(text);
    return ext1(module_from_spec(ring, left), module_from_spec(ring, right)).dim();
}

std::vector<std::size_t> betti_list(const std::string& text, const std::string& module, std::size_t steps) {
    const LoadedRing ring = load_ring_text(text);
    return betti_numbers(module_from_spec(ring, module), steps);
}

std::string reference_corpus(std::size_t depth) {
    CorpusOptions o;
    o.depth = depth;
    return corpus_json(run_reference_corpus(o)).dump();
}

}  // namespace

PYBIND11_MODULE(_extclosure, m) {
    m.doc() = "Extension closures of modules over Artinian local F_p-algebras";

    py::register_exception<Error>(m, "ExtClosureError");

    m.def("analyze", &analyze, py::arg("ring_text"));
    m.def("diagnose", &diagnose_ring, py::arg("ring_text"), py::arg("depth") = 3, py::arg("workers") = 1);
    m.def("closure", &closure, py::arg("ring_text"), py::arg("element"), py::arg("depth") = 3,
          py::arg("workers") = 1);
    m.def("tor_dim", &tor_dim, py::arg("ring_text"), py::arg("left"), py::arg("right"), py::arg("index") = 1,
          "dim Tor_i(left, right); modules are R, k, E, or an element f meaning R/(f)");
    m.def("ext1_dim", &ext1_dim, py::arg("ring_text"), py::arg("left"), py::arg("right"));
    m.def("betti", &betti_list, py::arg("ring_text"), py::arg("module"), py::arg("steps") = 4);
    m.def("reference_corpus", &reference_corpus, py::arg("depth") = 3);
}
