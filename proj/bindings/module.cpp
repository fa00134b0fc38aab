#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "strataforge/cli.hpp"

namespace py = pybind11;
using namespace strataforge;

PYBIND11_MODULE(_core, m) {
    m.doc() = "projective covers and presentations of stratified quiver algebras";

    py::register_exception<MalformedError>(m, "MalformedError", PyExc_ValueError);
    py::register_exception<UnsupportedError>(m, "UnsupportedError", PyExc_NotImplementedError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<VerifyError>(m, "VerifyError", PyExc_RuntimeError);

    py::class_<Fixture>(m, "Fixture")
        .def_property_readonly("name", [](const Fixture& f) { return f.name; })
        .def_property_readonly("dimension",
                               [](const Fixture& f) { return f.stratified.algebra->dim(); })
        .def_property_readonly(
            "vertices",
            [](const Fixture& f) { return f.stratified.algebra->quiver().vertices; })
        .def_property_readonly("strata", [](const Fixture& f) {
            const auto& labels = f.stratified.algebra->quiver().vertices;
            std::vector<std::vector<std::string>> out;
            for (const auto& stratum : f.stratified.strata) {
                std::vector<std::string> s;
                for (int v : stratum) s.push_back(labels[v]);
                out.push_back(std::move(s));
            }
            return out;
        });

    m.def("load_fixture", &load_fixture, py::arg("path"));
    m.def(
        "parse_fixture",
        [](const std::string& text) { return parse_fixture(nlohmann::ordered_json::parse(text)); },
        py::arg("text"));

    m.def(
        "run_command",
        [](const std::string& command, const Fixture& fx, long long budget, bool oracle,
           const std::string& report) {
            RunOptions opt;
            opt.budget = budget;
            opt.oracle = oracle;
            opt.report = report;
            RunResult r = run_command(command, fx, opt);
            return py::make_tuple(r.exit_code, r.report);
        },
        py::arg("command"), py::arg("fixture"), py::arg("budget") = 1 << 20,
        py::arg("oracle") = true, py::arg("report") = "json");

    m.def(
        "covers",
        [](const Fixture& fx, long long budget) {
            CoversResult res = construct_all_covers(fx.stratified, budget);
            const auto& labels = fx.stratified.algebra->quiver().vertices;
            py::dict out;
            for (const auto& [v, cert] : res.covers) {
                py::dict d;
                d["dims"] = cert.cover.dims;
                d["length"] = composition_length(cert.cover);
                d["hom_row"] = cert.hom_row;
                d["ext_row"] = cert.ext_row;
                out[py::str(labels[v])] = d;
            }
            return out;
        },
        py::arg("fixture"), py::arg("budget") = 1 << 20);

    m.def(
        "present",
        [](const Fixture& fx, long long budget) {
            CoversResult res = construct_all_covers(fx.stratified, budget);
            RecoveryResult rec = recover_algebra(fx.stratified.algebra, res.covers);
            py::dict out;
            out["endo_dimension"] = rec.endo.alg.dim;
            out["gabriel_arrows"] = (int)rec.gabriel.presentation.quiver.arrows.size();
            out["gabriel_relations"] = (int)rec.gabriel.presentation.relations.size();
            return out;
        },
        py::arg("fixture"), py::arg("budget") = 1 << 20);

    m.def(
        "ext_quiver",
        [](const Fixture& fx) {
            ExtQuiverResult r = ext_quiver_with_quadratic_relations(fx.stratified.algebra);
            py::list arrows;
            for (const Arrow& a : r.quiver.arrows)
                arrows.append(py::make_tuple(r.quiver.vertices[a.source],
                                             r.quiver.vertices[a.target], a.name));
            int quad = 0;
            for (const auto& b : r.blocks) quad += b.relations.cols();
            py::dict out;
            out["arrows"] = arrows;
            out["quadratic_relations"] = quad;
            return out;
        },
        py::arg("fixture"));
}
