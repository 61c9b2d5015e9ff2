#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "moddef/commands.hpp"
#include "moddef/errors.hpp"
#include "moddef/fixtures.hpp"
#include "moddef/hochschild.hpp"
#include "moddef/io.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

moddef::Overrides make_overrides(std::optional<std::string> field, std::optional<std::size_t> order,
                                 std::optional<std::size_t> degree) {
    moddef::Overrides o;
    if (field) o.field = moddef::Field::parse(*field);
    o.order = order;
    o.degree = degree;
    return o;
}

std::vector<std::vector<std::string>> to_strings(const moddef::Matrix& m) {
    std::vector<std::vector<std::string>> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& s : m.row(r)) out[r].push_back(s.to_string());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Hochschild deformation theory of modules over finite-dimensional algebras.";

    py::register_exception<moddef::InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<moddef::ResourceError>(m, "ResourceError", PyExc_RuntimeError);

    m.def("commands", [] {
        std::vector<std::string> names;
        for (auto n : moddef::command_names()) names.emplace_back(n);
        return names;
    });

    m.def(
        "run",
        [](const std::string& command, const std::string& document, std::optional<std::string> field,
           std::optional<std::size_t> order, std::optional<std::size_t> degree) {
            auto result = moddef::run_document(command, document, make_overrides(field, order, degree));
            return std::make_tuple(result.exit_code, moddef::print(result.document));
        },
        "command"_a, "document"_a, "field"_a = py::none(), "order"_a = py::none(), "degree"_a = py::none(),
        "Runs a command on a JSON problem document; returns (exit_code, result_json).");

    m.def(
        "fixture", [](const std::string& name) { return moddef::print(moddef::fixtures::fixture_document(name)); },
        "name"_a, "The built-in fixture document A, B or C as JSON text.");

    m.def(
        "differential_matrix",
        [](const std::string& document, std::size_t degree) {
            auto problem = moddef::parse_problem(document);
            moddef::HochschildComplex complex(problem.module, problem.options.limits);
            return to_strings(complex.differential_matrix(degree));
        },
        "document"_a, "degree"_a, "d_n as rows of exact scalar strings.");

    m.def(
        "cohomology_dims",
        [](const std::string& document, std::size_t degree) {
            auto problem = moddef::parse_problem(document);
            moddef::HochschildComplex complex(problem.module, problem.options.limits);
            auto r = complex.cohomology(degree);
            return py::dict("cocycles"_a = r.dim_cocycles, "coboundaries"_a = r.dim_coboundaries,
                            "cohomology"_a = r.dim_cohomology);
        },
        "document"_a, "degree"_a);
}
