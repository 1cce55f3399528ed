#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "hydrocomplex/closedform.hpp"
#include "hydrocomplex/compute.hpp"
#include "hydrocomplex/measures.hpp"
#include "hydrocomplex/quadrature.hpp"
#include "hydrocomplex/validation.hpp"

namespace py = pybind11;
using namespace hydrocomplex;

namespace {

validation::ValidationConfig make_config(std::vector<int> dims, int n_max, std::vector<double> z_list,
                                         double rel_tol, std::string const& k1_exponent, unsigned threads) {
    validation::ValidationConfig c;
    c.dims = std::move(dims);
    c.n_max = n_max;
    c.z_list = std::move(z_list);
    c.rel_tol = rel_tol;
    if (k1_exponent == "corrected")
        c.k1_exponent = measures::K1Exponent::Corrected;
    else if (k1_exponent == "printed")
        c.k1_exponent = measures::K1Exponent::AsPrinted;
    else
        throw std::invalid_argument("k1_exponent must be 'corrected' or 'printed'");
    c.threads = threads;
    return c;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Shape complexity of D-dimensional hydrogenic states";

    // registered against the C++ types, so both base classes still catch them
    py::register_exception<quadrature::ConvergenceError>(m, "ConvergenceError", PyExc_ArithmeticError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<InvalidState>(m, "InvalidState", PyExc_ValueError);

    py::enum_<Method>(m, "Method")
        .value("CLOSED", Method::ClosedForm)
        .value("PIPELINE", Method::AnalyticPipeline)
        .value("ORACLE", Method::Oracle);

    py::class_<QuantumState>(m, "QuantumState")
        .def(py::init<int, int, std::vector<int>>(), py::arg("dim"), py::arg("n"), py::arg("mu"))
        .def_static("ground", &QuantumState::ground, py::arg("dim"))
        .def_static("circular", &QuantumState::circular, py::arg("dim"), py::arg("n"))
        .def_property_readonly("dim", &QuantumState::dim)
        .def_property_readonly("n", &QuantumState::n)
        .def_property_readonly("mu", &QuantumState::mu)
        .def_property_readonly("l", &QuantumState::l)
        .def_property_readonly("m", &QuantumState::m)
        .def_property_readonly("eta", &QuantumState::eta)
        .def("is_ground", &QuantumState::is_ground)
        .def("is_circular", &QuantumState::is_circular)
        .def(py::self == py::self)
        .def("__repr__", [](QuantumState const& s) {
            return "QuantumState(dim=" + std::to_string(s.dim()) + ", n=" + std::to_string(s.n()) + ", mu=[" +
                   s.mu_string() + "])";
        });

    py::class_<MeasureResult>(m, "MeasureResult")
        .def_readonly("value", &MeasureResult::value)
        .def_readonly("err_est", &MeasureResult::err_est)
        .def_readonly("method", &MeasureResult::method)
        .def("__float__", [](MeasureResult const& r) { return r.value; })
        .def("__repr__", [](MeasureResult const& r) {
            return "MeasureResult(value=" + format_number(r.value, 17) + ", err_est=" + format_number(r.err_est, 3) +
                   ", method='" + std::string(method_name(r.method)) + "')";
        });

    py::class_<ComplexityReport>(m, "ComplexityReport")
        .def_readonly("state", &ComplexityReport::state)
        .def_readonly("Z", &ComplexityReport::Z)
        .def_readonly("method", &ComplexityReport::method)
        .def_readonly("disequilibrium_pos", &ComplexityReport::disequilibrium_pos)
        .def_readonly("shannon_pos", &ComplexityReport::shannon_pos)
        .def_readonly("complexity_pos", &ComplexityReport::complexity_pos)
        .def_readonly("disequilibrium_mom", &ComplexityReport::disequilibrium_mom)
        .def_readonly("shannon_mom", &ComplexityReport::shannon_mom)
        .def_readonly("complexity_mom", &ComplexityReport::complexity_mom)
        .def_readonly("product", &ComplexityReport::product)
        .def_readonly("normalization_pos", &ComplexityReport::normalization_pos)
        .def_readonly("normalization_mom", &ComplexityReport::normalization_mom)
        .def("to_json", &report_json, py::arg("indent") = 2);

    m.def("enumerate_states", &enumerate_states, py::arg("dim"), py::arg("n"));

    m.def(
        "compute",
        [](QuantumState const& state, double Z, std::string const& method, double rel_tol) {
            Method const which = parse_method(method);
            py::gil_scoped_release release;
            return compute_report(state, Z, which, rel_tol);
        },
        py::arg("state"), py::arg("Z") = 1.0, py::arg("method") = "pipeline",
        py::arg("rel_tol") = measures::default_rel_tol,
        "All six measures of one state by the 'closed', 'pipeline' or 'oracle' route.");

    m.def("ground_report", &closedform::ground_report, py::arg("dim"), py::arg("Z") = 1.0);
    m.def("circular_report", &closedform::circular_report, py::arg("dim"), py::arg("n"), py::arg("Z") = 1.0);
    m.def("has_closed_form", &closedform::has_closed_form, py::arg("state"));

    m.def(
        "density_position",
        [](QuantumState const& s, double Z, double r, std::vector<double> const& polar, double azimuth) {
            return hydrogenic::density_position(s, Z, r, polar, azimuth);
        },
        py::arg("state"), py::arg("Z"), py::arg("r"), py::arg("polar"), py::arg("azimuth") = 0.0);
    m.def(
        "density_momentum",
        [](QuantumState const& s, double Z, double p, std::vector<double> const& polar, double azimuth) {
            return hydrogenic::density_momentum(s, Z, p, polar, azimuth);
        },
        py::arg("state"), py::arg("Z"), py::arg("p"), py::arg("polar"), py::arg("azimuth") = 0.0);
    m.def("energy", &hydrogenic::energy, py::arg("state"), py::arg("Z") = 1.0);

    m.def(
        "validate_json",
        [](std::vector<int> dims, int n_max, std::vector<double> z_list, double rel_tol,
           std::string const& k1_exponent, unsigned threads) {
            auto const config = make_config(std::move(dims), n_max, std::move(z_list), rel_tol, k1_exponent, threads);
            py::gil_scoped_release release;
            return validation::run_validation(config).to_json(2);
        },
        py::arg("dims") = std::vector<int>{2, 3, 4, 5}, py::arg("n_max") = 3,
        py::arg("z_list") = std::vector<double>{1.0, 2.0, 5.0, 10.0}, py::arg("rel_tol") = measures::default_rel_tol,
        py::arg("k1_exponent") = "corrected", py::arg("threads") = 0u);
}
