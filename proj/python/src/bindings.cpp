#include "abcone/bg.hpp"
#include "abcone/cli.hpp"
#include "abcone/errors.hpp"
#include "abcone/ks.hpp"
#include "abcone/model.hpp"
#include "abcone/oracle.hpp"
#include "abcone/specfun.hpp"
#include "abcone/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

namespace py = pybind11;
using namespace abcone;

namespace {

bg::ExtensionParam ext(std::optional<double> nu)
{
    return nu ? bg::ExtensionParam::finite(*nu) : bg::ExtensionParam::friedrichs();
}

ks::Matching matching(const std::string& v)
{
    if (v == "published") return ks::Matching::Published;
    if (v == "corrected") return ks::Matching::Corrected;
    throw DomainError("variant must be 'published' or 'corrected'");
}

py::dict bound_dict(const bg::BoundState& b)
{
    py::dict d;
    d["kappa_b"] = b.kappa_b;
    d["energy"] = b.energy;
    d["method"] = bg::method_tag(b.method);
    return d;
}

model::PhysicalConfig config(double alpha, double phi, int s, double mass)
{
    model::PhysicalConfig cfg{alpha, phi, s};
    cfg.mass = mass;
    cfg.validate();
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_abcone, m)
{
    m.doc() = "Spin-1/2 Aharonov-Bohm scattering and bound states in conical space";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", base.ptr());

    m.def("gamma", &specfun::gamma, py::arg("x"));
    m.def("bessel_j", [](double nu, double x) { return specfun::bessel_j(nu, x); }, py::arg("nu"), py::arg("x"));
    m.def("bessel_i", &specfun::bessel_i, py::arg("nu"), py::arg("x"));
    m.def("bessel_k", py::overload_cast<double, double>(&specfun::bessel_k), py::arg("nu"), py::arg("x"));
    m.def("bessel_k_complex", py::overload_cast<double, std::complex<double>>(&specfun::bessel_k), py::arg("nu"),
          py::arg("z"));

    m.def("effective_j", [](double alpha, double phi, int s, long long mm) {
        return model::effective_j(config(alpha, phi, s, 1.0), mm);
    }, py::arg("alpha"), py::arg("phi"), py::arg("s"), py::arg("m"));
    m.def("critical_channels", [](double alpha, double phi, int s) {
        std::vector<long long> out;
        for (const auto& c : model::critical_channels(config(alpha, phi, s, 1.0))) out.push_back(c.m);
        return out;
    }, py::arg("alpha"), py::arg("phi"), py::arg("s"));
    m.def("alpha_min", [](int s) { return model::alpha_min_for_two_channels(s).alpha; }, py::arg("s"));

    m.def("mu_nu", [](double j, double k, std::optional<double> nu) { return bg::mu_nu(ext(nu), j, k); },
          py::arg("j"), py::arg("k"), py::arg("nu") = py::none());
    m.def("phase_shift", [](long long mm, double j, double k, std::optional<double> nu) {
        return bg::phase_shift_extended(mm, j, ext(nu), k);
    }, py::arg("m"), py::arg("j"), py::arg("k"), py::arg("nu") = py::none());
    m.def("s_matrix", [](long long mm, double j, double k, std::optional<double> nu) {
        return bg::s_matrix(mm, j, ext(nu), k);
    }, py::arg("m"), py::arg("j"), py::arg("k"), py::arg("nu") = py::none());

    m.def("bound_state_bg", [](double j, double nu, double mass) {
        return bound_dict(bg::bound_state_bg(bg::ExtensionParam::finite(nu), j, mass));
    }, py::arg("j"), py::arg("nu"), py::arg("mass") = 1.0);
    m.def("bound_state_ks", [](double j, double lam, double r0, double mass, const std::string& variant) {
        return bound_dict(ks::bound_state_ks({r0, lam}, j, mass, matching(variant)));
    }, py::arg("j"), py::arg("lam"), py::arg("r0"), py::arg("mass") = 1.0, py::arg("variant") = "published");
    m.def("nu_from_physical", [](double j, double lam, double r0) { return ks::nu_from_physical({r0, lam}, j).nu(); },
          py::arg("j"), py::arg("lam"), py::arg("r0"));
    m.def("shell_bound_state", [](double j, double lam, double r0, double mass) {
        return bound_dict(oracle::delta_shell_bound_state({r0, lam}, j, mass));
    }, py::arg("j"), py::arg("lam"), py::arg("r0"), py::arg("mass") = 1.0);
    m.def("smatrix_pole", [](double j, double nu) { return oracle::find_smatrix_pole(j, nu); }, py::arg("j"),
          py::arg("nu"));

    m.def("deficiency_norm", [](double j, double k0, const std::string& sign) {
        if (sign != "+" && sign != "-") throw DomainError("sign must be '+' or '-'");
        const auto r = oracle::deficiency_norm(
            j, k0, sign == "+" ? oracle::DeficiencySign::Plus : oracle::DeficiencySign::Minus);
        py::dict d;
        d["value"] = r.value;
        d["abs_error_estimate"] = r.abs_error_estimate;
        d["converged"] = r.converged;
        d["cutoff_radius"] = r.cutoff_radius;
        return d;
    }, py::arg("j"), py::arg("k0"), py::arg("sign") = "+");
    m.def("deficiency_indices", [](double j, double k0) {
        const auto d = oracle::deficiency_indices(j, k0);
        return py::make_tuple(d.n_plus, d.n_minus);
    }, py::arg("j"), py::arg("k0"));

    m.def("run_verify", [] {
        const auto report = verify::run_verify();
        py::list out;
        for (const auto& c : report.checks) {
            py::dict d;
            d["module"] = c.module;
            d["check"] = c.name;
            d["passed"] = c.passed;
            d["metric"] = c.metric;
            d["tolerance"] = c.tolerance;
            out.append(d);
        }
        return out;
    });
    m.def("cli", [](std::vector<std::string> args) {
        args.insert(args.begin(), "abcone");
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Run a CLI command in process; returns (exit_code, stdout, stderr).");
}
