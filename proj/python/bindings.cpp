// bindings.cpp: pybind11 module tidisc._core

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli/app.hpp"
#include "tidisc/correlated_env.hpp"
#include "tidisc/duo_dynamics.hpp"
#include "tidisc/errors.hpp"
#include "tidisc/measures.hpp"
#include "tidisc/qcore.hpp"
#include "tidisc/scan.hpp"
#include "tidisc/thermal_channel.hpp"

namespace py = pybind11;
using namespace tidisc;

namespace {

std::string status_name(TransitionStatus s) {
    switch (s) {
    case TransitionStatus::Found:
        return "found";
    case TransitionStatus::NoTransition:
        return "no-transition";
    default:
        return "inconclusive";
    }
}

KappaForm kappa_form(const std::string& name) {
    if (name == "repaired") {
        return KappaForm::Repaired;
    }
    if (name == "literal") {
        return KappaForm::Literal;
    }
    throw InvalidParameter("kappa_form must be 'repaired' or 'literal'");
}

BoundaryRule boundary_rule(const std::string& name) {
    if (name == "long-time") {
        return BoundaryRule::LongTime;
    }
    if (name == "strict") {
        return BoundaryRule::Strict;
    }
    throw InvalidParameter("rule must be 'long-time' or 'strict'");
}

OhmicDephasing make_dephasing(double alpha, double s, double omega_c, const std::string& temperature,
                              double scale, double omega_t) {
    OhmicDephasing d{alpha, s, omega_c, ZeroTemperature{}};
    if (temperature == "high") {
        d.temperature = HighTemperature{scale};
    } else if (temperature == "finite") {
        d.temperature = FiniteTemperature{omega_t};
    } else if (temperature != "zero") {
        throw InvalidParameter("temperature must be 'high', 'finite' or 'zero'");
    }
    d.validate();
    return d;
}

std::string temperature_name(const OhmicDephasing& d) {
    if (std::holds_alternative<HighTemperature>(d.temperature)) {
        return "high";
    }
    if (std::holds_alternative<FiniteTemperature>(d.temperature)) {
        return "finite";
    }
    return "zero";
}

py::dict classification_dict(const Classification& c) {
    py::dict out;
    out["kind"] = to_string(c.kind);
    out["transition_time"] = c.transition_time;
    out["horizon"] = c.horizon;
    out["asymptote"] = c.asymptote;
    out["root_bracket"] = c.root_bracket;
    out["min_margin"] = c.min_margin;
    out["transient_crossing"] = c.transient_crossing;
    out["error"] = c.error;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Correlation dynamics of two qubits in dephasing, dissipative and correlated "
              "environments";

    // Newest translator runs first.
    py::register_exception<Error>(m, "TidiscError", PyExc_RuntimeError);
    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<NumericalFailure>(m, "NumericalFailure", PyExc_ArithmeticError);

    // --- states and measures -------------------------------------------------------------

    py::class_<CorrelationTriple>(m, "CorrelationTriple")
        .def_readonly("mutual_info", &CorrelationTriple::mutual_info)
        .def_readonly("classical", &CorrelationTriple::classical)
        .def_readonly("discord", &CorrelationTriple::discord)
        .def("__repr__", [](const CorrelationTriple& t) {
            std::ostringstream os;
            os.precision(10);
            os << "CorrelationTriple(mutual_info=" << t.mutual_info << ", classical=" << t.classical
               << ", discord=" << t.discord << ")";
            return os.str();
        });

    py::class_<XState>(m, "XState")
        .def(py::init([](double a, double b, double d, Complex z, Complex w) {
                 return XState{a, b, d, z, w};
             }),
             py::arg("a"), py::arg("b"), py::arg("d"), py::arg("z") = Complex{},
             py::arg("w") = Complex{})
        .def_readwrite("a", &XState::a)
        .def_readwrite("b", &XState::b)
        .def_readwrite("d", &XState::d)
        .def_readwrite("z", &XState::z)
        .def_readwrite("w", &XState::w)
        .def("matrix", [](const XState& x) { return x.to_density_matrix().matrix(); });

    m.def(
        "bell_diagonal_state",
        [](double m1, double m2, double m3) { return bell_diagonal_state({m1, m2, m3}).matrix(); },
        py::arg("m1"), py::arg("m2"), py::arg("m3"),
        "(I + m1 XX + m2 YY + m3 ZZ)/4 as a 4x4 complex array");
    m.def(
        "is_state", [](const Matrix& rho) { return validate_state(rho).ok(); }, py::arg("rho"));
    m.def(
        "von_neumann_entropy",
        [](const Matrix& rho) { return von_neumann_entropy(DensityMatrix(rho)); }, py::arg("rho"));
    m.def(
        "partial_trace",
        [](const Matrix& rho, const std::string& keep) {
            if (keep != "A" && keep != "B") {
                throw InvalidParameter("keep must be 'A' or 'B'");
            }
            return partial_trace(DensityMatrix(rho), keep == "A" ? Subsystem::A : Subsystem::B)
                .matrix();
        },
        py::arg("rho"), py::arg("keep"));
    m.def(
        "mutual_information", [](const Matrix& rho) { return mutual_information(DensityMatrix(rho)); },
        py::arg("rho"));
    m.def(
        "correlations", [](const Matrix& rho) { return correlations(DensityMatrix(rho)); },
        py::arg("rho"), "I, C, D in bits; X-shaped states take the analytic path");
    m.def(
        "correlations_bruteforce",
        [](const Matrix& rho, int grid_n) { return correlations_bruteforce(DensityMatrix(rho), grid_n); },
        py::arg("rho"), py::arg("grid_n") = 64);
    m.def("discord_xstate", &discord_xstate, py::arg("x"));

    // --- single-qubit channels -----------------------------------------------------------

    py::class_<LorentzianReservoir>(m, "LorentzianReservoir")
        .def(py::init([](double gamma0, double lambda, double delta, double n_photons) {
                 LorentzianReservoir r{gamma0, lambda, delta, n_photons};
                 r.validate();
                 return r;
             }),
             py::arg("gamma0") = 0.01, py::arg("lambda_") = 1.0, py::arg("delta") = 0.0,
             py::arg("n_photons") = 0.0)
        .def_static("from_ratio", &LorentzianReservoir::from_ratio, py::arg("ratio"),
                    py::arg("delta_over_lambda"), py::arg("n_photons"), py::arg("lambda_") = 1.0)
        .def_readonly("gamma0", &LorentzianReservoir::gamma0)
        .def_readonly("lambda_", &LorentzianReservoir::lambda)
        .def_readonly("delta", &LorentzianReservoir::delta)
        .def_readonly("n_photons", &LorentzianReservoir::n_photons)
        .def_property_readonly("coupling_ratio", &LorentzianReservoir::coupling_ratio);

    py::class_<OhmicDephasing>(m, "OhmicDephasing")
        .def(py::init(&make_dephasing), py::arg("alpha") = 0.01, py::arg("s") = 1.0,
             py::arg("omega_c") = 1.0, py::arg("temperature") = "zero", py::arg("scale") = 1.0,
             py::arg("omega_t") = 1.0,
             "temperature: 'high' (uses scale = 2kT/hbar omega_c), 'finite' (uses omega_t) "
             "or 'zero'")
        .def_readonly("alpha", &OhmicDephasing::alpha)
        .def_readonly("s", &OhmicDephasing::s)
        .def_readonly("omega_c", &OhmicDephasing::omega_c)
        .def_property_readonly("temperature", &temperature_name);

    py::class_<MapElements>(m, "MapElements")
        .def_readonly("eta_par", &MapElements::eta_par)
        .def_readonly("eta_perp", &MapElements::eta_perp)
        .def_readonly("kappa", &MapElements::kappa)
        .def_readonly("phase", &MapElements::phase)
        .def("transfer_matrix", [](const MapElements& me) { return transfer_matrix(me); });

    m.def("c_ratio", &c_ratio, py::arg("t"), py::arg("res"));
    m.def("f_rate", &f_rate, py::arg("t"), py::arg("res"));
    m.def("big_gamma", &big_gamma, py::arg("t"), py::arg("res"));
    m.def(
        "kappa",
        [](double t, const LorentzianReservoir& res, const std::string& form) {
            return kappa(t, res, kappa_form(form));
        },
        py::arg("t"), py::arg("res"), py::arg("form") = "repaired");
    m.def("gamma_z_rate", &gamma_z_rate, py::arg("t"), py::arg("deph"));
    m.def("big_gamma_z", &big_gamma_z, py::arg("t"), py::arg("deph"));
    m.def("big_gamma_z_quadrature", &big_gamma_z_quadrature, py::arg("t"), py::arg("deph"));
    m.def("big_gamma_z_asymptote", &big_gamma_z_asymptote, py::arg("deph"));
    m.def(
        "map_elements",
        [](double t, std::optional<LorentzianReservoir> res, std::optional<OhmicDephasing> deph,
           double omega, const std::string& form) {
            return map_elements(t, res, deph, omega, kappa_form(form));
        },
        py::arg("t"), py::arg("res") = py::none(), py::arg("deph") = py::none(),
        py::arg("omega") = 0.0, py::arg("form") = "repaired");
    m.def(
        "apply_map",
        [](const MapElements& me, const Matrix& rho) { return apply_map(me, DensityMatrix(rho)).matrix(); },
        py::arg("elements"), py::arg("rho"));
    m.def(
        "master_equation_oracle",
        [](const Matrix& rho, double t, std::optional<LorentzianReservoir> res,
           std::optional<OhmicDephasing> deph, double omega) {
            return master_equation_oracle(DensityMatrix(rho), t, res, deph, omega).matrix();
        },
        py::arg("rho"), py::arg("t"), py::arg("res") = py::none(), py::arg("deph") = py::none(),
        py::arg("omega") = 0.0);

    // --- two qubits, independent environments --------------------------------------------

    py::class_<ChannelStack>(m, "ChannelStack")
        .def(py::init([](std::optional<LorentzianReservoir> res, std::optional<OhmicDephasing> deph,
                         double omega, const std::string& form) {
                 ChannelStack ch{res, deph, omega, kappa_form(form)};
                 ch.validate();
                 return ch;
             }),
             py::arg("res") = py::none(), py::arg("deph") = py::none(), py::arg("omega") = 0.0,
             py::arg("form") = "repaired")
        .def("elements", &ChannelStack::elements, py::arg("t"));

    m.def(
        "evolve_pair",
        [](const Matrix& rho, double t, const ChannelStack& ch) {
            return evolve_pair(DensityMatrix(rho), t, ch).matrix();
        },
        py::arg("rho"), py::arg("t"), py::arg("channel"));
    m.def(
        "correlation_trace",
        [](double m_param, const std::vector<double>& times, const ChannelStack& ch, int workers) {
            const auto tr = correlation_trace(m_param, times, ch, workers);
            const auto n = static_cast<py::ssize_t>(tr.triples.size());
            py::array_t<double> i(n), c(n), d(n);
            for (py::ssize_t k = 0; k < n; ++k) {
                i.mutable_at(k) = tr.triples[k].mutual_info;
                c.mutable_at(k) = tr.triples[k].classical;
                d.mutable_at(k) = tr.triples[k].discord;
            }
            py::dict out;
            out["t"] = py::array_t<double>(n, tr.times.data());
            out["I"] = i;
            out["C"] = c;
            out["D"] = d;
            out["transition_time"] = tr.transition_time;
            return out;
        },
        py::arg("m"), py::arg("times"), py::arg("channel"), py::arg("workers") = 1,
        "I, C, D of the family (1, m, -m) along strictly increasing times");
    m.def(
        "dephasing_transition_time",
        [](double m_param, const OhmicDephasing& deph, std::optional<double> horizon) {
            const auto r = dephasing_transition_time(m_param, deph, horizon);
            py::dict out;
            out["status"] = status_name(r.status);
            out["time"] = r.time;
            out["bracket"] = r.bracket;
            out["horizon"] = r.horizon;
            out["floor"] = r.floor;
            return out;
        },
        py::arg("m"), py::arg("deph"), py::arg("horizon") = py::none());

    // --- correlated environments ---------------------------------------------------------

    py::class_<CorrelatedEnvConfig>(m, "CorrelatedEnvConfig")
        .def(py::init([](double r, double c, double s, double alpha1, double alpha2, double n1,
                         double n2, double omega_c, double eps1, double eps2,
                         std::array<double, 4> schedule) {
                 CorrelatedEnvConfig cfg;
                 cfg.r = r;
                 cfg.c = c;
                 cfg.s = s;
                 cfg.alpha1 = alpha1;
                 cfg.alpha2 = alpha2;
                 cfg.n1 = n1;
                 cfg.n2 = n2;
                 cfg.omega_c = omega_c;
                 cfg.eps1 = eps1;
                 cfg.eps2 = eps2;
                 cfg.schedule = {schedule[0], schedule[1], schedule[2], schedule[3]};
                 cfg.validate();
                 return cfg;
             }),
             py::arg("r") = 0.0, py::arg("c") = 0.1, py::arg("s") = 1.0, py::arg("alpha1") = 0.2,
             py::arg("alpha2") = 0.2, py::arg("n1") = 0.0, py::arg("n2") = 0.0,
             py::arg("omega_c") = 1.0, py::arg("eps1") = 1e-8, py::arg("eps2") = 1e-8,
             py::arg("schedule") = std::array<double, 4>{0.0, 20.0, 20.0, 40.0},
             "schedule = (t1_start, t1_end, t2_start, t2_end)")
        .def_readonly("r", &CorrelatedEnvConfig::r)
        .def_readonly("c", &CorrelatedEnvConfig::c)
        .def_readonly("s", &CorrelatedEnvConfig::s);

    m.def(
        "rho_correlated",
        [](double t, const CorrelatedEnvConfig& cfg) { return rho_correlated(t, cfg).matrix(); },
        py::arg("t"), py::arg("cfg"));
    m.def("correlations_correlated", &correlations_correlated, py::arg("t"), py::arg("cfg"));
    m.def(
        "correlated_transition_time",
        [](const CorrelatedEnvConfig& cfg, double horizon) {
            const auto r = correlated_transition_time(cfg, horizon);
            py::dict out;
            out["status"] = status_name(r.status);
            out["time"] = r.time;
            out["bracket"] = r.bracket;
            out["min_margin"] = r.min_margin;
            return out;
        },
        py::arg("cfg"), py::arg("horizon"));

    // --- classification ------------------------------------------------------------------

    m.def(
        "classify_dephasing",
        [](double s, double m_param, double normalization, std::optional<double> horizon,
           const std::string& rule) {
            return classification_dict(
                classify_dephasing(s, m_param, normalization, horizon, boundary_rule(rule)));
        },
        py::arg("s"), py::arg("m"), py::arg("normalization") = 1.0, py::arg("horizon") = py::none(),
        py::arg("rule") = "long-time");
    m.def(
        "classify_correlated",
        [](const CorrelatedEnvConfig& cfg, double horizon) {
            return classification_dict(classify_correlated(cfg, horizon));
        },
        py::arg("cfg"), py::arg("horizon"));

    // --- command line --------------------------------------------------------------------

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::vector<const char*> argv{"tidisc"};
            for (const auto& a : args) {
                argv.push_back(a.c_str());
            }
            std::ostringstream out, err;
            int code = 0;
            {
                py::gil_scoped_release release;
                code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
            }
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the tidisc command line; returns (exit_code, stdout, stderr)");
}
