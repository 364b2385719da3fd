#include "radialwell/eigensolver.hpp"
#include "radialwell/errors.hpp"
#include "radialwell/hermiticity.hpp"
#include "radialwell/io.hpp"
#include "radialwell/singularity.hpp"
#include "radialwell/specfun.hpp"

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace pybind11::literals;
using namespace radialwell;

namespace {

BoundaryFamily family_arg(const std::string& name) { return boundary_family_from_string(name); }

py::dict entry_dict(const SpectrumEntry& e)
{
    return py::dict("n"_a = e.n, "k"_a = e.k, "E"_a = e.energy, "nodes"_a = e.nodes);
}

using Array = py::array_t<double, py::array::c_style | py::array::forcecast>;

// χ or χ′ elementwise over an array of radii, keeping the input shape.
Array map(const Array& r, const RadialMode& mode, bool derivative)
{
    Array out(std::vector<py::ssize_t>(r.shape(), r.shape() + r.ndim()));
    const double* in = r.data();
    double* dst = out.mutable_data();
    for (py::ssize_t i = 0; i < r.size(); ++i) {
        const auto c = mode.evaluate(in[i]);
        dst[i] = derivative ? c.derivative : c.value;
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Infinite spherical well: spectra, hermiticity audits, delta-source analysis";

    auto domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NonNormalizableError>(m, "NonNormalizableError", domain_error.ptr());
    py::register_exception<AdmissibilityError>(m, "AdmissibilityError", domain_error.ptr());
    py::register_exception<BracketError>(m, "BracketError", PyExc_RuntimeError);
    py::register_exception<StepSizeError>(m, "StepSizeError", PyExc_RuntimeError);
    py::register_exception<QuadratureError>(m, "QuadratureError", PyExc_RuntimeError);

    py::class_<Units>(m, "Units")
        .def(py::init<>())
        .def(py::init<double, double>(), "hbar"_a, "mu"_a)
        .def_property_readonly("hbar", &Units::hbar)
        .def_property_readonly("mu", &Units::mu)
        .def("energy_from_k", &Units::energy_from_k, "k"_a)
        .def("k_from_energy", &Units::k_from_energy, "energy"_a);

    py::class_<PotentialSpec>(m, "PotentialSpec")
        .def_static("zero", &PotentialSpec::zero, "radius"_a)
        .def_static("coulomb", &PotentialSpec::coulomb, "radius"_a, "alpha"_a)
        .def_static("tabulated", &PotentialSpec::tabulated, "radius"_a, "samples"_a)
        .def_static("from_json", [](const std::string& text) {
            return io::potential_from_json(io::json::parse(text));
        })
        .def_property_readonly("radius", &PotentialSpec::radius)
        .def_property_readonly("kind", &PotentialSpec::kind_name)
        .def("__call__", &PotentialSpec::operator(), "r"_a)
        .def("to_json", [](const PotentialSpec& p) { return io::potential_to_json(p).dump(); });

    py::class_<RadialMode>(m, "RadialMode")
        .def_static(
            "analytic",
            [](double k, int l, double radius, double A, double B) {
                return RadialMode::analytic(k, QuantumChannel(l), radius, A, B);
            },
            "k"_a, "l"_a, "radius"_a, "A"_a = 1.0, "B"_a = 0.0)
        .def_static(
            "sampled",
            [](double k, int l, std::vector<double> r, std::vector<double> chi) {
                return RadialMode::sampled(k, QuantumChannel(l), std::move(r), std::move(chi));
            },
            "k"_a, "l"_a, "r"_a, "chi"_a)
        .def_property_readonly("k", &RadialMode::k)
        .def_property_readonly("l", &RadialMode::l)
        .def_property_readonly("radius", &RadialMode::radius)
        .def_property_readonly("is_analytic", &RadialMode::is_analytic)
        .def(
            "chi", [](const RadialMode& mode, const Array& r) { return map(r, mode, false); },
            "r"_a)
        .def(
            "dchi", [](const RadialMode& mode, const Array& r) { return map(r, mode, true); },
            "r"_a)
        .def("scaled", &RadialMode::scaled, "factor"_a);

    m.def("normalize", &normalize, "mode"_a);
    m.def("inner_product", &inner_product, "a"_a, "b"_a);
    m.def("count_nodes", &count_nodes, "mode"_a);

    m.def("spherical_j", py::vectorize(&specfun::spherical_j), "l"_a, "x"_a);
    m.def("spherical_n", py::vectorize(&specfun::spherical_n), "l"_a, "x"_a);
    m.def("bessel_zero", &bessel_zero, "l"_a, "n"_a);
    m.def("bessel_zeros", &bessel_zeros, "l"_a, "n"_a);

    py::class_<Spectrum>(m, "Spectrum")
        .def_property_readonly("l", [](const Spectrum& s) { return s.channel.l; })
        .def_property_readonly("family", [](const Spectrum& s) { return to_string(s.family); })
        .def_property_readonly("radius", [](const Spectrum& s) { return s.radius; })
        .def_property_readonly("k", [](const Spectrum& s) {
            std::vector<double> out;
            for (const auto& e : s.entries)
                out.push_back(e.k);
            return out;
        })
        .def_property_readonly("energies", [](const Spectrum& s) {
            std::vector<double> out;
            for (const auto& e : s.entries)
                out.push_back(e.energy);
            return out;
        })
        .def_property_readonly("entries", [](const Spectrum& s) {
            py::list out;
            for (const auto& e : s.entries)
                out.append(entry_dict(e));
            return out;
        })
        .def("__len__", [](const Spectrum& s) { return s.entries.size(); })
        .def("to_csv", &io::spectrum_to_csv)
        .def("to_json", [](const Spectrum& s) { return io::spectrum_to_json(s, std::nullopt).dump(); });

    m.def(
        "well_spectrum",
        [](double radius, int l, const std::string& family, int n_max, const Units& units) {
            return well_spectrum(PotentialSpec::zero(radius), QuantumChannel(l),
                                 family_arg(family), n_max, units);
        },
        "radius"_a, "l"_a, "family"_a = "conventional", "n_max"_a = 5, "units"_a = Units());
    m.def("spectrum_modes", &spectrum_modes, "spectrum"_a);

    py::class_<ShootingConfig>(m, "ShootingConfig")
        .def(py::init<>())
        .def_readwrite("epsilon", &ShootingConfig::epsilon)
        .def_readwrite("step", &ShootingConfig::step)
        .def_readwrite("k_lo", &ShootingConfig::k_lo)
        .def_readwrite("k_hi", &ShootingConfig::k_hi)
        .def_readwrite("tolerance", &ShootingConfig::tolerance)
        .def_readwrite("richardson_check", &ShootingConfig::richardson_check)
        .def_property(
            "integrator",
            [](const ShootingConfig& c) {
                return c.integrator == Integrator::Numerov ? "numerov" : "rk45";
            },
            [](ShootingConfig& c, const std::string& name) {
                if (name == "rk45")
                    c.integrator = Integrator::RungeKutta45;
                else if (name == "numerov")
                    c.integrator = Integrator::Numerov;
                else
                    throw DomainError("integrator must be 'rk45' or 'numerov'");
            });

    m.def(
        "shooting_solve",
        [](const PotentialSpec& potential, int l, int n_max, const ShootingConfig& config,
           const Units& units) {
            auto sol = shooting_solve_with_modes(potential, QuantumChannel(l), config, n_max, units);
            return py::make_tuple(sol.spectrum, sol.modes, sol.warnings);
        },
        "potential"_a, "l"_a, "n_max"_a, "config"_a = ShootingConfig(), "units"_a = Units(),
        "Returns (spectrum, modes, warnings).");

    py::class_<HermiticityReport>(m, "HermiticityReport")
        .def_readonly("wronskian_defect", &HermiticityReport::wronskian_defect)
        .def_readonly("pr_defect", &HermiticityReport::pr_defect)
        .def_readonly("quadrature_residual", &HermiticityReport::quadrature_residual)
        .def_property_readonly("endpoint_magnitudes", [](const HermiticityReport& r) {
            std::vector<std::pair<double, double>> out;
            for (const auto& e : r.endpoint_magnitudes)
                out.emplace_back(e.at_origin, e.at_edge);
            return out;
        })
        .def_property_readonly("verdict",
                               [](const HermiticityReport& r) { return to_string(r.verdict); })
        .def("to_json", [](const HermiticityReport& r) { return io::report_to_json(r).dump(); });

    m.def(
        "audit",
        [](const RadialMode& mode, const Units& units, double verdict_tol) {
            AuditTolerances tol;
            tol.verdict = verdict_tol;
            return audit(mode, units, tol);
        },
        "mode"_a, "units"_a = Units(), "tolerance"_a = AuditTolerances{}.verdict);
    m.def("audit_pair",
          [](const RadialMode& a, const RadialMode& b, const Units& units) {
              return audit_pair(a, b, units);
          },
          "mode1"_a, "mode2"_a, "units"_a = Units());
    m.def("wronskian_defect", &wronskian_defect, "mode1"_a, "mode2"_a);
    m.def("pr_defect", &pr_defect, "mode1"_a, "mode2"_a, "units"_a = Units());
    m.def("verify_eq5_by_quadrature", &verify_eq5_by_quadrature, "mode1"_a, "mode2"_a,
          "panels"_a = 16, "units"_a = Units(), "tolerance"_a = 1e-8);

    py::class_<DeltaWeightEstimate>(m, "DeltaWeightEstimate")
        .def_readonly("epsilons", &DeltaWeightEstimate::epsilons)
        .def_readonly("estimates", &DeltaWeightEstimate::estimates)
        .def_readonly("volume_terms", &DeltaWeightEstimate::volume_terms)
        .def_readonly("extrapolated_weight", &DeltaWeightEstimate::extrapolated_weight)
        .def_readonly("convergence_order", &DeltaWeightEstimate::convergence_order);

    m.def("delta_weight", py::overload_cast<const RadialMode&>(&delta_weight), "mode"_a);
    m.def("delta_weight",
          py::overload_cast<const RadialMode&, const std::vector<double>&>(&delta_weight),
          "mode"_a, "epsilons"_a);

    m.def(
        "frobenius_indicial",
        [](const PotentialSpec& potential, int l, const Units& units) {
            const auto f = frobenius_indicial(potential, QuantumChannel(l), units);
            return py::make_tuple(f.exponent_regular, f.exponent_irregular);
        },
        "potential"_a, "l"_a, "units"_a = Units(),
        "Indicial exponents (s_plus, s_minus) of chi ~ r^s.");

    m.def(
        "regularity_filter",
        [](const RadialMode& mode, double tolerance) {
            const auto r = regularity_filter(mode, tolerance);
            return py::dict("accepted"_a = r.accepted, "reason"_a = to_string(r.reason),
                            "delta_weight"_a = r.delta_weight, "message"_a = r.message);
        },
        "mode"_a, "tolerance"_a = 1e-4);
}
