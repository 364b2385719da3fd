#include "cli.hpp"

#include "radialwell/eigensolver.hpp"
#include "radialwell/errors.hpp"
#include "radialwell/hermiticity.hpp"
#include "radialwell/io.hpp"
#include "radialwell/singularity.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>

namespace radialwell::cli {

namespace {

struct CliConfig {
    double radius = 1.0;
    std::optional<double> hbar;
    std::optional<double> mass;
    std::string potential_path;
    std::string spectrum_path;
    int l = 0;
    int n_max = 3;
    std::string family = "conventional";
    std::optional<double> tolerance;
    std::string format;
    std::string output = "-";
    // shooting
    std::string integrator = "rk45";
    double epsilon = 0.0;
    double k_lo = 0.0;
    double k_hi = 0.0;
    // wavefn / deltatest
    int state = 1;
    std::optional<double> k;
    double A = 1.0;
    double B = 0.0;
    int points = 201;
};

Units make_units(const CliConfig& c)
{
    return Units(c.hbar.value_or(1.0), c.mass.value_or(0.5));
}

double default_tolerance(const CliConfig& c, double fallback)
{
    if (c.tolerance)
        return *c.tolerance;
    if (const char* env = std::getenv("RADIALWELL_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end != env && v > 0.0)
            return v;
        throw DomainError(std::string("RADIALWELL_TOL is not a positive number: ") + env);
    }
    return fallback;
}

ShootingConfig shooting_config(const CliConfig& c)
{
    ShootingConfig cfg;
    cfg.epsilon = c.epsilon;
    cfg.k_lo = c.k_lo;
    cfg.k_hi = c.k_hi;
    if (c.integrator == "numerov")
        cfg.integrator = Integrator::Numerov;
    else if (c.integrator != "rk45")
        throw DomainError("unknown integrator '" + c.integrator + "' (rk45 or numerov)");
    return cfg;
}

std::optional<PotentialSpec> load_potential(const CliConfig& c)
{
    if (c.potential_path.empty())
        return std::nullopt;
    auto p = io::load_potential_file(c.potential_path);
    if (p.is_zero())
        return std::nullopt;
    return p;
}

double effective_radius(const CliConfig& c, const std::optional<PotentialSpec>& p)
{
    if (!c.potential_path.empty())
        return io::load_potential_file(c.potential_path).radius();
    if (!(c.radius > 0.0))
        throw DomainError("--radius must be positive");
    return p ? p->radius() : c.radius;
}

struct Computed {
    Spectrum spectrum;
    std::optional<PotentialSpec> potential;
    std::vector<RadialMode> modes;
};

void warn_all(const std::vector<std::string>& warnings)
{
    for (const auto& w : warnings)
        std::cerr << "warning: " << w << "\n";
}

Computed compute_spectrum(const CliConfig& c, bool with_modes)
{
    Computed out;
    out.potential = load_potential(c);
    const double radius = effective_radius(c, out.potential);
    const Units units = make_units(c);
    const auto family = boundary_family_from_string(c.family);
    const QuantumChannel channel(c.l);
    if (out.potential) {
        if (family != BoundaryFamily::Conventional)
            throw DomainError("the shooting solver supports the conventional family only");
        auto sol = shooting_solve_with_modes(*out.potential, channel, shooting_config(c), c.n_max,
                                             units);
        warn_all(sol.warnings);
        out.spectrum = sol.spectrum;
        out.modes = std::move(sol.modes);
        return out;
    }
    const auto bc = BoundaryCondition::make(family, channel);
    out.spectrum = well_spectrum(PotentialSpec::zero(radius), bc, c.n_max, units);
    if (with_modes)
        out.modes = spectrum_modes(out.spectrum);
    return out;
}

int cmd_spectrum(const CliConfig& c)
{
    const auto computed = compute_spectrum(c, false);
    const std::string format = c.format.empty() ? "csv" : c.format;
    if (format == "csv")
        io::write_output(c.output, io::spectrum_to_csv(computed.spectrum));
    else if (format == "json")
        io::write_output(c.output,
                         io::spectrum_to_json(computed.spectrum, computed.potential).dump(2) +
                             "\n");
    else
        throw CLI::ValidationError("--format", "expected json or csv");
    return kOk;
}

int cmd_audit(const CliConfig& c)
{
    Computed computed;
    if (!c.spectrum_path.empty()) {
        auto doc = io::load_spectrum_file(c.spectrum_path);
        computed.spectrum = doc.spectrum;
        computed.potential = doc.potential;
        const auto& s = computed.spectrum;
        if (doc.potential) {
            for (const auto& e : s.entries)
                computed.modes.push_back(shoot_mode(*doc.potential, s.channel, e.k,
                                                    shooting_config(c), s.units));
        } else {
            computed.modes = spectrum_modes(s);
        }
    } else {
        computed = compute_spectrum(c, true);
    }

    AuditTolerances tol;
    tol.verdict = default_tolerance(c, tol.verdict);
    const Units units = computed.spectrum.units;
    std::vector<io::AuditedState> states;
    bool all_pass = true;
    for (std::size_t i = 0; i < computed.modes.size(); ++i) {
        const auto& e = computed.spectrum.entries[i];
        auto report = audit(computed.modes[i], units, tol);
        all_pass = all_pass && report.verdict == Verdict::Pass;
        states.push_back({e.n, e.k, e.energy, std::move(report)});
    }
    double max_w = 0.0;
    double max_pr = 0.0;
    for (std::size_t i = 0; i < computed.modes.size(); ++i)
        for (std::size_t j = i + 1; j < computed.modes.size(); ++j) {
            max_w = std::max(max_w, std::abs(wronskian_defect(computed.modes[i],
                                                              computed.modes[j])));
            max_pr = std::max(max_pr, std::abs(pr_defect(computed.modes[i], computed.modes[j],
                                                         units)));
        }

    const std::string format = c.format.empty() ? "json" : c.format;
    if (format == "json")
        io::write_output(
            c.output,
            io::audit_to_json(computed.spectrum, states, max_w, max_pr).dump(2) + "\n");
    else if (format == "csv")
        io::write_output(c.output, io::audit_to_csv(states));
    else
        throw CLI::ValidationError("--format", "expected json or csv");
    return all_pass ? kOk : kAuditFailed;
}

int cmd_wavefn(const CliConfig& c)
{
    if (c.points < 2)
        throw DomainError("--points must be at least 2");
    RadialMode mode = RadialMode::analytic(0.0, QuantumChannel(c.l), 1.0, 1.0);
    if (c.k) {
        const auto potential = load_potential(c);
        if (potential)
            mode = shoot_mode(*potential, QuantumChannel(c.l), *c.k, shooting_config(c),
                              make_units(c));
        else
            mode = normalize(RadialMode::analytic(*c.k, QuantumChannel(c.l),
                                                  effective_radius(c, potential), c.A, c.B));
    } else {
        CliConfig wanted = c;
        wanted.n_max = c.state;
        if (c.state < 1)
            throw DomainError("--state must be >= 1");
        auto computed = compute_spectrum(wanted, true);
        mode = computed.modes.back();
    }
    io::write_output(c.output, io::wavefunction_to_csv(mode, c.points));
    return kOk;
}

int cmd_deltatest(const CliConfig& c)
{
    if (c.l != 0)
        throw DomainError("deltatest applies to l = 0 only (got l = " + std::to_string(c.l) +
                          "); for l > 0 the centrifugal term dominates at the origin");
    const double k = c.k.value_or(1.0);
    const double radius = c.radius;
    const auto mode = RadialMode::analytic(k, QuantumChannel(0), radius, c.A, c.B);
    const double tol = default_tolerance(c, 1e-4);
    const auto estimate = delta_weight(mode);
    io::write_output(c.output, io::delta_to_json(estimate, c.A, c.B, k, tol).dump(2) + "\n");
    return std::abs(estimate.extrapolated_weight) <= tol ? kOk : kDeltaSource;
}

void add_common(CLI::App* sub, CliConfig& c)
{
    sub->add_option("--radius", c.radius, "Well radius a")->check(CLI::PositiveNumber);
    sub->add_option("--hbar", c.hbar, "Action scale (default 1)")->check(CLI::PositiveNumber);
    sub->add_option("--mass", c.mass, "Mass scale mu (default 1/2)")->check(CLI::PositiveNumber);
    sub->add_option("--l", c.l, "Angular momentum quantum number")->check(CLI::NonNegativeNumber);
    sub->add_option("--tol", c.tolerance, "Tolerance override (also RADIALWELL_TOL)");
    sub->add_option("-o,--output", c.output, "Output path ('-' for stdout)");
}

void add_spectrum_options(CLI::App* sub, CliConfig& c)
{
    sub->add_option("--potential", c.potential_path, "Potential JSON file");
    sub->add_option("--n", c.n_max, "Number of levels")->check(CLI::NonNegativeNumber);
    sub->add_option("--family", c.family, "conventional | huang-thomann");
    sub->add_option("--integrator", c.integrator, "rk45 | numerov (shooting only)");
    sub->add_option("--eps", c.epsilon, "Shooting start radius");
    sub->add_option("--k-lo", c.k_lo, "Lower end of the k scan");
    sub->add_option("--k-hi", c.k_hi, "Upper end of the k scan");
}

} // namespace

int run(const std::vector<std::string>& args)
{
    CLI::App app{"Spectra and boundary-condition audits for the infinite spherical well", "radialwell"};
    app.require_subcommand(1);
    CliConfig c;

    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalue spectrum (CSV n,k,E,nodes)");
    add_common(spectrum, c);
    add_spectrum_options(spectrum, c);
    spectrum->add_option("--format", c.format, "csv (default) | json");

    auto* audit_cmd = app.add_subcommand("audit", "Hermiticity audit of every state");
    add_common(audit_cmd, c);
    add_spectrum_options(audit_cmd, c);
    audit_cmd->add_option("--spectrum", c.spectrum_path, "Spectrum JSON to audit");
    audit_cmd->add_option("--format", c.format, "json (default) | csv");

    auto* wavefn = app.add_subcommand("wavefn", "Export chi, R and dchi/dr on a grid");
    add_common(wavefn, c);
    add_spectrum_options(wavefn, c);
    wavefn->add_option("--state", c.state, "Eigenstate index n");
    wavefn->add_option("--k", c.k, "Explicit wavenumber (analytic A, B mode)");
    wavefn->add_option("--A", c.A, "Coefficient of the regular solution");
    wavefn->add_option("--B", c.B, "Coefficient of the Neumann solution");
    wavefn->add_option("--points", c.points, "Grid points on (0, a]");

    auto* deltatest = app.add_subcommand("deltatest", "Delta-source weight of an l=0 mode");
    add_common(deltatest, c);
    deltatest->add_option("--k", c.k, "Wavenumber (default 1)");
    deltatest->add_option("--A", c.A, "Coefficient of sin(kr)");
    deltatest->add_option("--B", c.B, "Coefficient of cos(kr)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (spectrum->parsed())
            return cmd_spectrum(c);
        if (audit_cmd->parsed())
            return cmd_audit(c);
        if (wavefn->parsed())
            return cmd_wavefn(c);
        return cmd_deltatest(c);
    } catch (const io::FileFormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInputFile;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomain;
    } catch (const BracketError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumericalFailure;
    } catch (const StepSizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumericalFailure;
    } catch (const QuadratureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kNumericalFailure;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}

} // namespace radialwell::cli
