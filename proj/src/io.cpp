#include "radialwell/io.hpp"

#include "radialwell/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace radialwell::io {

std::string format_double(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

namespace {

double require_number(const json& j, const char* key)
{
    if (!j.contains(key))
        throw FileFormatError(std::string("missing field '") + key + "'");
    if (!j.at(key).is_number())
        throw FileFormatError(std::string("field '") + key + "' must be a number");
    return j.at(key).get<double>();
}

// NaN/inf are written as null by the JSON library.
json number_or_null(double v)
{
    if (!std::isfinite(v))
        return nullptr;
    return v;
}

} // namespace

PotentialSpec potential_from_json(const json& j)
{
    if (!j.is_object())
        throw FileFormatError("potential file must hold a JSON object");
    const double radius = require_number(j, "radius");
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw FileFormatError("missing string field 'kind'");
    const auto kind = j.at("kind").get<std::string>();
    try {
        if (kind == "zero")
            return PotentialSpec::zero(radius);
        if (kind == "coulomb")
            return PotentialSpec::coulomb(radius, require_number(j, "alpha"));
        if (kind == "tabulated") {
            if (!j.contains("samples") || !j.at("samples").is_array())
                throw FileFormatError("tabulated potential needs a 'samples' array");
            std::vector<std::pair<double, double>> samples;
            for (const auto& s : j.at("samples")) {
                if (!s.is_array() || s.size() != 2 || !s[0].is_number() || !s[1].is_number())
                    throw FileFormatError("each sample must be a [r, V] pair of numbers");
                samples.emplace_back(s[0].get<double>(), s[1].get<double>());
            }
            auto potential = PotentialSpec::tabulated(radius, std::move(samples));
            check_admissible(potential);
            return potential;
        }
    } catch (const DomainError& e) {
        throw FileFormatError(e.what());
    }
    throw FileFormatError("unknown potential kind '" + kind +
                          "' (expected zero, coulomb or tabulated)");
}

json potential_to_json(const PotentialSpec& potential)
{
    json j;
    j["radius"] = potential.radius();
    j["kind"] = potential.kind_name();
    if (const auto* c = std::get_if<CoulombLike>(&potential.interior()))
        j["alpha"] = c->alpha;
    if (const auto* t = std::get_if<Tabulated>(&potential.interior())) {
        json samples = json::array();
        for (std::size_t i = 0; i < t->r.size(); ++i)
            samples.push_back({t->r[i], t->v[i]});
        j["samples"] = samples;
    }
    return j;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw FileFormatError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

PotentialSpec load_potential_file(const std::string& path)
{
    const auto text = read_file(path);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FileFormatError("'" + path + "': " + e.what());
    }
    try {
        return potential_from_json(j);
    } catch (const FileFormatError& e) {
        throw FileFormatError("'" + path + "': " + e.what());
    }
}

json units_to_json(const Units& units)
{
    return {{"hbar", units.hbar()}, {"mu", units.mu()}};
}

json spectrum_to_json(const Spectrum& spectrum, const std::optional<PotentialSpec>& potential)
{
    json j;
    j["radius"] = spectrum.radius;
    j["l"] = spectrum.channel.l;
    j["family"] = to_string(spectrum.family);
    j["units"] = units_to_json(spectrum.units);
    j["potential"] = potential ? potential_to_json(*potential)
                               : potential_to_json(PotentialSpec::zero(spectrum.radius));
    json entries = json::array();
    for (const auto& e : spectrum.entries)
        entries.push_back({{"n", e.n}, {"k", e.k}, {"E", e.energy}, {"nodes", e.nodes}});
    j["entries"] = entries;
    return j;
}

SpectrumDocument spectrum_from_json(const json& j)
{
    try {
        SpectrumDocument doc;
        auto& s = doc.spectrum;
        s.radius = require_number(j, "radius");
        s.channel = QuantumChannel(j.at("l").get<int>());
        s.family = boundary_family_from_string(j.at("family").get<std::string>());
        if (j.contains("units"))
            s.units = Units(require_number(j.at("units"), "hbar"),
                            require_number(j.at("units"), "mu"));
        if (j.contains("potential")) {
            auto p = potential_from_json(j.at("potential"));
            if (!p.is_zero())
                doc.potential = std::move(p);
        }
        for (const auto& e : j.at("entries"))
            s.entries.push_back({e.at("n").get<int>(), e.at("k").get<double>(),
                                 e.at("E").get<double>(), e.at("nodes").get<int>()});
        return doc;
    } catch (const json::exception& e) {
        throw FileFormatError(std::string("malformed spectrum document: ") + e.what());
    } catch (const DomainError& e) {
        throw FileFormatError(std::string("invalid spectrum document: ") + e.what());
    }
}

SpectrumDocument load_spectrum_file(const std::string& path)
{
    try {
        return spectrum_from_json(json::parse(read_file(path)));
    } catch (const json::parse_error& e) {
        throw FileFormatError("'" + path + "': " + e.what());
    }
}

std::string spectrum_to_csv(const Spectrum& spectrum)
{
    std::string out = "n,k,E,nodes\n";
    for (const auto& e : spectrum.entries)
        out += std::to_string(e.n) + "," + format_double(e.k) + "," + format_double(e.energy) +
               "," + std::to_string(e.nodes) + "\n";
    return out;
}

json complex_to_json(std::complex<double> z)
{
    return {{"re", number_or_null(z.real())}, {"im", number_or_null(z.imag())}};
}

json report_to_json(const HermiticityReport& report)
{
    json j;
    j["wronskian_defect"] = complex_to_json(report.wronskian_defect);
    j["pr_defect"] = complex_to_json(report.pr_defect);
    json mags = json::array();
    for (const auto& m : report.endpoint_magnitudes)
        mags.push_back({{"chi_origin", m.at_origin}, {"chi_edge", m.at_edge}});
    j["endpoint_magnitudes"] = mags;
    j["quadrature_residual"] = number_or_null(report.quadrature_residual);
    j["verdict"] = to_string(report.verdict);
    j["tolerances"] = {{"verdict", report.tolerances.verdict},
                       {"identity", report.tolerances.identity},
                       {"panels", report.tolerances.panels}};
    return j;
}

json audit_to_json(const Spectrum& spectrum, const std::vector<AuditedState>& states,
                   double max_pair_wronskian, double max_pair_pr)
{
    json j;
    j["radius"] = spectrum.radius;
    j["l"] = spectrum.channel.l;
    j["family"] = to_string(spectrum.family);
    j["units"] = units_to_json(spectrum.units);
    bool all_pass = true;
    json arr = json::array();
    for (const auto& s : states) {
        json row = report_to_json(s.report);
        row["n"] = s.n;
        row["k"] = s.k;
        row["E"] = s.energy;
        arr.push_back(row);
        all_pass = all_pass && s.report.verdict == Verdict::Pass;
    }
    j["states"] = arr;
    j["pairwise"] = {{"max_abs_wronskian_defect", max_pair_wronskian},
                     {"max_abs_pr_defect", max_pair_pr}};
    j["verdict"] = all_pass ? "PASS" : "FAIL";
    return j;
}

std::string audit_to_csv(const std::vector<AuditedState>& states)
{
    std::string out =
        "n,k,E,chi_origin,chi_edge,wronskian_abs,pr_defect_abs,quadrature_residual,verdict\n";
    for (const auto& s : states) {
        const auto& m = s.report.endpoint_magnitudes.front();
        out += std::to_string(s.n) + "," + format_double(s.k) + "," + format_double(s.energy) +
               "," + format_double(m.at_origin) + "," + format_double(m.at_edge) + "," +
               format_double(std::abs(s.report.wronskian_defect)) + "," +
               format_double(std::abs(s.report.pr_defect)) + "," +
               format_double(s.report.quadrature_residual) + "," + to_string(s.report.verdict) +
               "\n";
    }
    return out;
}

json delta_to_json(const DeltaWeightEstimate& estimate, double A, double B, double k,
                   double tolerance)
{
    json j;
    j["mode"] = {{"A", A}, {"B", B}, {"k", k}, {"l", 0}};
    j["epsilons"] = estimate.epsilons;
    j["estimates"] = estimate.estimates;
    j["volume_terms"] = estimate.volume_terms;
    j["extrapolated_weight"] = estimate.extrapolated_weight;
    j["convergence_order"] = number_or_null(estimate.convergence_order);
    j["tolerance"] = tolerance;
    j["delta_source"] = std::abs(estimate.extrapolated_weight) > tolerance;
    return j;
}

std::string wavefunction_to_csv(const RadialMode& mode, int points)
{
    if (points < 2)
        throw DomainError("wavefunction export needs at least two grid points");
    std::string out = "r,chi,R,dchi_dr\n";
    const double a = mode.radius();
    for (int i = 1; i <= points; ++i) {
        const double r = i == points ? a : a * i / points;
        const auto c = mode.evaluate(r);
        out += format_double(r) + "," + format_double(c.value) + "," +
               format_double(c.value / r) + "," + format_double(c.derivative) + "\n";
    }
    return out;
}

void write_output(const std::string& path, const std::string& content)
{
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw FileFormatError("cannot write '" + path + "'");
    out << content;
}

} // namespace radialwell::io
