#pragma once

#include "radialwell/hermiticity.hpp"
#include "radialwell/radial_model.hpp"
#include "radialwell/singularity.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace radialwell::io {

using nlohmann::json;

/// Malformed potential or spectrum file.
class FileFormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// 17 significant digits, '.' decimal separator regardless of locale.
std::string format_double(double value);

/// {radius, kind: "zero" | "coulomb" | "tabulated", alpha?, samples?: [[r, V], ...]}
PotentialSpec potential_from_json(const json& j);
json potential_to_json(const PotentialSpec& potential);
PotentialSpec load_potential_file(const std::string& path);

json units_to_json(const Units& units);

/// Spectrum plus the potential it was computed for (absent means V = 0).
struct SpectrumDocument {
    Spectrum spectrum;
    std::optional<PotentialSpec> potential;
};

json spectrum_to_json(const Spectrum& spectrum, const std::optional<PotentialSpec>& potential);
SpectrumDocument spectrum_from_json(const json& j);
SpectrumDocument load_spectrum_file(const std::string& path);

/// Header "n,k,E,nodes".
std::string spectrum_to_csv(const Spectrum& spectrum);

json complex_to_json(std::complex<double> z);
json report_to_json(const HermiticityReport& report);

struct AuditedState {
    int n;
    double k;
    double energy;
    HermiticityReport report;
};

json audit_to_json(const Spectrum& spectrum, const std::vector<AuditedState>& states,
                   double max_pair_wronskian, double max_pair_pr);
/// One row per audited mode.
std::string audit_to_csv(const std::vector<AuditedState>& states);

json delta_to_json(const DeltaWeightEstimate& estimate, double A, double B, double k,
                   double tolerance);

/// Header "r,chi,R,dchi_dr".
std::string wavefunction_to_csv(const RadialMode& mode, int points);

std::string read_file(const std::string& path);
void write_output(const std::string& path, const std::string& content);

} // namespace radialwell::io
