#pragma once

#include "radialwell/radial_model.hpp"

#include <string>
#include <vector>

namespace radialwell {

/// Shrinking-ball estimates of the weight w in ∇²ψ + k²ψ = w·δ(r) for an
/// l = 0 state ψ = (χ/r)·Y₀⁰.
struct DeltaWeightEstimate {
    /// Strictly decreasing ball radii.
    std::vector<double> epsilons;
    /// Per-ε weak-form Laplacian: the flux 4πε²·∂_r ψ through the sphere.
    std::vector<double> estimates;
    /// k²·∫_ball ψ dV per ε; vanishes as ε² for any locally bounded χ.
    std::vector<double> volume_terms;
    /// Richardson extrapolation (order 2) of the two smallest-ε estimates.
    double extrapolated_weight = 0.0;
    /// Least-squares slope of log|e_i − e_{i+1}| against log ε_i; NaN when
    /// fewer than two resolvable differences exist.
    double convergence_order = 0.0;
};

/// Default ladder {1e-2, 1e-3, 1e-4, 1e-5}·a.
std::vector<double> default_epsilon_ladder(double radius);

/// For ψ = (A sin kr + B cos kr)/r · Y₀⁰ the weight is −B(4π)^{1/2}.
/// Throws DomainError for l ≠ 0 or a ladder that is not strictly decreasing.
DeltaWeightEstimate delta_weight(const RadialMode& mode, const std::vector<double>& epsilons);
DeltaWeightEstimate delta_weight(const RadialMode& mode);

struct FrobeniusResult {
    int l = 0;
    /// Roots of s(s − 1) = l(l + 1): χ ~ r^{s}.
    double exponent_regular = 1.0;
    double exponent_irregular = 0.0;
    /// c₁ in the regular series χ = r^{l+1}(1 + c₁ r + …), fixed by lim r·V.
    double regular_series_c1 = 0.0;
};

/// Indicial exponents (l + 1, −l) of the radial equation. An admissible
/// potential only enters at the next order. Throws AdmissibilityError for
/// potentials diverging faster than r⁻¹.
FrobeniusResult frobenius_indicial(const PotentialSpec& potential, QuantumChannel channel,
                                   const Units& units = {});

/// For l = 0, ψ ~ (c₁ + c₂/r)·Y₀⁰ near the origin: c₁ = χ′(0⁺), c₂ = χ(0⁺).
struct LeadingCoefficients {
    double c1;
    double c2;
};

LeadingCoefficients frobenius_coefficients(const RadialMode& mode);

enum class RejectionReason { None, DeltaSource, NonNormalizable };

std::string to_string(RejectionReason reason);

struct RegularityResult {
    bool accepted = true;
    RejectionReason reason = RejectionReason::None;
    /// Extrapolated delta weight for l = 0 modes, 0 otherwise.
    double delta_weight = 0.0;
    std::string message;
};

/// Accepts only modes that solve the radial equation through the origin:
/// l = 0 modes with a δ(r) source above `tolerance` are rejected, as are
/// l > 0 modes with Neumann content.
RegularityResult regularity_filter(const RadialMode& mode, double tolerance = 1e-4);

} // namespace radialwell
