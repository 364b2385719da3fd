#pragma once

#include "radialwell/radial_model.hpp"

#include <string>
#include <vector>

namespace radialwell {

enum class Integrator {
    /// Adaptive Dormand–Prince 4(5) on (χ, χ′).
    RungeKutta45,
    /// Fixed-step Numerov, offered as a cross-check.
    Numerov,
};

struct ShootingConfig {
    /// Start radius ε; 0 selects 1e-8·a. Must satisfy 0 < ε ≤ 1e-6·a.
    double epsilon = 0.0;
    /// Initial step (RK45) or fixed step (Numerov); 0 selects a default.
    double step = 0.0;
    /// Lower end of the k-scan.
    double k_lo = 0.0;
    /// Upper end of the k-scan; 0 picks a range from n_max, l and the potential depth.
    double k_hi = 0.0;
    /// Relative tolerance of the ODE integration and the eigenvalue refinement.
    double tolerance = 1e-12;
    Integrator integrator = Integrator::RungeKutta45;
    /// Re-solve every eigenvalue from 10·ε and warn on disagreement.
    bool richardson_check = true;

    /// Throws DomainError on violated invariants.
    void validate(double radius) const;
};

/// n-th positive zero of j_l (n ≥ 1), bracketed by the zeros of j_{l−1}.
double bessel_zero(int l, int n);

/// First n positive zeros of j_l in increasing order.
std::vector<double> bessel_zeros(int l, int n);

/// Analytic spectrum of the V = 0 well. Conventional: k_n = z_{nl}/a;
/// Huang–Thomann (l = 0): cos(ka) = 0, k_n = (n − ½)π/a. n_max = 0 gives an
/// empty spectrum.
Spectrum well_spectrum(const PotentialSpec& geometry, const BoundaryCondition& bc, int n_max,
                       const Units& units = {});
Spectrum well_spectrum(const PotentialSpec& geometry, QuantumChannel channel,
                       BoundaryFamily family, int n_max, const Units& units = {});

/// Normalized analytic mode of the V = 0 well at wavenumber k: sine-type
/// (A) for the conventional family, cosine-type (B) for Huang–Thomann.
RadialMode well_mode(double radius, const BoundaryCondition& bc, double k);

/// Normalized modes for every entry of an analytic V = 0 spectrum.
std::vector<RadialMode> spectrum_modes(const Spectrum& spectrum);

/// χ(a; k) and the number of sign changes of χ on (0, a) for one outward shot.
struct ShotResult {
    double chi_edge;
    int nodes;
};

ShotResult shoot(const PotentialSpec& potential, QuantumChannel channel, double k,
                 const ShootingConfig& config = {}, const Units& units = {});

/// Normalized sampled eigenfunction obtained by one outward shot at k.
RadialMode shoot_mode(const PotentialSpec& potential, QuantumChannel channel, double k,
                      const ShootingConfig& config = {}, const Units& units = {});

struct ShootingSolution {
    Spectrum spectrum;
    std::vector<RadialMode> modes;
    std::vector<std::string> warnings;
};

/// Conventional-family spectrum of an admissible potential by outward
/// shooting: node-count bracketing, then root refinement on χ(a; k).
ShootingSolution shooting_solve_with_modes(const PotentialSpec& potential,
                                           QuantumChannel channel,
                                           const ShootingConfig& config, int n_max,
                                           const Units& units = {});

Spectrum shooting_solve(const PotentialSpec& potential, QuantumChannel channel,
                        const ShootingConfig& config, int n_max, const Units& units = {});

} // namespace radialwell
