#pragma once

#include "radialwell/radial_model.hpp"

#include <complex>
#include <string>
#include <vector>

namespace radialwell {

enum class Verdict { Pass, FailEq3, FailEq6 };

/// "PASS", "FAIL_EQ3", "FAIL_EQ6".
std::string to_string(Verdict verdict);

struct AuditTolerances {
    /// Threshold separating genuine boundary defects (O(1)) from noise.
    double verdict = 1e-6;
    /// Allowed residual of the integration-by-parts identity.
    double identity = 1e-8;
    /// Gauss–Legendre panels used by the identity check (doubled once for the
    /// convergence estimate).
    int panels = 16;
};

struct EndpointMagnitudes {
    double at_origin;
    double at_edge;
};

struct HermiticityReport {
    /// [χ₁*χ₂′ − χ₁*′χ₂] at a minus the same bracket at 0.
    std::complex<double> wronskian_defect;
    /// −iħ[χ₁*χ₂] at a minus at 0.
    std::complex<double> pr_defect;
    /// |χ(0)|, |χ(a)| for each audited mode (one entry for a diagonal audit).
    std::vector<EndpointMagnitudes> endpoint_magnitudes;
    double quadrature_residual = 0.0;
    Verdict verdict = Verdict::Pass;
    AuditTolerances tolerances;
};

/// Boundary bracket of the Hamiltonian symmetry condition. Endpoint values are
/// one-sided limits. Throws DomainError for modes of different l.
std::complex<double> wronskian_defect(const RadialMode& mode1, const RadialMode& mode2);

/// Boundary term −iħ[χ₁*(a)χ₂(a) − χ₁*(0)χ₂(0)] left by integrating the
/// radial momentum matrix element by parts.
std::complex<double> pr_defect(const RadialMode& mode1, const RadialMode& mode2,
                               const Units& units = {});

/// ⟨1|p_r|2⟩ = ∫ R₁* (−iħ)(∂_r + 1/r) R₂ r² dr over [ε, a], ε = 1e-10·a; for
/// modes defined down to r = 0 the sliver [0, ε] is added in the χ form χ₁χ₂′.
std::complex<double> pr_matrix_element(const RadialMode& bra, const RadialMode& ket,
                                       const Units& units = {}, int panels = 16);

/// |⟨1|p_r|2⟩ − ⟨2|p_r|1⟩* − pr_defect(1, 2)|, with both matrix elements by
/// composite Gauss–Legendre quadrature. Throws QuadratureError when the
/// estimate does not settle under one panel doubling.
double verify_eq5_by_quadrature(const RadialMode& mode1, const RadialMode& mode2, int panels = 16,
                                const Units& units = {}, double tolerance = 1e-8);

/// Normalizes the mode, then checks |χ(0)| = |χ(a)| and the self Wronskian.
/// Throws NonNormalizableError for Neumann content with l > 0.
HermiticityReport audit(const RadialMode& mode, const Units& units = {},
                        const AuditTolerances& tolerances = {});

/// Pair audit: Wronskian and p_r defects between two modes plus the endpoint
/// condition on each of them.
HermiticityReport audit_pair(const RadialMode& mode1, const RadialMode& mode2,
                             const Units& units = {}, const AuditTolerances& tolerances = {});

} // namespace radialwell
