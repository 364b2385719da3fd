#include "radialwell/hermiticity.hpp"

#include "radialwell/errors.hpp"
#include "radialwell/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace radialwell {

std::string to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::Pass: return "PASS";
    case Verdict::FailEq3: return "FAIL_EQ3";
    case Verdict::FailEq6: return "FAIL_EQ6";
    }
    return "UNKNOWN";
}

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

void require_same_channel(const RadialMode& m1, const RadialMode& m2)
{
    if (m1.l() != m2.l()) {
        std::ostringstream msg;
        msg << "modes with l = " << m1.l() << " and l = " << m2.l()
            << " are orthogonal by the angular selection rule; radial defects need equal l";
        throw DomainError(msg.str());
    }
    if (std::abs(m1.radius() - m2.radius()) > 1e-12 * m1.radius())
        throw DomainError("modes live on wells of different radius");
}

double bracket(const ChiValue& c1, const ChiValue& c2)
{
    // Modes are real, so χ* = χ.
    return c1.value * c2.derivative - c1.derivative * c2.value;
}

} // namespace

std::complex<double> wronskian_defect(const RadialMode& mode1, const RadialMode& mode2)
{
    require_same_channel(mode1, mode2);
    const double at_edge = bracket(mode1.at_edge(), mode2.at_edge());
    const double at_origin = bracket(mode1.at_origin(), mode2.at_origin());
    return {at_edge - at_origin, 0.0};
}

std::complex<double> pr_defect(const RadialMode& mode1, const RadialMode& mode2,
                               const Units& units)
{
    require_same_channel(mode1, mode2);
    const double at_edge = mode1.at_edge().value * mode2.at_edge().value;
    const double at_origin = mode1.at_origin().value * mode2.at_origin().value;
    return -kI * units.hbar() * (at_edge - at_origin);
}

namespace {

// R = χ/r and dR/dr = χ′/r − χ/r².
struct RadialValue {
    double R;
    double dR;
};

RadialValue radial_function(const RadialMode& mode, double r)
{
    const auto c = mode.evaluate(r);
    return {c.value / r, c.derivative / r - c.value / (r * r)};
}

double pr_integral(const RadialMode& bra, const RadialMode& ket, double lo, int panels)
{
    // Integrand of ∫ R₁ (∂_r + 1/r) R₂ r² dr. The 1/r² pieces of R₂′ and R₂/r
    // cancel analytically; both are kept so the operator is applied as written.
    const auto integrand = [&](double r) {
        const auto b = radial_function(bra, r);
        const auto k = radial_function(ket, r);
        return b.R * (k.dR + k.R / r) * r * r;
    };
    double sum = quadrature::gauss_legendre_sum(integrand, lo, bra.radius(), 32, panels);
    // On [0, lo] R₁(R₂′ + R₂/r)r² = χ₁χ₂′ is smooth; keeping the sliver makes the
    // integral consistent with boundary values taken at r = 0.
    if (lo > 0.0 && bra.lower_limit() == 0.0 && ket.lower_limit() == 0.0)
        sum += quadrature::gauss_legendre_sum(
            [&](double r) { return bra.evaluate(r).value * ket.evaluate(r).derivative; }, 0.0,
            lo, 4, 1);
    return sum;
}

double quadrature_lower_limit(const RadialMode& m1, const RadialMode& m2)
{
    return std::max({1e-10 * m1.radius(), m1.lower_limit(), m2.lower_limit()});
}

} // namespace

std::complex<double> pr_matrix_element(const RadialMode& bra, const RadialMode& ket,
                                       const Units& units, int panels)
{
    require_same_channel(bra, ket);
    const double lo = quadrature_lower_limit(bra, ket);
    return -kI * units.hbar() * pr_integral(bra, ket, lo, panels);
}

double verify_eq5_by_quadrature(const RadialMode& mode1, const RadialMode& mode2, int panels,
                                const Units& units, double tolerance)
{
    require_same_channel(mode1, mode2);
    if (panels < 1)
        throw DomainError("quadrature needs at least one panel");
    const double lo = quadrature_lower_limit(mode1, mode2);
    const auto boundary = pr_defect(mode1, mode2, units);
    const auto residual_with = [&](int p) {
        const std::complex<double> lhs = -kI * units.hbar() * pr_integral(mode1, mode2, lo, p);
        const std::complex<double> rhs =
            std::conj(-kI * units.hbar() * pr_integral(mode2, mode1, lo, p));
        return lhs - rhs - boundary;
    };
    const auto coarse = residual_with(panels);
    const auto fine = residual_with(2 * panels);
    if (std::abs(fine - coarse) > tolerance) {
        std::ostringstream msg;
        msg << "p_r quadrature did not converge under panel doubling: residual estimates "
            << std::abs(coarse) << " (" << panels << " panels) and " << std::abs(fine) << " ("
            << 2 * panels << " panels)";
        throw QuadratureError(std::abs(coarse), std::abs(fine), msg.str());
    }
    return std::abs(fine);
}

namespace {

HermiticityReport audit_modes(const RadialMode& mode1, const RadialMode& mode2, bool diagonal,
                              const Units& units, const AuditTolerances& tolerances)
{
    const RadialMode m1 = normalize(mode1);
    const RadialMode m2 = normalize(mode2);
    HermiticityReport report;
    report.tolerances = tolerances;
    report.wronskian_defect = wronskian_defect(m1, m2);
    report.pr_defect = pr_defect(m1, m2, units);
    report.endpoint_magnitudes.push_back(
        {std::abs(m1.at_origin().value), std::abs(m1.at_edge().value)});
    if (!diagonal)
        report.endpoint_magnitudes.push_back(
            {std::abs(m2.at_origin().value), std::abs(m2.at_edge().value)});
    report.quadrature_residual =
        verify_eq5_by_quadrature(m1, m2, tolerances.panels, units, tolerances.identity);

    bool endpoints_match = true;
    for (const auto& e : report.endpoint_magnitudes)
        endpoints_match =
            endpoints_match && std::abs(e.at_origin - e.at_edge) <= tolerances.verdict;
    if (std::abs(report.wronskian_defect) > tolerances.verdict)
        report.verdict = Verdict::FailEq3;
    else if (!endpoints_match)
        report.verdict = Verdict::FailEq6;
    else
        report.verdict = Verdict::Pass;
    return report;
}

} // namespace

HermiticityReport audit_pair(const RadialMode& mode1, const RadialMode& mode2,
                             const Units& units, const AuditTolerances& tolerances)
{
    return audit_modes(mode1, mode2, false, units, tolerances);
}

HermiticityReport audit(const RadialMode& mode, const Units& units,
                        const AuditTolerances& tolerances)
{
    return audit_modes(mode, mode, true, units, tolerances);
}

} // namespace radialwell
