#include "radialwell/singularity.hpp"

#include "radialwell/errors.hpp"
#include "radialwell/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace radialwell {

std::vector<double> default_epsilon_ladder(double radius)
{
    return {1e-2 * radius, 1e-3 * radius, 1e-4 * radius, 1e-5 * radius};
}

DeltaWeightEstimate delta_weight(const RadialMode& mode, const std::vector<double>& epsilons)
{
    if (mode.l() != 0)
        throw DomainError("delta weight is defined for l = 0 only; for l = " +
                          std::to_string(mode.l()) +
                          " the centrifugal term dominates near the origin");
    if (epsilons.size() < 2)
        throw DomainError("delta weight needs at least two ball radii");
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        if (!(epsilons[i] > 0.0) || epsilons[i] > mode.radius())
            throw DomainError("ball radii must lie in (0, a]");
        if (i > 0 && !(epsilons[i] < epsilons[i - 1]))
            throw DomainError("ball radii must be strictly decreasing");
    }

    const double four_pi = 4.0 * std::numbers::pi;
    const double k2 = mode.k() * mode.k();
    DeltaWeightEstimate out;
    out.epsilons = epsilons;
    for (double eps : epsilons) {
        // ∮ ∇ψ·dS = 4πε² ∂_r(χ/r)·Y₀⁰ = 4π Y₀⁰ (εχ′(ε) − χ(ε)).
        const auto c = mode.evaluate(eps);
        out.estimates.push_back(four_pi * kY00 * (eps * c.derivative - c.value));
        // k² ∫ ψ dV = 4π Y₀⁰ k² ∫₀^ε χ(r) r dr.
        const double lo = std::max(0.0, mode.lower_limit());
        const double vol = quadrature::gauss_legendre_sum(
            [&](double r) { return mode.evaluate(r).value * r; }, lo, eps, 64, 1);
        out.volume_terms.push_back(four_pi * kY00 * k2 * vol);
    }

    const std::size_t n = epsilons.size();
    const double e_big = epsilons[n - 2];
    const double e_small = epsilons[n - 1];
    const double w_big = out.estimates[n - 2];
    const double w_small = out.estimates[n - 1];
    out.extrapolated_weight =
        (w_small * e_big * e_big - w_big * e_small * e_small) / (e_big * e_big - e_small * e_small);

    // Differences below rounding level carry no convergence information.
    double scale = 0.0;
    for (double e : out.estimates)
        scale = std::max(scale, std::abs(e));
    const double floor = 1e3 * std::numeric_limits<double>::epsilon() * std::max(scale, 1e-300);
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double d = std::abs(out.estimates[i] - out.estimates[i + 1]);
        if (d > floor) {
            xs.push_back(std::log(epsilons[i]));
            ys.push_back(std::log(d));
        }
    }
    if (xs.size() < 2) {
        out.convergence_order = std::numeric_limits<double>::quiet_NaN();
    } else {
        double mx = 0.0;
        double my = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= xs.size();
        my /= xs.size();
        double sxy = 0.0;
        double sxx = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sxy += (xs[i] - mx) * (ys[i] - my);
            sxx += (xs[i] - mx) * (xs[i] - mx);
        }
        out.convergence_order = sxy / sxx;
    }
    return out;
}

DeltaWeightEstimate delta_weight(const RadialMode& mode)
{
    return delta_weight(mode, default_epsilon_ladder(mode.radius()));
}

FrobeniusResult frobenius_indicial(const PotentialSpec& potential, QuantumChannel channel,
                                   const Units& units)
{
    check_admissible(potential);
    // χ ~ r^s: s(s − 1) = l(l + 1). A potential bounded by r⁻¹ adds a term of
    // order r^{s−1}, which never enters the leading r^{s−2} balance.
    const double c = channel.centrifugal();
    const double disc = std::sqrt(1.0 + 4.0 * c);
    FrobeniusResult out;
    out.l = channel.l;
    out.exponent_regular = 0.5 * (1.0 + disc);
    out.exponent_irregular = 0.5 * (1.0 - disc);
    out.regular_series_c1 =
        0.5 * units.potential_scale() * potential.origin_residue() / (channel.l + 1.0);
    return out;
}

LeadingCoefficients frobenius_coefficients(const RadialMode& mode)
{
    if (mode.l() != 0)
        throw DomainError("leading coefficients (c1, c2) are defined for l = 0 modes");
    const auto c = mode.at_origin();
    return {c.derivative, c.value};
}

std::string to_string(RejectionReason reason)
{
    switch (reason) {
    case RejectionReason::None: return "none";
    case RejectionReason::DeltaSource: return "delta-source";
    case RejectionReason::NonNormalizable: return "non-normalizable";
    }
    return "unknown";
}

RegularityResult regularity_filter(const RadialMode& mode, double tolerance)
{
    RegularityResult out;
    if (mode.l() > 0) {
        bool neumann = mode.is_non_normalizable();
        if (!mode.is_analytic()) {
            // Local exponent of the innermost samples; regular content has l + 1.
            const auto& s = mode.sampled_form();
            std::size_t i = 0;
            while (i + 1 < s.r.size() && s.r[i] <= 0.0)
                ++i;
            if (i + 1 < s.r.size() && s.chi[i] != 0.0 && s.chi[i + 1] != 0.0) {
                const double p = std::log(std::abs(s.chi[i + 1] / s.chi[i])) /
                                 std::log(s.r[i + 1] / s.r[i]);
                neumann = p < 0.5;
            }
        }
        if (neumann) {
            out.accepted = false;
            out.reason = RejectionReason::NonNormalizable;
            std::ostringstream msg;
            msg << "Neumann content with l = " << mode.l() << ": |chi|^2 ~ r^(" << -2 * mode.l()
                << ") is not integrable at the origin";
            out.message = msg.str();
        }
        return out;
    }

    out.delta_weight = delta_weight(mode).extrapolated_weight;
    if (std::abs(out.delta_weight) > tolerance) {
        out.accepted = false;
        out.reason = RejectionReason::DeltaSource;
        std::ostringstream msg;
        msg << "psi ~ 1/r at the origin: Laplacian carries a delta source of weight "
            << out.delta_weight << " (|w| > " << tolerance << ")";
        out.message = msg.str();
    }
    return out;
}

} // namespace radialwell
