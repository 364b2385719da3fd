#include "radialwell/quadrature.hpp"

#include "radialwell/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace radialwell::quadrature {

QuadratureRule::QuadratureRule(Kind kind, double lo, double hi)
    : kind_(kind), lo_(lo), hi_(hi)
{
    if (!(lo < hi))
        throw DomainError("quadrature domain requires lo < hi");
    if (const auto* gl = std::get_if<GaussLegendreComposite>(&kind_)) {
        if (gl->points_per_panel < 4 || gl->points_per_panel > 128)
            throw DomainError("Gauss-Legendre points per panel must lie in [4, 128]");
        if (gl->panels < 1)
            throw DomainError("Gauss-Legendre panel count must be positive");
    } else {
        const auto& as = std::get<AdaptiveSimpson>(kind_);
        if (!(as.tolerance > 0.0))
            throw DomainError("adaptive Simpson tolerance must be positive");
    }
}

QuadratureRule QuadratureRule::gauss_legendre(double lo, double hi, int points_per_panel,
                                              int panels)
{
    return QuadratureRule(GaussLegendreComposite{points_per_panel, panels}, lo, hi);
}

QuadratureRule QuadratureRule::adaptive_simpson(double lo, double hi, double tolerance)
{
    return QuadratureRule(AdaptiveSimpson{tolerance, 48}, lo, hi);
}

GaussLegendreNodes gauss_legendre_nodes(int points)
{
    GaussLegendreNodes rule;
    rule.nodes.resize(points);
    rule.weights.resize(points);
    const int half = (points + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton iteration on P_n from the Tricomi initial guess.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (points + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int j = 2; j <= points; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = points * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        // Recompute the derivative at the converged node.
        double p0 = 1.0;
        double p1 = x;
        for (int j = 2; j <= points; ++j) {
            const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        dp = points * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[points - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[points - 1 - i] = w;
    }
    if (points % 2 == 1)
        rule.nodes[points / 2] = 0.0;
    return rule;
}

namespace {

double composite_sum(const Integrand& f, const GaussLegendreNodes& rule, double lo, double hi,
                     int panels)
{
    const double width = (hi - lo) / panels;
    double total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = lo + p * width;
        const double b = (p + 1 == panels) ? hi : a + width;
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        double panel = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i)
            panel += rule.weights[i] * f(mid + half * rule.nodes[i]);
        total += half * panel;
    }
    return total;
}

struct SimpsonState {
    const Integrand& f;
    int max_depth;
    double last_coarse = 0.0;
    double last_fine = 0.0;
    bool failed = false;
    double correction = 0.0;
};

double simpson_recurse(SimpsonState& st, double a, double b, double fa, double fm, double fb,
                       double whole, double tol, int depth)
{
    if (st.failed)
        return 0.0;
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = st.f(lm);
    const double frm = st.f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) {
        st.correction += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    if (depth >= st.max_depth) {
        st.failed = true;
        st.last_coarse = whole;
        st.last_fine = left + right;
        return left + right + delta / 15.0;
    }
    return simpson_recurse(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           simpson_recurse(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

// Evaluation points stay strictly inside (lo, hi) so integrable endpoint
// singularities are never sampled.
double open_point(double x, double lo, double hi)
{
    const double shrink = 1e-14 * (hi - lo);
    if (x <= lo)
        return lo + shrink;
    if (x >= hi)
        return hi - shrink;
    return x;
}

} // namespace

double gauss_legendre_sum(const Integrand& f, double lo, double hi, int points_per_panel,
                          int panels)
{
    return composite_sum(f, gauss_legendre_nodes(points_per_panel), lo, hi, panels);
}

QuadratureResult integrate(const Integrand& f, const QuadratureRule& rule)
{
    QuadratureResult result;
    if (const auto* gl = std::get_if<GaussLegendreComposite>(&rule.kind())) {
        const auto nodes = gauss_legendre_nodes(gl->points_per_panel);
        const double coarse = composite_sum(f, nodes, rule.lo(), rule.hi(), gl->panels);
        const double fine = composite_sum(f, nodes, rule.lo(), rule.hi(), 2 * gl->panels);
        result.value = fine;
        result.error_estimate = std::abs(fine - coarse);
        return result;
    }

    const auto& as = std::get<AdaptiveSimpson>(rule.kind());
    const double lo = rule.lo();
    const double hi = rule.hi();
    const Integrand g = [&](double x) { return f(open_point(x, lo, hi)); };
    SimpsonState st{g, as.max_depth};
    const double fa = g(lo);
    const double fb = g(hi);
    const double fm = g(0.5 * (lo + hi));
    const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    result.value = simpson_recurse(st, lo, hi, fa, fm, fb, whole, as.tolerance, 0);
    if (st.failed)
        throw QuadratureError(st.last_coarse, st.last_fine,
                              "adaptive Simpson exceeded recursion depth " +
                                  std::to_string(as.max_depth) + "; last estimates " +
                                  std::to_string(st.last_coarse) + " and " +
                                  std::to_string(st.last_fine));
    result.error_estimate = st.correction;
    return result;
}

} // namespace radialwell::quadrature
