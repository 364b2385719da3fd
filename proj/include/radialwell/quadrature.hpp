#pragma once

#include <functional>
#include <variant>
#include <vector>

namespace radialwell::quadrature {

struct GaussLegendreComposite {
    int points_per_panel = 32;
    int panels = 16;
};

struct AdaptiveSimpson {
    double tolerance = 1e-10;
    int max_depth = 48;
};

/// Integration rule over the closed interval [lo, hi]. Both rule kinds are
/// open at the interval ends, so integrable endpoint singularities are fine.
class QuadratureRule {
  public:
    using Kind = std::variant<GaussLegendreComposite, AdaptiveSimpson>;

    QuadratureRule(Kind kind, double lo, double hi);

    static QuadratureRule gauss_legendre(double lo, double hi, int points_per_panel = 32,
                                         int panels = 16);
    static QuadratureRule adaptive_simpson(double lo, double hi, double tolerance = 1e-10);

    const Kind& kind() const { return kind_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }

  private:
    Kind kind_;
    double lo_;
    double hi_;
};

struct QuadratureResult {
    double value = 0.0;
    /// |estimate(2·panels) − estimate(panels)| for Gauss–Legendre, the
    /// accumulated Richardson correction for adaptive Simpson.
    double error_estimate = 0.0;
};

using Integrand = std::function<double(double)>;

/// Nodes and weights of the p-point Gauss–Legendre rule on [-1, 1].
struct GaussLegendreNodes {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussLegendreNodes gauss_legendre_nodes(int points);

QuadratureResult integrate(const Integrand& f, const QuadratureRule& rule);

/// Single composite Gauss–Legendre pass without the doubling estimate.
double gauss_legendre_sum(const Integrand& f, double lo, double hi, int points_per_panel,
                          int panels);

} // namespace radialwell::quadrature
