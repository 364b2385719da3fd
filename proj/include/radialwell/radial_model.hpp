#pragma once

#include <cmath>
#include <memory>
#include <numbers>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace radialwell {

/// Y₀⁰ = (4π)^(−1/2).
inline const double kY00 = 1.0 / std::sqrt(4.0 * std::numbers::pi);

/// Action and mass scales. The default (ħ = 1, μ = 1/2) makes ħ²/2μ = 1, so E = k².
class Units {
  public:
    Units() = default;
    Units(double hbar, double mu);

    double hbar() const { return hbar_; }
    double mu() const { return mu_; }

    /// E = ħ²k²/(2μ).
    double energy_from_k(double k) const { return hbar_ * hbar_ * k * k / (2.0 * mu_); }
    /// k = √(2μE)/ħ for E ≥ 0.
    double k_from_energy(double energy) const;
    /// 2μ/ħ², the factor in front of V in the radial equation.
    double potential_scale() const { return 2.0 * mu_ / (hbar_ * hbar_); }

    bool is_default() const { return hbar_ == 1.0 && mu_ == 0.5; }

  private:
    double hbar_ = 1.0;
    double mu_ = 0.5;
};

struct ZeroInterior {};

/// V(r) = −alpha / r.
struct CoulombLike {
    double alpha = 0.0;
};

/// Samples (r_i, V_i), strictly increasing in r with r_1 > 0. Between samples
/// the product r·V is interpolated linearly in ln r; below r_1 and above the
/// last sample r·V is held constant, so V keeps the r⁻¹ class at the origin.
struct Tabulated {
    std::vector<double> r;
    std::vector<double> v;
};

/// Confining radius a plus the interior potential on (0, a].
class PotentialSpec {
  public:
    using Interior = std::variant<ZeroInterior, CoulombLike, Tabulated>;

    static PotentialSpec zero(double radius);
    static PotentialSpec coulomb(double radius, double alpha);
    static PotentialSpec tabulated(double radius, std::vector<std::pair<double, double>> samples);

    double radius() const { return radius_; }
    const Interior& interior() const { return interior_; }
    bool is_zero() const { return std::holds_alternative<ZeroInterior>(interior_); }
    std::string kind_name() const;

    /// V(r) for 0 < r ≤ a.
    double operator()(double r) const;
    /// r·V(r), bounded on (0, a] for every representable potential.
    double r_times_v(double r) const;
    /// lim_{r→0⁺} r·V(r).
    double origin_residue() const;

  private:
    PotentialSpec(double radius, Interior interior);

    double radius_;
    Interior interior_;
};

/// Throws AdmissibilityError if the potential diverges faster than r⁻¹ at the
/// origin. For tabulated data the local exponent of V between the two
/// innermost samples must not exceed 1 (with a 10% allowance for sampling).
void check_admissible(const PotentialSpec& potential);

struct QuantumChannel {
    int l = 0;

    explicit QuantumChannel(int l_value = 0);
    double centrifugal() const { return l * (l + 1.0); }
};

struct ChiValue {
    double value;
    double derivative;
};

/// χ(r) = A·(kr)j_l(kr) − B·(kr)n_l(kr), so that for l = 0
/// χ(r) = A sin(kr) + B cos(kr) exactly.
struct AnalyticForm {
    double A = 1.0;
    double B = 0.0;
};

/// Samples of χ and χ′ on a grid covering (0, a]; interpolated with cubic
/// Hermite polynomials.
struct SampledForm {
    std::vector<double> r;
    std::vector<double> chi;
    std::vector<double> dchi;
};

/// One candidate radial solution χ_{kl}(r) on [0, a]. Immutable.
class RadialMode {
  public:
    static RadialMode analytic(double k, QuantumChannel channel, double radius, double A,
                               double B = 0.0);
    /// An empty derivative vector is filled with fourth-order finite differences.
    static RadialMode sampled(double k, QuantumChannel channel, std::vector<double> r,
                              std::vector<double> chi, std::vector<double> dchi = {});

    double k() const { return k_; }
    QuantumChannel channel() const { return channel_; }
    int l() const { return channel_.l; }
    double radius() const { return radius_; }

    bool is_analytic() const { return analytic_.has_value(); }
    const AnalyticForm& analytic_form() const;
    const SampledForm& sampled_form() const;

    /// Analytic mode with Neumann content and l > 0: ∫|χ|² diverges.
    bool is_non_normalizable() const;

    /// χ and dχ/dr at r ∈ [0, a]. Sampled modes are only defined on their grid.
    ChiValue evaluate(double r) const;
    /// One-sided limit at the origin (first grid point for sampled modes).
    ChiValue at_origin() const;
    /// One-sided limit at r = a.
    ChiValue at_edge() const;
    /// Smallest r at which the mode may be evaluated.
    double lower_limit() const;

    /// Same shape, amplitude multiplied by `factor`.
    RadialMode scaled(double factor) const;

  private:
    RadialMode(double k, QuantumChannel channel, double radius);

    double k_;
    QuantumChannel channel_;
    double radius_;
    std::optional<AnalyticForm> analytic_;
    std::shared_ptr<const SampledForm> sampled_;
};

ChiValue evaluate_chi(const RadialMode& mode, double r);

/// ∫₀^a χ₁ χ₂ dr. Analytic modes use 32-point Gauss–Legendre on 16 panels;
/// sampled modes integrate the Hermite interpolant exactly per grid cell.
double inner_product(const RadialMode& a, const RadialMode& b);

/// Rescales so that ∫₀^a |χ|² dr = 1 with the first non-zero lobe positive.
/// Throws NonNormalizableError for Neumann content with l > 0.
RadialMode normalize(const RadialMode& mode);

/// Strict sign changes of χ on the open interval (0, a).
int count_nodes(const RadialMode& mode);

enum class BoundaryFamily { Conventional, HuangThomann };

std::string to_string(BoundaryFamily family);
BoundaryFamily boundary_family_from_string(const std::string& name);

/// Boundary-condition family bound to a channel. The Huang–Thomann family keeps
/// the cosine (Neumann) radial part, which is only square-integrable for l = 0;
/// constructing it for l > 0 throws NonNormalizableError.
class BoundaryCondition {
  public:
    static BoundaryCondition conventional(QuantumChannel channel);
    static BoundaryCondition huang_thomann(QuantumChannel channel);
    static BoundaryCondition make(BoundaryFamily family, QuantumChannel channel);

    BoundaryFamily family() const { return family_; }
    QuantumChannel channel() const { return channel_; }

  private:
    BoundaryCondition(BoundaryFamily family, QuantumChannel channel)
        : family_(family), channel_(channel) {}

    BoundaryFamily family_;
    QuantumChannel channel_;
};

struct SpectrumEntry {
    int n = 1;
    double k = 0.0;
    double energy = 0.0;
    int nodes = 0;
};

struct Spectrum {
    QuantumChannel channel;
    BoundaryFamily family = BoundaryFamily::Conventional;
    double radius = 1.0;
    Units units;
    std::vector<SpectrumEntry> entries;
};

} // namespace radialwell
