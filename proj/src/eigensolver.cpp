#include "radialwell/eigensolver.hpp"

#include "radialwell/errors.hpp"
#include "radialwell/specfun.hpp"

#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <sstream>

namespace radialwell {

namespace odeint = boost::numeric::odeint;

void ShootingConfig::validate(double radius) const
{
    if (epsilon != 0.0 && !(epsilon > 0.0 && epsilon <= 1e-6 * radius))
        throw DomainError("shooting start radius must satisfy 0 < eps <= 1e-6 a");
    if (step < 0.0)
        throw DomainError("shooting step must be non-negative");
    if (!(k_lo >= 0.0))
        throw DomainError("k scan must start at k >= 0");
    if (k_hi != 0.0 && !(k_hi > k_lo))
        throw DomainError("k scan upper limit must exceed the lower limit");
    if (!(tolerance >= 1e2 * std::numeric_limits<double>::epsilon()))
        throw DomainError("shooting tolerance must be at least 100 machine epsilons");
}

namespace {

// Refines a sign-changing bracket [lo, hi] of f to `bits` binary digits.
template <typename F>
double refine_root(F f, double lo, double hi, double f_lo, double f_hi, int bits)
{
    if (f_lo == 0.0)
        return lo;
    if (f_hi == 0.0)
        return hi;
    // No sign change inside a node-count bracket means the root sits on an
    // endpoint within rounding of χ(a).
    if ((f_lo > 0.0) == (f_hi > 0.0))
        return std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
    std::uintmax_t max_iter = 200;
    const auto result = boost::math::tools::toms748_solve(
        f, lo, hi, f_lo, f_hi, boost::math::tools::eps_tolerance<double>(bits), max_iter);
    return 0.5 * (result.first + result.second);
}

} // namespace

std::vector<double> bessel_zeros(int l, int n)
{
    if (l < 0)
        throw DomainError("bessel_zero needs l >= 0");
    if (n < 0)
        throw DomainError("bessel_zero needs n >= 1");
    if (n == 0)
        return {};
    // Zeros of j_0 are mπ; zeros of consecutive orders interlace,
    // z_{m,l−1} < z_{m,l} < z_{m+1,l−1}, so each order brackets the next.
    std::vector<double> zeros(static_cast<std::size_t>(n + l));
    for (int m = 0; m < n + l; ++m)
        zeros[m] = (m + 1) * std::numbers::pi;
    for (int order = 1; order <= l; ++order) {
        const int count = n + l - order;
        std::vector<double> next(static_cast<std::size_t>(count));
        const auto f = [order](double x) { return specfun::spherical_j(order, x); };
        for (int m = 0; m < count; ++m) {
            const double lo = zeros[m];
            const double hi = zeros[m + 1];
            next[m] = refine_root(f, lo, hi, f(lo), f(hi), 52);
        }
        zeros = std::move(next);
    }
    zeros.resize(static_cast<std::size_t>(n));
    return zeros;
}

double bessel_zero(int l, int n)
{
    if (n < 1)
        throw DomainError("bessel_zero needs n >= 1");
    return bessel_zeros(l, n).back();
}

namespace {

void require_zero_interior(const PotentialSpec& geometry)
{
    if (!geometry.is_zero())
        throw DomainError("analytic well spectrum requires a zero interior potential; use "
                          "the shooting solver for '" +
                          geometry.kind_name() + "'");
}

} // namespace

RadialMode well_mode(double radius, const BoundaryCondition& bc, double k)
{
    if (bc.family() == BoundaryFamily::Conventional)
        return normalize(RadialMode::analytic(k, bc.channel(), radius, 1.0, 0.0));
    return normalize(RadialMode::analytic(k, bc.channel(), radius, 0.0, 1.0));
}

Spectrum well_spectrum(const PotentialSpec& geometry, const BoundaryCondition& bc, int n_max,
                       const Units& units)
{
    require_zero_interior(geometry);
    if (n_max < 0)
        throw DomainError("n_max must be non-negative");
    const double a = geometry.radius();
    Spectrum spectrum{bc.channel(), bc.family(), a, units, {}};
    if (n_max == 0)
        return spectrum;

    std::vector<double> ks;
    if (bc.family() == BoundaryFamily::Conventional) {
        for (double z : bessel_zeros(bc.channel().l, n_max))
            ks.push_back(z / a);
    } else {
        for (int n = 1; n <= n_max; ++n)
            ks.push_back((n - 0.5) * std::numbers::pi / a);
    }
    for (int n = 1; n <= n_max; ++n) {
        const double k = ks[n - 1];
        const int nodes = count_nodes(well_mode(a, bc, k));
        spectrum.entries.push_back({n, k, units.energy_from_k(k), nodes});
    }
    return spectrum;
}

Spectrum well_spectrum(const PotentialSpec& geometry, QuantumChannel channel,
                       BoundaryFamily family, int n_max, const Units& units)
{
    return well_spectrum(geometry, BoundaryCondition::make(family, channel), n_max, units);
}

std::vector<RadialMode> spectrum_modes(const Spectrum& spectrum)
{
    const auto bc = BoundaryCondition::make(spectrum.family, spectrum.channel);
    std::vector<RadialMode> modes;
    modes.reserve(spectrum.entries.size());
    for (const auto& e : spectrum.entries)
        modes.push_back(well_mode(spectrum.radius, bc, e.k));
    return modes;
}

// ---------------------------------------------------------------------------
// Shooting

namespace {

using State = std::array<double, 2>;

class Shooter {
  public:
    Shooter(const PotentialSpec& potential, QuantumChannel channel, const ShootingConfig& config,
            const Units& units)
        : potential_(potential), channel_(channel), config_(config), units_(units),
          radius_(potential.radius())
    {
        config_.validate(radius_);
        check_admissible(potential_);
        epsilon_ = config_.epsilon > 0.0 ? config_.epsilon : 1e-8 * radius_;
        scale_ = units_.potential_scale();
        c1_ = 0.5 * scale_ * potential_.origin_residue() / (channel_.l + 1.0);
    }

    double epsilon() const { return epsilon_; }
    void set_epsilon(double eps) { epsilon_ = eps; }

    // χ″ = g(r)·χ.
    double g(double r, double k) const
    {
        const double v = potential_.is_zero() ? 0.0 : potential_(r);
        return channel_.centrifugal() / (r * r) + scale_ * v - k * k;
    }

    ShotResult shot(double k) const
    {
        if (config_.integrator == Integrator::Numerov)
            return numerov_shot(k, nullptr);
        return rk_shot(k);
    }

    RadialMode mode(double k) const
    {
        if (config_.integrator == Integrator::Numerov) {
            std::vector<double> r;
            std::vector<double> chi;
            numerov_shot(k, &chi);
            const int n = static_cast<int>(chi.size()) - 1;
            for (int i = 0; i <= n; ++i)
                r.push_back(radius_ * i / n);
            return normalize(RadialMode::sampled(k, channel_, std::move(r), std::move(chi)));
        }
        return normalize(rk_mode(k));
    }

  private:
    // Series start, scaled by ε^(−l): χ = ε^(l+1)(1 + c₁ε) → ε(1 + c₁ε).
    State start_state() const
    {
        const double l = channel_.l;
        return {epsilon_ * (1.0 + c1_ * epsilon_), (l + 1.0) + (l + 2.0) * c1_ * epsilon_};
    }

    auto stepper() const
    {
        return odeint::make_controlled(1e-30, config_.tolerance,
                                       odeint::runge_kutta_dopri5<State>());
    }

    double initial_step() const
    {
        return config_.step > 0.0 ? std::min(config_.step, epsilon_) : 0.01 * epsilon_;
    }

    [[noreturn]] void step_failure(double min_step, double r, const char* what) const
    {
        std::ostringstream msg;
        msg << "adaptive integration failed near r = " << r << " (" << what
            << "); minimum stable step reached " << min_step;
        throw StepSizeError(min_step, msg.str());
    }

    ShotResult rk_shot(double k) const
    {
        State x = start_state();
        const auto rhs = [this, k](const State& s, State& ds, double r) {
            ds[0] = s[1];
            ds[1] = g(r, k) * s[0];
        };
        int nodes = 0;
        double last_sign = x[0] > 0.0 ? 1.0 : -1.0;
        double last_r = epsilon_;
        double min_step = std::numeric_limits<double>::infinity();
        const auto observer = [&](const State& s, double r) {
            if (r > last_r)
                min_step = std::min(min_step, r - last_r);
            last_r = r;
            if (r >= radius_ || s[0] == 0.0)
                return;
            const double sign = s[0] > 0.0 ? 1.0 : -1.0;
            if (sign != last_sign)
                ++nodes;
            last_sign = sign;
        };
        try {
            odeint::integrate_adaptive(stepper(), rhs, x, epsilon_, radius_, initial_step(),
                                       observer);
        } catch (const odeint::step_adjustment_error& e) {
            step_failure(min_step, last_r, e.what());
        } catch (const odeint::no_progress_error& e) {
            step_failure(min_step, last_r, e.what());
        }
        if (!std::isfinite(x[0]))
            step_failure(min_step, last_r, "solution overflowed");
        return {x[0], nodes};
    }

    RadialMode rk_mode(double k) const
    {
        // Geometric grid from ε to 1e-3·a, then uniform to a.
        std::vector<double> grid;
        const double inner = 1e-3 * radius_;
        const int geometric = 60;
        for (int i = 0; i < geometric; ++i)
            grid.push_back(epsilon_ * std::pow(inner / epsilon_, static_cast<double>(i) /
                                                                   geometric));
        const int uniform =
            std::max(4000, static_cast<int>(200.0 * k * radius_ / std::numbers::pi));
        for (int i = 0; i <= uniform; ++i) {
            const double r = inner + (radius_ - inner) * i / uniform;
            grid.push_back(i == uniform ? radius_ : r);
        }

        State x = start_state();
        const auto rhs = [this, k](const State& s, State& ds, double r) {
            ds[0] = s[1];
            ds[1] = g(r, k) * s[0];
        };
        std::vector<double> chi;
        std::vector<double> dchi;
        chi.reserve(grid.size());
        dchi.reserve(grid.size());
        const auto observer = [&](const State& s, double) {
            chi.push_back(s[0]);
            dchi.push_back(s[1]);
        };
        try {
            odeint::integrate_times(stepper(), rhs, x, grid.begin(), grid.end(), initial_step(),
                                    observer);
        } catch (const odeint::step_adjustment_error& e) {
            step_failure(0.0, grid.back(), e.what());
        }
        return RadialMode::sampled(k, channel_, std::move(grid), std::move(chi),
                                   std::move(dchi));
    }

    ShotResult numerov_shot(double k, std::vector<double>* samples) const
    {
        const double h_req = config_.step > 0.0 ? config_.step : 1e-4 * radius_;
        const int n = std::max(16, static_cast<int>(std::ceil(radius_ / h_req)));
        const double h = radius_ / n;
        const double l = channel_.l;
        // Series points until the Numerov denominators are safely positive.
        const int m = 2 + static_cast<int>(std::ceil(std::sqrt(channel_.centrifugal() / 6.0)));
        const double c2 = (scale_ * potential_.origin_residue() * c1_ - k * k) / (4.0 * l + 6.0);
        std::vector<double> chi(static_cast<std::size_t>(n + 1), 0.0);
        for (int i = 1; i <= m && i <= n; ++i) {
            const double r = i * h;
            chi[i] = std::pow(static_cast<double>(i), l + 1.0) * h * (1.0 + c1_ * r + c2 * r * r);
        }
        const double h2 = h * h / 12.0;
        for (int i = m; i < n; ++i) {
            const double g_prev = g((i - 1) * h, k);
            const double g_cur = g(i * h, k);
            const double g_next = g((i + 1) * h, k);
            chi[i + 1] = (2.0 * chi[i] * (1.0 + 5.0 * h2 * g_cur) - chi[i - 1] * (1.0 - h2 * g_prev)) /
                         (1.0 - h2 * g_next);
            if (!std::isfinite(chi[i + 1]))
                step_failure(h, (i + 1) * h, "Numerov recursion overflowed");
        }
        int nodes = 0;
        double last_sign = 0.0;
        for (int i = 1; i < n; ++i) {
            if (chi[i] == 0.0)
                continue;
            const double s = chi[i] > 0.0 ? 1.0 : -1.0;
            if (last_sign != 0.0 && s != last_sign)
                ++nodes;
            last_sign = s;
        }
        const ShotResult out{chi[n], nodes};
        if (samples != nullptr)
            *samples = std::move(chi);
        return out;
    }

    PotentialSpec potential_;
    QuantumChannel channel_;
    ShootingConfig config_;
    Units units_;
    double radius_;
    double epsilon_ = 0.0;
    double scale_ = 1.0;
    double c1_ = 0.0;
};

double auto_k_hi(const PotentialSpec& potential, QuantumChannel channel, double k_lo, int n_max,
                 const Units& units)
{
    const double a = potential.radius();
    double depth = 0.0;
    if (!potential.is_zero())
        for (int i = 1; i <= 1000; ++i)
            depth = std::max(depth, std::abs(potential(a * i / 1000.0)));
    return k_lo + (2.0 * (n_max + channel.l) + 10.0) * std::numbers::pi / a +
           2.0 * std::sqrt(units.potential_scale() * depth);
}

} // namespace

ShotResult shoot(const PotentialSpec& potential, QuantumChannel channel, double k,
                 const ShootingConfig& config, const Units& units)
{
    return Shooter(potential, channel, config, units).shot(k);
}

RadialMode shoot_mode(const PotentialSpec& potential, QuantumChannel channel, double k,
                      const ShootingConfig& config, const Units& units)
{
    return Shooter(potential, channel, config, units).mode(k);
}

ShootingSolution shooting_solve_with_modes(const PotentialSpec& potential,
                                           QuantumChannel channel,
                                           const ShootingConfig& config, int n_max,
                                           const Units& units)
{
    if (n_max < 0)
        throw DomainError("n_max must be non-negative");
    const double a = potential.radius();
    ShootingSolution solution;
    solution.spectrum = Spectrum{channel, BoundaryFamily::Conventional, a, units, {}};
    if (n_max == 0)
        return solution;

    Shooter shooter(potential, channel, config, units);
    const double k_lo = config.k_lo;
    const double k_hi =
        config.k_hi > 0.0 ? config.k_hi : auto_k_hi(potential, channel, k_lo, n_max, units);
    const double scan_step = std::numbers::pi / (2.0 * a);

    const ShotResult at_lo = shooter.shot(k_lo);
    if (k_lo == 0.0 && at_lo.nodes > 0) {
        std::ostringstream msg;
        msg << "shooting found " << at_lo.nodes
            << " node(s) at k = 0: negative-energy states are not representable by a real "
               "wavenumber; searched k in ["
            << k_lo << ", " << k_hi << "]";
        throw BracketError(k_lo, k_hi, msg.str());
    }
    const int first_index = at_lo.nodes + 1;
    const int last_index = first_index + n_max - 1;

    // Coarse scan until the node count covers every requested level.
    std::vector<std::pair<double, ShotResult>> scan{{k_lo, at_lo}};
    while (scan.back().second.nodes < last_index) {
        const double k = scan.back().first + scan_step;
        if (k > k_hi) {
            std::ostringstream msg;
            msg << "bracket exhausted: found " << scan.back().second.nodes - at_lo.nodes
                << " of " << n_max << " eigenvalue(s) while scanning k in [" << k_lo << ", "
                << k_hi << "]";
            throw BracketError(k_lo, k_hi, msg.str());
        }
        scan.emplace_back(k, shooter.shot(k));
    }

    const auto chi_edge = [&](double k) { return shooter.shot(k).chi_edge; };
    const int bits = std::clamp(static_cast<int>(-std::log2(config.tolerance)), 20, 52);

    for (int n = first_index; n <= last_index; ++n) {
        // Bracket with nodes(lo) ≤ n−1 < n ≤ nodes(hi), then bisect on the node count.
        std::size_t i = 0;
        while (scan[i + 1].second.nodes < n)
            ++i;
        double lo = scan[i].first;
        double hi = scan[i + 1].first;
        ShotResult s_lo = scan[i].second;
        ShotResult s_hi = scan[i + 1].second;
        while (s_lo.nodes != n - 1 || s_hi.nodes != n) {
            const double mid = 0.5 * (lo + hi);
            const ShotResult s_mid = shooter.shot(mid);
            if (s_mid.nodes >= n) {
                hi = mid;
                s_hi = s_mid;
            } else {
                lo = mid;
                s_lo = s_mid;
            }
            if (hi - lo < 1e-14 * hi)
                break;
        }
        const double k = refine_root(chi_edge, lo, hi, s_lo.chi_edge, s_hi.chi_edge, bits);

        if (config.richardson_check && config.integrator == Integrator::RungeKutta45) {
            Shooter coarse = shooter;
            coarse.set_epsilon(10.0 * shooter.epsilon());
            const auto f = [&](double kk) { return coarse.shot(kk).chi_edge; };
            const double k_coarse = refine_root(f, lo, hi, f(lo), f(hi), bits);
            const double tol = std::max(1e3 * config.tolerance, 1e-10);
            if (std::abs(k_coarse - k) > tol * k) {
                std::ostringstream msg;
                msg << "eigenvalue n=" << n << " moved from k=" << k << " to k=" << k_coarse
                    << " when the start radius grew from " << shooter.epsilon() << " to "
                    << coarse.epsilon();
                solution.warnings.push_back(msg.str());
            }
        }

        RadialMode mode = shooter.mode(k);
        const int nodes = count_nodes(mode);
        solution.spectrum.entries.push_back({n, k, units.energy_from_k(k), nodes});
        solution.modes.push_back(std::move(mode));
    }
    return solution;
}

Spectrum shooting_solve(const PotentialSpec& potential, QuantumChannel channel,
                        const ShootingConfig& config, int n_max, const Units& units)
{
    return shooting_solve_with_modes(potential, channel, config, n_max, units).spectrum;
}

} // namespace radialwell
