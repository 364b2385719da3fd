#include "radialwell/radial_model.hpp"

#include "radialwell/errors.hpp"
#include "radialwell/quadrature.hpp"
#include "radialwell/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace radialwell {

Units::Units(double hbar, double mu) : hbar_(hbar), mu_(mu)
{
    if (!(hbar > 0.0) || !(mu > 0.0) || !std::isfinite(hbar) || !std::isfinite(mu))
        throw DomainError("units require hbar > 0 and mu > 0");
}

double Units::k_from_energy(double energy) const
{
    if (energy < 0.0)
        throw DomainError("negative energy has no real wavenumber");
    return std::sqrt(2.0 * mu_ * energy) / hbar_;
}

// ---------------------------------------------------------------------------
// PotentialSpec

PotentialSpec::PotentialSpec(double radius, Interior interior)
    : radius_(radius), interior_(std::move(interior))
{
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw DomainError("well radius must be positive and finite");
}

PotentialSpec PotentialSpec::zero(double radius) { return PotentialSpec(radius, ZeroInterior{}); }

PotentialSpec PotentialSpec::coulomb(double radius, double alpha)
{
    if (!std::isfinite(alpha))
        throw DomainError("Coulomb strength must be finite");
    return PotentialSpec(radius, CoulombLike{alpha});
}

PotentialSpec PotentialSpec::tabulated(double radius,
                                       std::vector<std::pair<double, double>> samples)
{
    if (samples.empty())
        throw DomainError("tabulated potential needs at least one sample");
    Tabulated t;
    for (const auto& [r, v] : samples) {
        if (!std::isfinite(r) || !std::isfinite(v))
            throw DomainError("tabulated potential samples must be finite");
        if (!t.r.empty() && !(r > t.r.back()))
            throw DomainError("tabulated potential radii must be strictly increasing");
        t.r.push_back(r);
        t.v.push_back(v);
    }
    if (!(t.r.front() > 0.0))
        throw DomainError("first tabulated radius must be positive");
    if (t.r.back() > radius * (1.0 + 1e-12))
        throw DomainError("tabulated potential extends beyond the well radius");
    return PotentialSpec(radius, std::move(t));
}

std::string PotentialSpec::kind_name() const
{
    switch (interior_.index()) {
    case 0: return "zero";
    case 1: return "coulomb";
    default: return "tabulated";
    }
}

double PotentialSpec::r_times_v(double r) const
{
    if (std::holds_alternative<ZeroInterior>(interior_))
        return 0.0;
    if (const auto* c = std::get_if<CoulombLike>(&interior_))
        return -c->alpha;
    const auto& t = std::get<Tabulated>(interior_);
    if (t.r.size() == 1 || r <= t.r.front())
        return t.r.front() * t.v.front();
    if (r >= t.r.back())
        return t.r.back() * t.v.back();
    const auto it = std::upper_bound(t.r.begin(), t.r.end(), r);
    const std::size_t i = static_cast<std::size_t>(it - t.r.begin()) - 1;
    const double u0 = t.r[i] * t.v[i];
    const double u1 = t.r[i + 1] * t.v[i + 1];
    const double s = std::log(r / t.r[i]) / std::log(t.r[i + 1] / t.r[i]);
    return u0 + s * (u1 - u0);
}

double PotentialSpec::operator()(double r) const
{
    if (std::holds_alternative<ZeroInterior>(interior_))
        return 0.0;
    return r_times_v(r) / r;
}

double PotentialSpec::origin_residue() const { return r_times_v(0.0); }

void check_admissible(const PotentialSpec& potential)
{
    const auto* t = std::get_if<Tabulated>(&potential.interior());
    if (t == nullptr || t->r.size() < 2)
        return;
    const double v1 = t->v[0];
    const double v2 = t->v[1];
    if (v1 == 0.0 || v2 == 0.0 || (v1 > 0.0) != (v2 > 0.0))
        return;
    const double exponent = std::log(std::abs(v1 / v2)) / std::log(t->r[1] / t->r[0]);
    if (exponent > 1.1) {
        std::ostringstream msg;
        msg << "potential is not admissible: near the origin V(r) ~ r^(-" << exponent
            << "), diverging faster than the r^-1 limit (r*V(r) must stay bounded)";
        throw AdmissibilityError(msg.str());
    }
}

QuantumChannel::QuantumChannel(int l_value) : l(l_value)
{
    if (l_value < 0)
        throw DomainError("angular momentum l must be non-negative");
}

// ---------------------------------------------------------------------------
// RadialMode

namespace {

// Derivative of the Lagrange basis polynomials through x, evaluated at z.
std::vector<double> first_derivative_weights(double z, const std::vector<double>& x)
{
    const std::size_t n = x.size();
    std::vector<double> w(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t m = 0; m < n; ++m) {
            if (m == j)
                continue;
            double term = 1.0 / (x[j] - x[m]);
            for (std::size_t k = 0; k < n; ++k)
                if (k != j && k != m)
                    term *= (z - x[k]) / (x[j] - x[k]);
            w[j] += term;
        }
    }
    return w;
}

std::vector<double> finite_difference_derivative(const std::vector<double>& r,
                                                 const std::vector<double>& f)
{
    const std::size_t n = r.size();
    const std::size_t width = std::min<std::size_t>(5, n);
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) {
        // Centred five-point stencil in the interior, one-sided near the ends.
        std::size_t first = i >= width / 2 ? i - width / 2 : 0;
        first = std::min(first, n - width);
        std::vector<double> xs(r.begin() + first, r.begin() + first + width);
        const auto w = first_derivative_weights(r[i], xs);
        double acc = 0.0;
        for (std::size_t j = 0; j < width; ++j)
            acc += w[j] * f[first + j];
        d[i] = acc;
    }
    return d;
}

} // namespace

RadialMode::RadialMode(double k, QuantumChannel channel, double radius)
    : k_(k), channel_(channel), radius_(radius)
{
    if (!(k >= 0.0) || !std::isfinite(k))
        throw DomainError("wavenumber must be finite and non-negative");
    if (!(radius > 0.0) || !std::isfinite(radius))
        throw DomainError("mode radius must be positive and finite");
}

RadialMode RadialMode::analytic(double k, QuantumChannel channel, double radius, double A,
                                double B)
{
    if (!std::isfinite(A) || !std::isfinite(B))
        throw DomainError("mode amplitudes must be finite");
    RadialMode m(k, channel, radius);
    m.analytic_ = AnalyticForm{A, B};
    return m;
}

RadialMode RadialMode::sampled(double k, QuantumChannel channel, std::vector<double> r,
                               std::vector<double> chi, std::vector<double> dchi)
{
    if (r.size() < 2 || chi.size() != r.size())
        throw DomainError("sampled mode needs at least two (r, chi) samples of equal length");
    if (!dchi.empty() && dchi.size() != r.size())
        throw DomainError("sampled mode derivative vector has the wrong length");
    if (!(r.front() >= 0.0))
        throw DomainError("sampled mode grid must start at r >= 0");
    for (std::size_t i = 1; i < r.size(); ++i)
        if (!(r[i] > r[i - 1]))
            throw DomainError("sampled mode grid must be strictly increasing");
    const double radius = r.back();
    if (r.front() > 1e-6 * radius)
        throw DomainError("sampled mode grid must reach r <= 1e-6 a near the origin");
    if (dchi.empty())
        dchi = finite_difference_derivative(r, chi);
    RadialMode m(k, channel, radius);
    m.sampled_ = std::make_shared<const SampledForm>(
        SampledForm{std::move(r), std::move(chi), std::move(dchi)});
    return m;
}

const AnalyticForm& RadialMode::analytic_form() const
{
    if (!analytic_)
        throw DomainError("mode is sampled, not analytic");
    return *analytic_;
}

const SampledForm& RadialMode::sampled_form() const
{
    if (!sampled_)
        throw DomainError("mode is analytic, not sampled");
    return *sampled_;
}

bool RadialMode::is_non_normalizable() const
{
    return analytic_ && channel_.l > 0 && analytic_->B != 0.0;
}

double RadialMode::lower_limit() const { return sampled_ ? sampled_->r.front() : 0.0; }

ChiValue RadialMode::evaluate(double r) const
{
    if (!(r >= 0.0) || r > radius_ * (1.0 + 1e-14)) {
        std::ostringstream msg;
        msg << "r = " << r << " outside the well [0, " << radius_ << "]";
        throw DomainError(msg.str());
    }
    r = std::min(r, radius_);
    if (analytic_) {
        const double x = k_ * r;
        ChiValue out{0.0, 0.0};
        if (analytic_->A != 0.0) {
            const auto u = specfun::riccati_j(channel_.l, x);
            out.value += analytic_->A * u.value;
            out.derivative += analytic_->A * k_ * u.derivative;
        }
        if (analytic_->B != 0.0) {
            const auto v = specfun::riccati_n(channel_.l, x);
            out.value += analytic_->B * v.value;
            out.derivative += analytic_->B * k_ * v.derivative;
        }
        return out;
    }

    const auto& s = *sampled_;
    if (r < s.r.front()) {
        std::ostringstream msg;
        msg << "r = " << r << " below the first grid point " << s.r.front()
            << " of a sampled mode";
        throw DomainError(msg.str());
    }
    auto it = std::upper_bound(s.r.begin(), s.r.end(), r);
    std::size_t i = it == s.r.begin() ? 0 : static_cast<std::size_t>(it - s.r.begin()) - 1;
    i = std::min(i, s.r.size() - 2);
    const double h = s.r[i + 1] - s.r[i];
    const double t = (r - s.r[i]) / h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1;
    const double h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2;
    const double h11 = t3 - t2;
    const double value =
        h00 * s.chi[i] + h10 * h * s.dchi[i] + h01 * s.chi[i + 1] + h11 * h * s.dchi[i + 1];
    const double d00 = (6 * t2 - 6 * t) / h;
    const double d10 = 3 * t2 - 4 * t + 1;
    const double d01 = (-6 * t2 + 6 * t) / h;
    const double d11 = 3 * t2 - 2 * t;
    const double derivative =
        d00 * s.chi[i] + d10 * s.dchi[i] + d01 * s.chi[i + 1] + d11 * s.dchi[i + 1];
    return {value, derivative};
}

ChiValue RadialMode::at_origin() const
{
    if (sampled_)
        return {sampled_->chi.front(), sampled_->dchi.front()};
    return evaluate(0.0);
}

ChiValue RadialMode::at_edge() const
{
    if (sampled_)
        return {sampled_->chi.back(), sampled_->dchi.back()};
    return evaluate(radius_);
}

RadialMode RadialMode::scaled(double factor) const
{
    if (analytic_)
        return analytic(k_, channel_, radius_, analytic_->A * factor, analytic_->B * factor);
    auto chi = sampled_->chi;
    auto dchi = sampled_->dchi;
    for (auto& c : chi)
        c *= factor;
    for (auto& d : dchi)
        d *= factor;
    return sampled(k_, channel_, sampled_->r, std::move(chi), std::move(dchi));
}

ChiValue evaluate_chi(const RadialMode& mode, double r) { return mode.evaluate(r); }

namespace {

void require_compatible(const RadialMode& a, const RadialMode& b)
{
    if (std::abs(a.radius() - b.radius()) > 1e-12 * a.radius())
        throw DomainError("modes live on wells of different radius");
}

} // namespace

double inner_product(const RadialMode& a, const RadialMode& b)
{
    require_compatible(a, b);
    if (a.is_non_normalizable() || b.is_non_normalizable())
        throw NonNormalizableError(a.is_non_normalizable() ? a.l() : b.l(),
                                   "inner product with Neumann content for l > 0 diverges");
    const double radius = a.radius();
    const auto product = [&](double r) { return a.evaluate(r).value * b.evaluate(r).value; };
    if (a.is_analytic() && b.is_analytic())
        return quadrature::gauss_legendre_sum(product, 0.0, radius, 32, 16);

    // Exact for the cubic Hermite interpolant on each cell of the merged grid.
    std::vector<double> grid;
    for (const auto* m : {&a, &b})
        if (!m->is_analytic())
            grid.insert(grid.end(), m->sampled_form().r.begin(), m->sampled_form().r.end());
    const double lo = std::max(a.lower_limit(), b.lower_limit());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    grid.erase(std::remove_if(grid.begin(), grid.end(), [&](double r) { return r < lo; }),
               grid.end());
    const auto rule = quadrature::gauss_legendre_nodes(4);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        const double mid = 0.5 * (grid[i] + grid[i + 1]);
        const double half = 0.5 * (grid[i + 1] - grid[i]);
        double cell = 0.0;
        for (std::size_t q = 0; q < rule.nodes.size(); ++q)
            cell += rule.weights[q] * product(mid + half * rule.nodes[q]);
        total += half * cell;
    }
    return total;
}

namespace {

double leading_sign(const RadialMode& mode)
{
    if (mode.is_analytic()) {
        const auto& f = mode.analytic_form();
        if (mode.l() == 0 && f.B != 0.0)
            return f.B > 0.0 ? 1.0 : -1.0;
        return f.A >= 0.0 ? 1.0 : -1.0;
    }
    for (double c : mode.sampled_form().chi)
        if (c != 0.0)
            return c > 0.0 ? 1.0 : -1.0;
    return 1.0;
}

} // namespace

RadialMode normalize(const RadialMode& mode)
{
    if (mode.is_non_normalizable()) {
        std::ostringstream msg;
        msg << "mode is not normalizable: Neumann content with l = " << mode.l()
            << " makes |chi|^2 diverge as r^(" << -2 * mode.l() << ") at the origin";
        throw NonNormalizableError(mode.l(), msg.str());
    }
    const double norm2 = inner_product(mode, mode);
    if (!(norm2 > 0.0) || !std::isfinite(norm2))
        throw DomainError("cannot normalize a mode with zero or non-finite norm");
    return mode.scaled(leading_sign(mode) / std::sqrt(norm2));
}

int count_nodes(const RadialMode& mode)
{
    const double a = mode.radius();
    const double lo = std::max(1e-6 * a, mode.lower_limit());
    const double hi = a * (1.0 - 1e-6);
    const int points = 2000 + static_cast<int>(20.0 * mode.k() * a / std::numbers::pi);
    int nodes = 0;
    double last_sign = 0.0;
    for (int i = 0; i <= points; ++i) {
        const double r = lo + (hi - lo) * i / points;
        const double v = mode.evaluate(r).value;
        if (v == 0.0)
            continue;
        const double s = v > 0.0 ? 1.0 : -1.0;
        if (last_sign != 0.0 && s != last_sign)
            ++nodes;
        last_sign = s;
    }
    return nodes;
}

// ---------------------------------------------------------------------------
// Boundary families

std::string to_string(BoundaryFamily family)
{
    return family == BoundaryFamily::Conventional ? "conventional" : "huang-thomann";
}

BoundaryFamily boundary_family_from_string(const std::string& name)
{
    if (name == "conventional")
        return BoundaryFamily::Conventional;
    if (name == "huang-thomann" || name == "huang_thomann")
        return BoundaryFamily::HuangThomann;
    throw DomainError("unknown boundary-condition family '" + name + "'");
}

BoundaryCondition BoundaryCondition::conventional(QuantumChannel channel)
{
    return BoundaryCondition(BoundaryFamily::Conventional, channel);
}

BoundaryCondition BoundaryCondition::huang_thomann(QuantumChannel channel)
{
    if (channel.l > 0) {
        std::ostringstream msg;
        msg << "Huang-Thomann family requires l = 0: for l = " << channel.l
            << " the Neumann solution r*n_l(kr) is not square-integrable (|chi|^2 ~ r^("
            << -2 * channel.l << "))";
        throw NonNormalizableError(channel.l, msg.str());
    }
    return BoundaryCondition(BoundaryFamily::HuangThomann, channel);
}

BoundaryCondition BoundaryCondition::make(BoundaryFamily family, QuantumChannel channel)
{
    return family == BoundaryFamily::Conventional ? conventional(channel)
                                                  : huang_thomann(channel);
}

} // namespace radialwell
