#include "oracles.hpp"
#include "radialwell/errors.hpp"
#include "radialwell/radial_model.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace radialwell;

namespace {
const double pi = std::numbers::pi;
const double sqrt2 = std::sqrt(2.0);
}

TEST_CASE("units")
{
    const Units u;
    CHECK(u.energy_from_k(3.0) == 9.0);
    CHECK(Units(2.0, 1.0).energy_from_k(1.0) == 2.0);
    CHECK(u.k_from_energy(u.energy_from_k(2.5)) == doctest::Approx(2.5));
    CHECK_THROWS_AS(Units(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(Units(1.0, -1.0), DomainError);
    double prev = -1.0;
    for (double k = 0.0; k < 10.0; k += 0.5) {
        CHECK(u.energy_from_k(k) > prev);
        prev = u.energy_from_k(k);
    }
}

TEST_CASE("evaluate_chi examples")
{
    const auto sin_mode = RadialMode::analytic(pi, QuantumChannel(0), 1.0, 1.0, 0.0);
    CHECK(std::abs(evaluate_chi(sin_mode, 1.0).value) <= 1e-15);

    const auto cos_mode = RadialMode::analytic(2.7, QuantumChannel(0), 1.0, 0.0, 1.0);
    CHECK(evaluate_chi(cos_mode, 0.0).value == 1.0);
    CHECK(evaluate_chi(cos_mode, 1e-9).value == doctest::Approx(1.0));

    const auto p_mode = RadialMode::analytic(4.493409457909064, QuantumChannel(1), 1.0, 1.0, 0.0);
    CHECK(std::abs(evaluate_chi(p_mode, 1.0).value) <= 1e-12);

    // l = 0 is exactly A sin(kr) + B cos(kr).
    const auto mixed = RadialMode::analytic(1.7, QuantumChannel(0), 2.0, 0.3, -1.2);
    for (double r : {0.0, 0.4, 1.1, 2.0}) {
        CHECK(mixed.evaluate(r).value == 0.3 * std::sin(1.7 * r) + -1.2 * std::cos(1.7 * r));
    }
}

TEST_CASE("evaluate_chi domain errors")
{
    const auto m = RadialMode::analytic(1.0, QuantumChannel(0), 1.0, 1.0);
    CHECK_THROWS_AS(m.evaluate(-0.1), DomainError);
    CHECK_THROWS_AS(m.evaluate(1.5), DomainError);
    const auto s = RadialMode::sampled(1.0, QuantumChannel(0), {1e-7, 0.5, 1.0}, {0.0, 0.5, 0.8});
    CHECK_THROWS_AS(s.evaluate(1e-8), DomainError);
    CHECK_THROWS_AS(RadialMode::sampled(1.0, QuantumChannel(0), {0.1, 0.5, 1.0}, {0, 1, 2}),
                    DomainError);
    CHECK_THROWS_AS(RadialMode::sampled(1.0, QuantumChannel(0), {0.0, 0.5, 0.4}, {0, 1, 2}),
                    DomainError);
}

TEST_CASE("analytic modes satisfy the radial equation")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> order(0, 5);
    std::uniform_real_distribution<double> kd(0.5, 5.0);
    std::uniform_real_distribution<double> rd(0.05, 0.99);
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const int l = order(rng);
        const double k = kd(rng);
        const double r = rd(rng);
        const double B = l == 0 ? amp(rng) : 0.0;
        const auto m = RadialMode::analytic(k, QuantumChannel(l), 1.0, amp(rng), B);
        const double h = 1e-3;
        const auto d = [&](double x) { return m.evaluate(x).derivative; };
        const double chi2 = (-d(r + 2 * h) + 8 * d(r + h) - 8 * d(r - h) + d(r - 2 * h)) / (12 * h);
        const double chi = m.evaluate(r).value;
        const double residual = chi2 + (k * k - l * (l + 1.0) / (r * r)) * chi;
        CHECK_MESSAGE(std::abs(residual) <= 1e-9 * (1.0 + std::abs(chi2)), "l=", l, " k=", k,
                      " r=", r);
    }
}

TEST_CASE("normalize examples")
{
    const auto s = normalize(RadialMode::analytic(pi, QuantumChannel(0), 1.0, 1.0, 0.0));
    CHECK(s.analytic_form().A == doctest::Approx(sqrt2).epsilon(1e-13));

    const auto c = normalize(RadialMode::analytic(1.5 * pi, QuantumChannel(0), 1.0, 0.0, 1.0));
    CHECK(c.analytic_form().B == doctest::Approx(sqrt2).epsilon(1e-13));

    try {
        normalize(RadialMode::analytic(2.0, QuantumChannel(1), 1.0, 0.0, 1.0));
        FAIL("expected NonNormalizableError");
    } catch (const NonNormalizableError& e) {
        CHECK(e.l() == 1);
        CHECK(e.divergence_exponent() == -2);
        CHECK(std::string(e.what()).find("r^(-2)") != std::string::npos);
    }
}

TEST_CASE("normalize fixes the phase and is idempotent")
{
    const auto neg = normalize(RadialMode::analytic(2.0 * pi, QuantumChannel(2), 1.0, -3.0));
    CHECK(neg.analytic_form().A > 0.0);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> kd(0.5, 15.0);
    for (int i = 0; i < 20; ++i) {
        const auto m = RadialMode::analytic(kd(rng), QuantumChannel(i % 4), 1.3, 0.7 - 0.1 * i,
                                            i % 4 == 0 ? 0.4 : 0.0);
        const auto once = normalize(m);
        const auto twice = normalize(once);
        CHECK(std::abs(twice.analytic_form().A - once.analytic_form().A) <= 1e-12);
        CHECK(std::abs(twice.analytic_form().B - once.analytic_form().B) <= 1e-12);
        CHECK(inner_product(once, once) == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("Neumann content with l > 0 diverges as the lower limit shrinks")
{
    // ∫_δ^1 |r n_1(kr)|² dr grows like 1/δ.
    const auto m = RadialMode::analytic(1.0, QuantumChannel(1), 1.0, 0.0, 1.0);
    CHECK(m.is_non_normalizable());
    double prev = 0.0;
    for (double delta : {1e-2, 1e-3, 1e-4}) {
        double sum = 0.0;
        const int n = 20000;
        // Logarithmic midpoint rule on [δ, 1].
        for (int i = 0; i < n; ++i) {
            const double t0 = std::log(delta) + (0.0 - std::log(delta)) * i / n;
            const double t1 = std::log(delta) + (0.0 - std::log(delta)) * (i + 1) / n;
            const double r = std::exp(0.5 * (t0 + t1));
            const double chi = m.evaluate(r).value;
            sum += chi * chi * r * (t1 - t0);
        }
        if (prev > 0.0)
            CHECK(sum / prev == doctest::Approx(10.0).epsilon(0.05));
        prev = sum;
    }
}

TEST_CASE("sampled modes: Hermite interpolation and finite-difference derivatives")
{
    std::vector<double> r;
    std::vector<double> chi;
    std::vector<double> dchi;
    const int n = 400;
    for (int i = 0; i <= n; ++i) {
        const double x = static_cast<double>(i) / n;
        r.push_back(x);
        chi.push_back(std::sin(pi * x));
        dchi.push_back(pi * std::cos(pi * x));
    }
    const auto with_d = RadialMode::sampled(pi, QuantumChannel(0), r, chi, dchi);
    const auto without_d = RadialMode::sampled(pi, QuantumChannel(0), r, chi);
    for (double x : {0.0013, 0.25, 0.5, 0.77, 0.999}) {
        CHECK(std::abs(with_d.evaluate(x).value - std::sin(pi * x)) < 1e-10);
        CHECK(std::abs(with_d.evaluate(x).derivative - pi * std::cos(pi * x)) < 1e-6);
        CHECK(std::abs(without_d.evaluate(x).value - std::sin(pi * x)) < 1e-9);
    }
    // Fourth-order one-sided differences at the grid ends.
    CHECK(std::abs(without_d.sampled_form().dchi.front() - pi) < 1e-8);
    CHECK(std::abs(without_d.sampled_form().dchi.back() + pi) < 1e-8);
    const auto norm = normalize(with_d);
    CHECK(inner_product(norm, norm) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(norm.evaluate(0.5).value == doctest::Approx(sqrt2).epsilon(1e-9));
}

TEST_CASE("count_nodes uses strict interior sign changes")
{
    for (int n = 1; n <= 6; ++n) {
        const auto m = RadialMode::analytic(n * pi, QuantumChannel(0), 1.0, 1.0);
        CHECK(count_nodes(m) == n - 1);
    }
    const auto c = RadialMode::analytic(2.5 * pi, QuantumChannel(0), 1.0, 0.0, 1.0);
    CHECK(count_nodes(c) == 2);
}

TEST_CASE("potentials")
{
    const auto z = PotentialSpec::zero(2.0);
    CHECK(z(0.5) == 0.0);
    CHECK(z.origin_residue() == 0.0);
    const auto c = PotentialSpec::coulomb(1.0, 2.0);
    CHECK(c(0.5) == -4.0);
    CHECK(c.origin_residue() == -2.0);
    CHECK_THROWS_AS(PotentialSpec::zero(0.0), DomainError);

    // Samples of −1/r are reproduced exactly: r·V is constant.
    const auto t = PotentialSpec::tabulated(1.0, {{0.1, -10.0}, {0.5, -2.0}, {1.0, -1.0}});
    CHECK(t(0.3) == doctest::Approx(-1.0 / 0.3));
    CHECK(t(1e-6) == doctest::Approx(-1e6));
    CHECK(t.origin_residue() == doctest::Approx(-1.0));
    for (double r = 1e-9; r <= 1.0; r *= 3.0)
        CHECK(std::abs(t.r_times_v(r)) <= 1.0 + 1e-12);
    CHECK_NOTHROW(check_admissible(t));

    // r·V interpolates linearly in ln r between samples.
    const auto lin = PotentialSpec::tabulated(1.0, {{0.1, 1.0}, {1.0, 5.0}});
    const double mid = std::sqrt(0.1);
    CHECK(lin.r_times_v(mid) == doctest::Approx(0.5 * (0.1 + 5.0)));

    CHECK_THROWS_AS(PotentialSpec::tabulated(1.0, {{0.5, 1.0}, {0.2, 1.0}}), DomainError);
    CHECK_THROWS_AS(PotentialSpec::tabulated(1.0, {{0.0, 1.0}, {0.2, 1.0}}), DomainError);
    CHECK_THROWS_AS(PotentialSpec::tabulated(1.0, {{0.5, 1.0}, {2.0, 1.0}}), DomainError);

    // V ~ r⁻² is outside the admissible class.
    const auto steep = PotentialSpec::tabulated(1.0, {{0.01, -1e4}, {0.02, -2500.0}, {1.0, -1.0}});
    CHECK_THROWS_AS(check_admissible(steep), AdmissibilityError);
}

TEST_CASE("boundary-condition families")
{
    CHECK(BoundaryCondition::huang_thomann(QuantumChannel(0)).family() == BoundaryFamily::HuangThomann);
    CHECK_THROWS_AS(BoundaryCondition::huang_thomann(QuantumChannel(1)), NonNormalizableError);
    CHECK(boundary_family_from_string(to_string(BoundaryFamily::HuangThomann)) ==
          BoundaryFamily::HuangThomann);
    CHECK_THROWS_AS(boundary_family_from_string("robin"), DomainError);
    CHECK_THROWS_AS(QuantumChannel(-1), DomainError);
}
