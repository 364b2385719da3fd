#include "radialwell/eigensolver.hpp"
#include "radialwell/errors.hpp"
#include "radialwell/hermiticity.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace radialwell;

namespace {
const double pi = std::numbers::pi;
const double sqrt2 = std::sqrt(2.0);

RadialMode sine(double k, double a = 1.0) { return RadialMode::analytic(k, QuantumChannel(0), a, 1.0); }
RadialMode cosine(double k, double a = 1.0)
{
    return RadialMode::analytic(k, QuantumChannel(0), a, 0.0, 1.0);
}

std::vector<RadialMode> modes_of(int l, BoundaryFamily family, int n)
{
    return spectrum_modes(
        well_spectrum(PotentialSpec::zero(1.0), QuantumChannel(l), family, n));
}
}

TEST_CASE("wronskian_defect: eigenstates of either family")
{
    CHECK(std::abs(wronskian_defect(normalize(sine(pi)), normalize(sine(2 * pi)))) < 1e-12);
    CHECK(std::abs(wronskian_defect(normalize(cosine(pi / 2)), normalize(cosine(3 * pi / 2)))) <
          1e-12);
}

TEST_CASE("wronskian_defect: closed form for two sine modes")
{
    // [χ₁χ₂′ − χ₁′χ₂] at r = 1; both vanish at the origin.
    const double k1 = pi;
    const double k2 = 1.3 * pi;
    const double expected = std::sin(k1) * k2 * std::cos(k2) - k1 * std::cos(k1) * std::sin(k2);
    const auto w = wronskian_defect(sine(k1), sine(k2));
    CHECK(w.real() == doctest::Approx(expected).epsilon(1e-12));
    CHECK(w.real() == doctest::Approx(pi * std::sin(1.3 * pi)).epsilon(1e-12));
    CHECK(w.imag() == 0.0);
}

TEST_CASE("wronskian_defect: selection rule and radius checks")
{
    const auto l0 = sine(pi);
    const auto l1 = RadialMode::analytic(4.49, QuantumChannel(1), 1.0, 1.0);
    CHECK_THROWS_AS(wronskian_defect(l0, l1), DomainError);
    CHECK_THROWS_AS(pr_defect(l0, l1), DomainError);
    CHECK_THROWS_AS(wronskian_defect(l0, sine(pi, 2.0)), DomainError);
}

TEST_CASE("pr_defect: examples")
{
    CHECK(std::abs(pr_defect(normalize(sine(pi)), normalize(sine(3 * pi)))) < 1e-12);

    const auto ht = normalize(cosine(3 * pi / 2));
    const auto d = pr_defect(ht, ht);
    CHECK(d.real() == doctest::Approx(0.0));
    CHECK(d.imag() == doctest::Approx(2.0).epsilon(1e-12));

    const auto mixed = pr_defect(normalize(sine(pi)), ht);
    CHECK(std::abs(mixed) < 1e-12);

    CHECK(pr_defect(ht, ht, Units(3.0, 0.5)).imag() == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("pr_defect: hermitian-conjugation antisymmetry")
{
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> k(0.5, 15.0);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int trial = 0; trial < 50; ++trial) {
        const auto m1 = normalize(RadialMode::analytic(k(rng), QuantumChannel(0), 1.0, coef(rng), coef(rng)));
        const auto m2 = normalize(RadialMode::analytic(k(rng), QuantumChannel(0), 1.0, coef(rng), coef(rng)));
        const auto d12 = pr_defect(m1, m2);
        const auto d21 = pr_defect(m2, m1);
        CHECK(std::abs(d12 + std::conj(d21)) <= 1e-12);
    }
}

TEST_CASE("verify_eq5_by_quadrature: examples")
{
    CHECK(verify_eq5_by_quadrature(normalize(sine(pi)), normalize(sine(2 * pi))) <= 1e-10);
    const auto ht = normalize(cosine(3 * pi / 2));
    CHECK(verify_eq5_by_quadrature(ht, ht) <= 1e-10);
    const auto l1 = modes_of(1, BoundaryFamily::Conventional, 2);
    CHECK(verify_eq5_by_quadrature(l1[0], l1[1]) <= 1e-10);
}

TEST_CASE("verify_eq5_by_quadrature: identity holds for arbitrary mode pairs")
{
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> l_dist(0, 5);
    std::uniform_real_distribution<double> k(0.3, 25.0);
    std::uniform_real_distribution<double> coef(-3.0, 3.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int l = l_dist(rng);
        const auto make = [&] {
            // Neumann content is only normalizable for l = 0.
            const double B = l == 0 ? coef(rng) : 0.0;
            return normalize(RadialMode::analytic(k(rng), QuantumChannel(l), 1.0, 1.0 + coef(rng), B));
        };
        const auto m1 = make();
        const auto m2 = make();
        CHECK(verify_eq5_by_quadrature(m1, m2) <= 1e-8);
    }
}

TEST_CASE("verify_eq5_by_quadrature: sampled modes")
{
    const auto sol = shooting_solve_with_modes(PotentialSpec::coulomb(1.0, 1.0), QuantumChannel(0), {}, 2);
    CHECK(verify_eq5_by_quadrature(sol.modes[0], sol.modes[1]) <= 1e-8);
}

TEST_CASE("verify_eq5_by_quadrature: unresolved integrand reports both estimates")
{
    const auto fast = normalize(sine(400.0));
    try {
        verify_eq5_by_quadrature(fast, normalize(sine(390.0)), 1);
        FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
        CHECK(e.previous() != e.last());
        CHECK(std::string(e.what()).find("panel doubling") != std::string::npos);
    }
    CHECK_THROWS_AS(verify_eq5_by_quadrature(fast, fast, 0), DomainError);
}

TEST_CASE("audit: examples")
{
    const auto s = audit(sine(pi));
    CHECK(s.verdict == Verdict::Pass);
    REQUIRE(s.endpoint_magnitudes.size() == 1);
    CHECK(s.endpoint_magnitudes[0].at_origin == 0.0);
    CHECK(s.endpoint_magnitudes[0].at_edge < 1e-12);

    const auto c = audit(cosine(3 * pi / 2).scaled(5.0));
    CHECK(c.verdict == Verdict::FailEq6);
    CHECK(c.endpoint_magnitudes[0].at_origin == doctest::Approx(sqrt2).epsilon(1e-12));
    CHECK(c.endpoint_magnitudes[0].at_edge < 1e-12);
    CHECK(c.pr_defect.imag() == doctest::Approx(2.0).epsilon(1e-12));

    try {
        audit(RadialMode::analytic(5.0, QuantumChannel(2), 1.0, 0.0, 1.0));
        FAIL("expected NonNormalizableError");
    } catch (const NonNormalizableError& e) {
        CHECK(e.l() == 2);
        CHECK(e.divergence_exponent() == -4);
    }
}

TEST_CASE("audit: Wronskian failure takes precedence")
{
    const auto r = audit_pair(sine(pi), sine(1.3 * pi));
    CHECK(r.verdict == Verdict::FailEq3);
    CHECK(r.endpoint_magnitudes.size() == 2);
    CHECK(to_string(r.verdict) == "FAIL_EQ3");
    CHECK(to_string(Verdict::Pass) == "PASS");
    CHECK(to_string(Verdict::FailEq6) == "FAIL_EQ6");
}

TEST_CASE("audit: verdict follows the thresholds")
{
    // A non-eigen sine mode: |χ(0)| = 0 but |χ(a)| ≠ 0.
    const auto off = sine(0.9 * pi);
    const auto r = audit(off);
    CHECK(r.verdict == Verdict::FailEq6);
    AuditTolerances loose;
    loose.verdict = 10.0;
    CHECK(audit(off, {}, loose).verdict == Verdict::Pass);
    CHECK(audit(off, {}, loose).tolerances.verdict == 10.0);
}

TEST_CASE("conventional eigenstates pass, Huang-Thomann states fail the endpoint condition")
{
    for (int l = 0; l <= 5; ++l) {
        const auto modes = modes_of(l, BoundaryFamily::Conventional, 5);
        for (std::size_t i = 0; i < modes.size(); ++i) {
            const auto r = audit(modes[i]);
            CHECK(r.verdict == Verdict::Pass);
            CHECK(std::abs(r.endpoint_magnitudes[0].at_origin - r.endpoint_magnitudes[0].at_edge) <=
                  1e-10);
            for (std::size_t j = 0; j < modes.size(); ++j) {
                CHECK(std::abs(wronskian_defect(modes[i], modes[j])) <= 1e-10);
                CHECK(std::abs(pr_defect(modes[i], modes[j])) <= 1e-10);
            }
        }
    }
    for (const auto& m : modes_of(0, BoundaryFamily::HuangThomann, 5)) {
        const auto r = audit(m);
        CHECK(r.verdict == Verdict::FailEq6);
        CHECK(std::abs(r.endpoint_magnitudes[0].at_origin - r.endpoint_magnitudes[0].at_edge) ==
              doctest::Approx(sqrt2).epsilon(1e-10));
        CHECK(std::abs(r.wronskian_defect) <= 1e-10);
    }
}

TEST_CASE("audit: shooting eigenstates of a Coulomb well pass")
{
    const auto sol = shooting_solve_with_modes(PotentialSpec::coulomb(1.0, 1.0), QuantumChannel(1), {}, 2);
    for (const auto& m : sol.modes)
        CHECK(audit(m).verdict == Verdict::Pass);
}
