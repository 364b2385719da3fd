#include "oracles.hpp"
#include "radialwell/errors.hpp"
#include "radialwell/specfun.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/bessel_prime.hpp>
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace radialwell;
using namespace radialwell::specfun;

namespace {
const double pi = std::numbers::pi;
}

TEST_CASE("spherical_j examples")
{
    CHECK(std::abs(spherical_j(0, pi)) <= 1e-15);
    CHECK(spherical_j(0, 0.0) == 1.0);
    CHECK(std::abs(spherical_j(1, 4.493409457909064)) <= 1e-12);
    CHECK(spherical_j(5, 0.0) == 0.0);
}

TEST_CASE("spherical_n examples")
{
    CHECK(std::abs(spherical_n(0, pi / 2)) <= 1e-15);
    CHECK(spherical_n(0, pi) == doctest::Approx(1.0 / pi).epsilon(1e-15));
    // n₁(x) = −cos x/x² − sin x/x, evaluated at x = 1.
    const double closed = -std::cos(1.0) - std::sin(1.0);
    CHECK(std::abs(spherical_n(1, 1.0) - closed) <= 1e-14);
    CHECK(spherical_n(1, 1.0) == doctest::Approx(-1.38177329068).epsilon(1e-11));
    CHECK_THROWS_AS(spherical_n(2, 0.0), DomainError);
}

TEST_CASE("derivative examples")
{
    CHECK(spherical_j_derivative(0, 0.0) == 0.0);
    CHECK(spherical_j_derivative(0, pi / 2) == doctest::Approx(-4.0 / (pi * pi)).epsilon(1e-14));
    const double fd = oracle::central_difference([](double x) { return spherical_n(0, x); }, pi);
    CHECK(std::abs(spherical_n_derivative(0, pi) - fd) <= 1e-8);
    CHECK(spherical_j_derivative(1, 0.0) == doctest::Approx(1.0 / 3.0));
    CHECK_THROWS_AS(spherical_n_derivative(0, 0.0), DomainError);
}

TEST_CASE("agreement with Boost.Math on a dense grid")
{
    for (int l = 0; l <= 20; ++l) {
        for (double x = 0.0005; x <= 60.0; x *= 1.07) {
            const double ref_j = boost::math::sph_bessel(l, x);
            const double ref_n = boost::math::sph_neumann(l, x);
            const double envelope = std::max(std::abs(ref_j), 1e-300);
            // Relative where the function is not near a zero, absolute against 1/x otherwise.
            const double tol_j = 1e-12 * std::max(envelope, std::min(1.0, 1.0 / x));
            CHECK_MESSAGE(std::abs(spherical_j(l, x) - ref_j) <= tol_j, "l=", l, " x=", x);
            if (std::isfinite(ref_n) && std::abs(ref_n) < 1e250) {
                const double tol_n = 1e-11 * std::max(std::abs(ref_n), std::min(1.0, 1.0 / x));
                CHECK_MESSAGE(std::abs(spherical_n(l, x) - ref_n) <= tol_n, "l=", l, " x=", x);
            }
        }
    }
}

TEST_CASE("three-term recurrence holds for both families")
{
    for (int l = 1; l <= 20; ++l) {
        for (double x = 0.5; x <= 50.0; x += 0.37) {
            for (int family = 0; family < 2; ++family) {
                const auto f = [&](int order) {
                    return family == 0 ? spherical_j(order, x) : spherical_n(order, x);
                };
                const double lhs = f(l - 1) + f(l + 1);
                const double rhs = (2.0 * l + 1.0) / x * f(l);
                const double scale = std::max({std::abs(f(l - 1)), std::abs(f(l + 1)), std::abs(rhs)});
                CHECK_MESSAGE(std::abs(lhs - rhs) <= 1e-10 * scale, "family=", family, " l=", l,
                              " x=", x);
            }
        }
    }
}

TEST_CASE("Wronskian j n' - j' n = 1/x^2")
{
    for (int l = 0; l <= 20; ++l) {
        for (double x = 0.5; x <= 50.0; x += 0.41) {
            const double w = spherical_j(l, x) * spherical_n_derivative(l, x) -
                             spherical_j_derivative(l, x) * spherical_n(l, x);
            CHECK_MESSAGE(std::abs(w * x * x - 1.0) <= 1e-10, "l=", l, " x=", x);
        }
    }
}

TEST_CASE("derivatives match central finite differences")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> order(0, 10);
    std::uniform_real_distribution<double> arg(0.1, 30.0);
    for (int trial = 0; trial < 300; ++trial) {
        const int l = order(rng);
        const double x = arg(rng);
        const double fd_j = oracle::central_difference([&](double t) { return spherical_j(l, t); }, x);
        CHECK(std::abs(spherical_j_derivative(l, x) - fd_j) <= 1e-7);
        if (std::abs(spherical_n(l, x)) < 1e3) {
            const double fd_n =
                oracle::central_difference([&](double t) { return spherical_n(l, t); }, x);
            CHECK(std::abs(spherical_n_derivative(l, x) - fd_n) <= 1e-7 * std::max(1.0, std::abs(fd_n)));
        }
    }
}

TEST_CASE("series branch joins the recurrence branch continuously")
{
    for (int l = 0; l <= 6; ++l) {
        for (double x : {0.999e-3, 1.001e-3}) {
            const double ref = boost::math::sph_bessel(l, x);
            CHECK(std::abs(spherical_j(l, x) - ref) <= 1e-13 * std::abs(ref));
            const double ref_d = boost::math::sph_bessel_prime(l, x);
            CHECK(std::abs(spherical_j_derivative(l, x) - ref_d) <= 1e-12 * std::abs(ref_d));
        }
    }
}

TEST_CASE("Riccati forms reduce to sin and cos for l = 0")
{
    for (double x : {0.0, 0.3, 2.0, 17.0}) {
        CHECK(riccati_j(0, x).value == std::sin(x));
        CHECK(riccati_n(0, x).value == std::cos(x));
        CHECK(riccati_n(0, x).derivative == -std::sin(x));
    }
    CHECK_THROWS_AS(riccati_n(1, 0.0), DomainError);
    CHECK(riccati_j(3, 0.0).value == 0.0);
}

TEST_CASE("invalid arguments")
{
    CHECK_THROWS_AS(spherical_j(-1, 1.0), DomainError);
    CHECK_THROWS_AS(spherical_j(0, -1.0), DomainError);
    CHECK_THROWS_AS(spherical_n(0, std::nan("")), DomainError);
}
