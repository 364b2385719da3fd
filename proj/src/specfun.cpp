#include "radialwell/specfun.hpp"

#include "radialwell/errors.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace radialwell::specfun {

namespace {

constexpr double kSeriesCutoff = 1e-3;

void check_order(int l)
{
    if (l < 0)
        throw DomainError("spherical Bessel order must be non-negative, got " + std::to_string(l));
}

void check_argument(double x)
{
    if (!(x >= 0.0) || !std::isfinite(x))
        throw DomainError("spherical Bessel argument must be finite and non-negative");
}

// x^l / (2l+1)!!, accumulated factor by factor so large l underflows gracefully.
double leading_power(int l, double x)
{
    double c = 1.0;
    for (int i = 1; i <= l; ++i)
        c *= x / (2.0 * i + 1.0);
    return c;
}

double j_series(int l, double x)
{
    const double x2 = x * x;
    const double a = 1.0 / (2.0 * (2 * l + 3));
    const double b = 1.0 / (8.0 * (2 * l + 3) * (2 * l + 5));
    return leading_power(l, x) * (1.0 - a * x2 + b * x2 * x2);
}

double j_series_derivative(int l, double x)
{
    const double x2 = x * x;
    const double a = 1.0 / (2.0 * (2 * l + 3));
    const double b = 1.0 / (8.0 * (2 * l + 3) * (2 * l + 5));
    // d/dx [c x^l (1 − a x² + b x⁴)] with c = 1/(2l+1)!!.
    double c = 1.0;
    for (int i = 1; i <= l; ++i)
        c /= (2.0 * i + 1.0);
    const double xl1 = l >= 1 ? std::pow(x, l - 1) : 0.0;
    const double xl = std::pow(x, l);
    return c * (l * xl1 - a * (l + 2) * xl * x + b * (l + 4) * xl * x2 * x);
}

double j0_closed(double x) { return std::sin(x) / x; }

double j1_closed(double x) { return std::sin(x) / (x * x) - std::cos(x) / x; }

int miller_start(int l, double x)
{
    const int base = l + std::max(20, static_cast<int>(std::ceil(x)));
    const double scale = std::max(static_cast<double>(l), x);
    return base + static_cast<int>(std::ceil(std::sqrt(160.0 * scale)));
}

// j_l for 1 ≤ l, x ≥ kSeriesCutoff, x < l + 10.
double j_miller(int l, double x)
{
    const int start = miller_start(l, x);
    double f_next = 0.0;
    double f = 1e-30;
    double f_l = 0.0;
    for (int i = start; i >= 1; --i) {
        const double f_prev = (2.0 * i + 1.0) / x * f - f_next;
        f_next = f;
        f = f_prev;
        // f now holds order i − 1, f_next holds order i.
        if (i - 1 == l)
            f_l = f;
        if (std::abs(f) > 1e250) {
            f *= 1e-250;
            f_next *= 1e-250;
            f_l *= 1e-250;
        }
    }
    const double f0 = f;
    const double f1 = f_next;
    const double j0 = j0_closed(x);
    const double j1 = j1_closed(x);
    // Normalise against whichever closed form is further from a zero.
    if (std::abs(j0) >= std::abs(j1))
        return f_l * (j0 / f0);
    return f_l * (j1 / f1);
}

double j_upward(int l, double x)
{
    double prev = j0_closed(x);
    double cur = j1_closed(x);
    for (int i = 1; i < l; ++i) {
        const double next = (2.0 * i + 1.0) / x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace

double spherical_j(int l, double x)
{
    check_order(l);
    check_argument(x);
    if (x < kSeriesCutoff)
        return j_series(l, x);
    if (l == 0)
        return j0_closed(x);
    if (l == 1 && x >= 1.0)
        return j1_closed(x);
    if (x < l + 10.0)
        return j_miller(l, x);
    return j_upward(l, x);
}

double spherical_n(int l, double x)
{
    check_order(l);
    check_argument(x);
    if (x == 0.0)
        throw DomainError("spherical Neumann function n_" + std::to_string(l) +
                          " diverges at x = 0 as x^(" + std::to_string(-l - 1) + ")");
    double prev = -std::cos(x) / x;
    if (l == 0)
        return prev;
    double cur = -std::cos(x) / (x * x) - std::sin(x) / x;
    for (int i = 1; i < l; ++i) {
        const double next = (2.0 * i + 1.0) / x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double spherical_j_derivative(int l, double x)
{
    check_order(l);
    check_argument(x);
    if (x < kSeriesCutoff)
        return j_series_derivative(l, x);
    if (l == 0)
        return -spherical_j(1, x);
    return spherical_j(l - 1, x) - (l + 1.0) / x * spherical_j(l, x);
}

double spherical_n_derivative(int l, double x)
{
    check_order(l);
    check_argument(x);
    if (x == 0.0)
        throw DomainError("derivative of n_" + std::to_string(l) + " diverges at x = 0 as x^(" +
                          std::to_string(-l - 2) + ")");
    if (l == 0)
        return -spherical_n(1, x);
    return spherical_n(l - 1, x) - (l + 1.0) / x * spherical_n(l, x);
}

RiccatiValue riccati_j(int l, double x)
{
    check_order(l);
    check_argument(x);
    if (l == 0)
        return {std::sin(x), std::cos(x)};
    return {x * spherical_j(l, x), spherical_j(l, x) + x * spherical_j_derivative(l, x)};
}

RiccatiValue riccati_n(int l, double x)
{
    check_order(l);
    check_argument(x);
    if (l == 0)
        return {std::cos(x), -std::sin(x)};
    if (x == 0.0)
        throw DomainError("Riccati-Neumann function of order " + std::to_string(l) +
                          " diverges at the origin as r^(" + std::to_string(-l) + ")");
    return {-x * spherical_n(l, x), -spherical_n(l, x) - x * spherical_n_derivative(l, x)};
}

} // namespace radialwell::specfun
