#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace oracle {

double first_root_tan_z_equals_z(double tol)
{
    const auto f = [](double z) { return std::sin(z) - z * std::cos(z); };
    double lo = std::numbers::pi;
    double hi = 1.5 * std::numbers::pi;
    double f_lo = f(lo);
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi)
            break;
        const double f_mid = f(mid);
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

namespace {

// Number of eigenvalues of the symmetric tridiagonal (d, e) below x.
int sturm_count(const std::vector<double>& d, const std::vector<double>& e, double x)
{
    int count = 0;
    double q = 1.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const double off = i == 0 ? 0.0 : e[i - 1] * e[i - 1];
        q = d[i] - x - (i == 0 ? 0.0 : off / q);
        if (q == 0.0)
            q = 1e-300;
        if (q < 0.0)
            ++count;
    }
    return count;
}

} // namespace

double fd_eigenvalue(const std::function<double(double)>& potential, int l, double radius,
                     int points, int n)
{
    const double h = radius / (points + 1);
    std::vector<double> d(points);
    std::vector<double> e(points - 1, -1.0 / (h * h));
    double lo = 0.0;
    double hi = 0.0;
    for (int i = 0; i < points; ++i) {
        const double r = (i + 1) * h;
        d[i] = 2.0 / (h * h) + l * (l + 1.0) / (r * r) + potential(r);
        lo = std::min(lo, d[i] - 2.0 / (h * h));
        hi = std::max(hi, d[i] + 2.0 / (h * h));
    }
    // Gershgorin bounds, then bisection on the Sturm count.
    for (int iter = 0; iter < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(d, e, mid) >= n)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

double fd_eigenvalue_extrapolated(const std::function<double(double)>& potential, int l,
                                  double radius, int points, int n)
{
    const double coarse = fd_eigenvalue(potential, l, radius, points, n);
    const double fine = fd_eigenvalue(potential, l, radius, 2 * points + 1, n);
    return (4.0 * fine - coarse) / 3.0;
}

double central_difference(const std::function<double(double)>& f, double x, double h)
{
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

} // namespace oracle
