#pragma once

// Test-only reference computations. Nothing here calls into the library's
// solvers, so the checks built on them stay independent.

#include <functional>

namespace oracle {

/// First positive root of tan z = z, by plain bisection of sin z − z cos z on (π, 3π/2).
double first_root_tan_z_equals_z(double tol = 1e-15);

/// n-th eigenvalue E_n (n ≥ 1) of −χ″ + [l(l+1)/r² + V(r)]χ = Eχ with
/// χ(0) = χ(a) = 0 (units ħ²/2μ = 1), from the central finite-difference
/// tridiagonal matrix on `points` interior nodes, by Sturm-sequence bisection.
double fd_eigenvalue(const std::function<double(double)>& potential, int l, double radius,
                     int points, int n);

/// fd_eigenvalue on N and 2N+1 interior points (h halved), Richardson-extrapolated
/// assuming an O(h²) error.
double fd_eigenvalue_extrapolated(const std::function<double(double)>& potential, int l,
                                  double radius, int points, int n);

/// Central finite difference (f(x+h) − f(x−h)) / 2h.
double central_difference(const std::function<double(double)>& f, double x, double h = 1e-6);

} // namespace oracle
