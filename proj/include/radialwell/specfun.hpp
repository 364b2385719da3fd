#pragma once

namespace radialwell::specfun {

/// Spherical Bessel function j_l(x), x ≥ 0.
///
/// j₀ uses the closed form; higher orders use Miller's downward recurrence
/// (normalised against j₀ or j₁) for x < l + 10 and the upward recurrence
/// otherwise. A three-term power series covers x < 1e-3.
double spherical_j(int l, double x);

/// Spherical Neumann function n_l(x), x > 0, by upward recurrence from
/// n₀ = −cos x / x. Throws DomainError at x = 0 where n_l ~ x^(−l−1).
double spherical_n(int l, double x);

/// dj_l/dx = j_{l−1} − (l+1)/x · j_l, with j₀′ = −j₁.
double spherical_j_derivative(int l, double x);

/// dn_l/dx = n_{l−1} − (l+1)/x · n_l, with n₀′ = −n₁.
double spherical_n_derivative(int l, double x);

/// Riccati–Bessel pair u(x) = x·j_l(x) and u′(x).
struct RiccatiValue {
    double value;
    double derivative;
};

RiccatiValue riccati_j(int l, double x);

/// v(x) = −x·n_l(x) and v′(x); v = cos x for l = 0.
RiccatiValue riccati_n(int l, double x);

} // namespace radialwell::specfun
