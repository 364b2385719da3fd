#pragma once

#include <stdexcept>
#include <string>

namespace radialwell {

/// Argument outside the mathematical domain of an operation (r outside [0, a],
/// mismatched channels, x = 0 for a Neumann function, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Raised when ∫₀^a |χ|² dr diverges (Neumann content with l > 0).
class NonNormalizableError : public DomainError {
  public:
    NonNormalizableError(int l, const std::string& what)
        : DomainError(what), l_(l) {}

    int l() const { return l_; }
    /// Exponent p of the integrand |χ|² ~ r^p near the origin.
    int divergence_exponent() const { return -2 * l_; }

  private:
    int l_;
};

/// Potential outside the class with r·V(r) bounded near the origin.
class AdmissibilityError : public DomainError {
  public:
    using DomainError::DomainError;
};

/// Eigenvalue search ran out of k-range before enough roots were bracketed.
class BracketError : public std::runtime_error {
  public:
    BracketError(double k_lo, double k_hi, const std::string& what)
        : std::runtime_error(what), k_lo_(k_lo), k_hi_(k_hi) {}

    double k_lo() const { return k_lo_; }
    double k_hi() const { return k_hi_; }

  private:
    double k_lo_;
    double k_hi_;
};

/// The adaptive integrator could not make progress.
class StepSizeError : public std::runtime_error {
  public:
    StepSizeError(double min_step, const std::string& what)
        : std::runtime_error(what), min_step_(min_step) {}

    double min_step() const { return min_step_; }

  private:
    double min_step_;
};

/// Quadrature failed to converge; carries the last two estimates.
class QuadratureError : public std::runtime_error {
  public:
    QuadratureError(double previous, double last, const std::string& what)
        : std::runtime_error(what), previous_(previous), last_(last) {}

    double previous() const { return previous_; }
    double last() const { return last_; }

  private:
    double previous_;
    double last_;
};

} // namespace radialwell
