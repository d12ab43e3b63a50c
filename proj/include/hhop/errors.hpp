#pragma once

#include <stdexcept>
#include <string>

namespace hhop {

// Raised when a spectrum leaves the domain of a scalar function by more than
// the clamping margin. Carries the offending eigenvalue.
class SpectrumDomainError : public std::runtime_error {
public:
    SpectrumDomainError(double eigenvalue, double lo, double hi)
        : std::runtime_error("eigenvalue " + std::to_string(eigenvalue) +
                             " outside function domain [" + std::to_string(lo) +
                             ", " + std::to_string(hi) + "]"),
          eigenvalue_(eigenvalue) {}

    double eigenvalue() const { return eigenvalue_; }

private:
    double eigenvalue_;
};

// Raised when an argument of an eta map lies in no component of its domain.
class EtaDomainError : public std::runtime_error {
public:
    explicit EtaDomainError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when the Jacobi sweep cap is reached before the off-diagonal mass
// drops below the convergence threshold. Carries the final residual.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what + " (off-diagonal residual " +
                             std::to_string(residual) + ")"),
          residual_(residual) {}

    double residual() const { return residual_; }

private:
    double residual_;
};

} // namespace hhop
