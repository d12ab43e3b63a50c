#pragma once

#include "hhop/quadrature.hpp"
#include "hhop/scalar_function.hpp"

#include <cmath>
#include <stdexcept>

namespace hhop {

// Scalar Hermite-Hadamard triple on [a, b]:
//   f((a+b)/2),  (1/(b-a)) integral_a^b f,  (f(a)+f(b))/2.
// For convex f the triple is ascending. Mean value by adaptive Simpson.
struct ScalarHH {
    double midpoint = 0.0;
    double mean = 0.0;
    double endpoint_average = 0.0;

    bool ascending(double tol = 1e-12) const {
        return midpoint <= mean + tol && mean <= endpoint_average + tol;
    }
};

inline ScalarHH scalar_hh(const ScalarFunction& f, double a, double b) {
    if (!(a < b)) throw std::invalid_argument("scalar_hh: requires a < b");
    ScalarHH out;
    out.midpoint = f(0.5 * (a + b));
    out.mean = adaptive_simpson([&f](double t) { return f(t); }, a, b, 1e-12) / (b - a);
    out.endpoint_average = 0.5 * (f(a) + f(b));
    return out;
}

// Trapezoid defect bound for differentiable f with |f'| convex:
//   | (f(a)+f(b))/2 - (1/(b-a)) integral_a^b f |
//     <= (b-a) (|f'(a)| + |f'(b)|) / 8.
// The convexity of |f'| is asserted by the caller and only echoed here.
struct ScalarTrapezoid {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    bool fprime_abs_convex = false; // caller-asserted hypothesis, echoed

    bool holds(double tol = 1e-12) const { return slack >= -tol; }
};

inline ScalarTrapezoid scalar_trapezoid(const ScalarFunction& f,
                                        bool fprime_abs_convex, double a, double b) {
    if (!(a < b)) throw std::invalid_argument("scalar_trapezoid: requires a < b");
    if (!f.has_derivative())
        throw std::invalid_argument("scalar_trapezoid: f needs a derivative");
    ScalarTrapezoid out;
    out.fprime_abs_convex = fprime_abs_convex;
    const double mean =
        adaptive_simpson([&f](double t) { return f(t); }, a, b, 1e-12) / (b - a);
    out.lhs = std::abs(0.5 * (f(a) + f(b)) - mean);
    out.rhs = (b - a) * (std::abs(f.derivative(a)) + std::abs(f.derivative(b))) / 8.0;
    out.slack = out.rhs - out.lhs;
    return out;
}

} // namespace hhop
