#pragma once

#include "hhop/eta_map.hpp"
#include "hhop/functional_calculus.hpp"
#include "hhop/operator_integral.hpp"

#include <cmath>
#include <optional>

namespace hhop {

// One-sided trapezoid-style estimate along an eta-path. With
// F(t) = integral over [0,t] of f(A + s eta(B,A)) ds and 0 < a < b < 1,
// the scalar form bounds, for a unit vector x,
//
//   | (1/2)<F(a)x,x> + (1/2)<F(b)x,x> - (1/(b-a)) integral_a^b <F(t)x,x> dt |
//     <= ((b-a)/8) [ <f(A+a eta)x,x> + <f(A+b eta)x,x> ]
//
// and the norm form bounds the same combination in operator norm by
// ((b-a)/8) ||f(A+a eta)+f(A+b eta)||, itself at most
// ((b-a)/8) (||f(A+a eta)|| + ||f(A+b eta)||). Requires f >= 0 on the
// spectra of the path points.
struct EstimateReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0; // rhs - lhs
    double a = 0.0;
    double b = 0.0;
    bool norm_mode = false;
    std::optional<Vector> x;       // scalar mode only
    double rhs_split = 0.0;        // norm mode: triangle-split right side
    double slack_split = 0.0;      // norm mode: rhs_split - rhs
    double scale = 1.0;

    bool holds(double tol = 1e-9) const {
        if (norm_mode)
            return slack >= -tol * scale && slack_split >= -tol * scale;
        return slack >= -tol * scale;
    }
};

namespace detail {

struct TrapezoidParts {
    HermitianMatrix combination; // (1/2)F(a) + (1/2)F(b) - mean of F over [a,b]
    HermitianMatrix f_at_a;      // f(A + a eta(B,A))
    HermitianMatrix f_at_b;      // f(A + b eta(B,A))
};

inline void require_nonnegative_range(const ScalarFunction& f, const HermitianMatrix& a,
                                      const HermitianMatrix& d, double pa, double pb) {
    std::vector<double> probes{0.0, pa, pb, 1.0};
    for (int k = 1; k < 10; ++k) probes.push_back(0.1 * k);
    for (double s : probes) {
        const SpectralDecomposition dec =
            eigh(HermitianMatrix(a.mat() + s * d.mat()));
        double sup = 1.0;
        for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i)
            sup = std::max(sup, std::abs(f(dec.eigenvalues(i))));
        for (Eigen::Index i = 0; i < dec.eigenvalues.size(); ++i)
            if (f(dec.eigenvalues(i)) < -1e-12 * sup)
                throw std::domain_error(
                    "trapezoid estimate: f takes negative values on the path spectra");
    }
}

inline TrapezoidParts trapezoid_parts(const ScalarFunction& f, const EtaMap& eta,
                                      const HermitianMatrix& a, const HermitianMatrix& b,
                                      double pa, double pb) {
    if (!(pa > 0.0 && pb < 1.0 && pa < pb))
        throw std::invalid_argument("trapezoid estimate: need 0 < a < b < 1");
    const HermitianMatrix d = eta(b, a);
    require_nonnegative_range(f, a, d, pa, pb);

    const HermitianMatrix cum_a = operator_integral_to(f, a, d, pa).value;
    const HermitianMatrix cum_b = operator_integral_to(f, a, d, pb).value;

    // Outer Gauss-Legendre over [a, b]; the inner cumulative integral is
    // recomputed at every outer node at the same refinement tolerance.
    const auto norm = [](const Matrix& m) {
        return operator_norm(HermitianMatrix(0.5 * (m + m.adjoint())));
    };
    const auto eval = [&](double t) -> Matrix {
        return operator_integral_to(f, a, d, t).value.mat();
    };
    const Matrix zero = Matrix::Zero(a.dim(), a.dim());
    const auto outer = integrate_refined<Matrix>(eval, norm, zero, pa, pb);

    const Matrix combo =
        0.5 * cum_a.mat() + 0.5 * cum_b.mat() - outer.value / (pb - pa);
    return TrapezoidParts{
        HermitianMatrix(0.5 * (combo + combo.adjoint())),
        apply_function(f, HermitianMatrix(a.mat() + pa * d.mat())),
        apply_function(f, HermitianMatrix(a.mat() + pb * d.mat()))};
}

} // namespace detail

inline EstimateReport trapezoid_estimate(const ScalarFunction& f, const EtaMap& eta,
                                         const HermitianMatrix& a,
                                         const HermitianMatrix& b, double pa, double pb,
                                         const Vector& x) {
    if (x.size() != a.dim() || std::abs(x.norm() - 1.0) > 1e-12)
        throw std::invalid_argument("trapezoid_estimate: x must be a unit vector");
    const detail::TrapezoidParts parts = detail::trapezoid_parts(f, eta, a, b, pa, pb);

    EstimateReport rep;
    rep.a = pa;
    rep.b = pb;
    rep.x = x;
    rep.lhs = std::abs(((x.adjoint() * (parts.combination.mat() * x))(0, 0)).real());
    const double ra = ((x.adjoint() * (parts.f_at_a.mat() * x))(0, 0)).real();
    const double rb = ((x.adjoint() * (parts.f_at_b.mat() * x))(0, 0)).real();
    rep.rhs = (pb - pa) / 8.0 * (ra + rb);
    rep.slack = rep.rhs - rep.lhs;
    rep.scale = std::max(1.0, rep.rhs);
    return rep;
}

inline EstimateReport trapezoid_estimate_norm(const ScalarFunction& f, const EtaMap& eta,
                                              const HermitianMatrix& a,
                                              const HermitianMatrix& b, double pa,
                                              double pb) {
    const detail::TrapezoidParts parts = detail::trapezoid_parts(f, eta, a, b, pa, pb);

    EstimateReport rep;
    rep.a = pa;
    rep.b = pb;
    rep.norm_mode = true;
    rep.lhs = operator_norm(parts.combination);
    rep.rhs = (pb - pa) / 8.0 * operator_norm(parts.f_at_a + parts.f_at_b);
    rep.rhs_split =
        (pb - pa) / 8.0 * (operator_norm(parts.f_at_a) + operator_norm(parts.f_at_b));
    rep.slack = rep.rhs - rep.lhs;
    rep.slack_split = rep.rhs_split - rep.rhs;
    rep.scale = std::max(1.0, rep.rhs_split);
    return rep;
}

// Specialization to eta(B, A) = B - A: the operator-convex case. Delegates to
// the general routine with the convex map, so results agree bit for bit.
inline EstimateReport convex_estimate(const ScalarFunction& f, const HermitianMatrix& a,
                                      const HermitianMatrix& b, double pa, double pb,
                                      const Vector& x) {
    return trapezoid_estimate(f, make_convex_eta(), a, b, pa, pb, x);
}

inline EstimateReport convex_estimate_norm(const ScalarFunction& f,
                                           const HermitianMatrix& a,
                                           const HermitianMatrix& b, double pa,
                                           double pb) {
    return trapezoid_estimate_norm(f, make_convex_eta(), a, b, pa, pb);
}

} // namespace hhop
