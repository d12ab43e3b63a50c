#pragma once

#include "hhop/eta_map.hpp"
#include "hhop/functional_calculus.hpp"
#include "hhop/operator_integral.hpp"

#include <algorithm>

namespace hhop {

// Hermite-Hadamard chain for f along the eta-path from A to V = A + eta(B,A):
//
//   f((A+V)/2)                                              midpoint
//     <= (1/2)[ f((3A+V)/4) + f((A+3V)/4) ]                 quarter average
//     <= integral over [0,1] of f(A + t eta(B,A)) dt        path mean
//     <= (1/2)[ f((A+V)/2) + (f(A)+f(V))/2 ]                mixed bound
//     <= (f(A)+f(B))/2                                      endpoint average
//
// Each of the four links carries a Loewner gap certificate: the minimum
// eigenvalue of (upper term - lower term), nonnegative up to tolerance iff
// the link holds. The endpoint average uses f(B); the report also carries the
// f(V)-based average and its gap, plus a flag set when f(V) and f(B) differ
// materially (they coincide exactly when eta(B,A) = B - A).
struct ChainReport {
    HermitianMatrix midpoint;        // f((A+V)/2)
    HermitianMatrix quarter_average; // (1/2)[f((3A+V)/4) + f((A+3V)/4)]
    HermitianMatrix path_mean;       // integral of f along the path
    HermitianMatrix mixed_bound;     // (1/2)[f((A+V)/2) + (f(A)+f(V))/2]
    HermitianMatrix endpoint_average;   // (f(A)+f(B))/2
    HermitianMatrix endpoint_average_v; // (f(A)+f(V))/2

    double gap_quarter_vs_midpoint = 0.0;
    double gap_integral_vs_quarter = 0.0;
    double gap_mixed_vs_integral = 0.0;
    double gap_endpoint_vs_mixed = 0.0;
    double gap_endpoint_v_vs_mixed = 0.0; // f(V)-based comparison

    double quadrature_error = 0.0;
    double scale = 1.0; // max(1, largest term norm); gap tolerances scale by it
    bool endpoint_forms_differ = false; // ||f(V) - f(B)|| materially nonzero

    bool holds(double tol = 1e-8) const {
        const double floor = -tol * scale;
        return gap_quarter_vs_midpoint >= floor && gap_integral_vs_quarter >= floor &&
               gap_mixed_vs_integral >= floor && gap_endpoint_vs_mixed >= floor;
    }

    double worst_gap() const {
        return std::min({gap_quarter_vs_midpoint, gap_integral_vs_quarter,
                         gap_mixed_vs_integral, gap_endpoint_vs_mixed});
    }
};

inline ChainReport hh_chain(const ScalarFunction& f, const EtaMap& eta,
                            const HermitianMatrix& a, const HermitianMatrix& b) {
    const HermitianMatrix d = eta(b, a);
    const HermitianMatrix v(a.mat() + d.mat());

    const HermitianMatrix fa = apply_function(f, a);
    const HermitianMatrix fb = apply_function(f, b);
    const HermitianMatrix fv = apply_function(f, v);

    const HermitianMatrix mid(0.5 * (a.mat() + v.mat()));
    const HermitianMatrix q1(0.25 * (3.0 * a.mat() + v.mat()));
    const HermitianMatrix q3(0.25 * (a.mat() + 3.0 * v.mat()));

    const OperatorIntegral integral = operator_integral(f, a, d);

    const HermitianMatrix f_mid = apply_function(f, mid);
    ChainReport rep{
        f_mid,
        HermitianMatrix(0.5 * (apply_function(f, q1).mat() + apply_function(f, q3).mat())),
        integral.value,
        HermitianMatrix(0.5 * (f_mid.mat() + 0.5 * (fa.mat() + fv.mat()))),
        HermitianMatrix(0.5 * (fa.mat() + fb.mat())),
        HermitianMatrix(0.5 * (fa.mat() + fv.mat()))};

    rep.quadrature_error = integral.error_estimate;
    rep.scale = std::max({1.0, operator_norm(rep.midpoint),
                          operator_norm(rep.quarter_average),
                          operator_norm(rep.path_mean), operator_norm(rep.mixed_bound),
                          operator_norm(rep.endpoint_average)});

    const auto min_gap = [](const HermitianMatrix& hi, const HermitianMatrix& lo) {
        return eigh(hi - lo).min_eigenvalue();
    };
    rep.gap_quarter_vs_midpoint = min_gap(rep.quarter_average, rep.midpoint);
    rep.gap_integral_vs_quarter = min_gap(rep.path_mean, rep.quarter_average);
    rep.gap_mixed_vs_integral = min_gap(rep.mixed_bound, rep.path_mean);
    rep.gap_endpoint_vs_mixed = min_gap(rep.endpoint_average, rep.mixed_bound);
    rep.gap_endpoint_v_vs_mixed = min_gap(rep.endpoint_average_v, rep.mixed_bound);
    rep.endpoint_forms_differ =
        operator_norm(fv - fb) > 1e-9 * rep.scale;
    return rep;
}

// Consequence of the chain: the path mean is at least the midpoint value and
// no farther from it than from the endpoint average,
//
//   0 <= path_mean - midpoint <= endpoint_average - path_mean.
//
// `slack` is the minimum eigenvalue of the second comparison.
struct MidpointProximityCheck {
    bool holds = false;
    double lower_gap = 0.0; // lambda_min(path_mean - midpoint)
    double slack = 0.0;     // lambda_min((endpoint_average - path_mean) - (path_mean - midpoint))
};

inline MidpointProximityCheck check_integral_closer_to_midpoint(const ChainReport& rep,
                                                                double tol = 1e-8) {
    MidpointProximityCheck out;
    out.lower_gap = eigh(rep.path_mean - rep.midpoint).min_eigenvalue();
    const HermitianMatrix upper = rep.endpoint_average - rep.path_mean;
    const HermitianMatrix lower = rep.path_mean - rep.midpoint;
    out.slack = eigh(upper - lower).min_eigenvalue();
    out.holds = out.lower_gap >= -tol * rep.scale && out.slack >= -tol * rep.scale;
    return out;
}

} // namespace hhop
