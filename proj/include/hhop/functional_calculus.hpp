#pragma once

#include "hhop/errors.hpp"
#include "hhop/hermitian_matrix.hpp"
#include "hhop/jacobi_eigen.hpp"
#include "hhop/scalar_function.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace hhop {

// Operator norm = max |eigenvalue|.
inline double operator_norm(const HermitianMatrix& a) {
    const SpectralDecomposition dec = eigh(a);
    return std::max(std::abs(dec.min_eigenvalue()), std::abs(dec.max_eigenvalue()));
}

// Continuous functional calculus: f(A) = U f(diag) U*, so the spectrum of the
// result is exactly {f(lambda) : lambda in Sp(A)}. Eigenvalues may exceed the
// domain of f by at most 1e-9 * max(1, ||A||_op); such excursions are clamped
// to the domain boundary, larger ones raise SpectrumDomainError.
inline HermitianMatrix apply_function(const ScalarFunction& f, const HermitianMatrix& a) {
    const SpectralDecomposition dec = eigh(a);
    const double scale =
        std::max({1.0, std::abs(dec.min_eigenvalue()), std::abs(dec.max_eigenvalue())});
    const double margin = 1e-9 * scale;

    Eigen::VectorXd mapped(a.dim());
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
        double lam = dec.eigenvalues(i);
        if (lam < f.lo() || lam > f.hi()) {
            if (lam >= f.lo() - margin && lam <= f.hi() + margin)
                lam = std::clamp(lam, f.lo(), f.hi());
            else
                throw SpectrumDomainError(lam, f.lo(), f.hi());
        }
        mapped(i) = f(lam);
    }

    const Matrix& u = dec.eigenvectors;
    const Matrix recomposed = u * mapped.asDiagonal() * u.adjoint();
    return HermitianMatrix(0.5 * (recomposed + recomposed.adjoint()));
}

// PSD verdict with certificate: the minimum eigenvalue, and for a negative
// verdict a unit vector x with <Ax, x> = lambda_min < -tol.
struct PsdWitness {
    bool psd = false;
    double min_eigenvalue = 0.0;
    std::optional<Vector> violating_vector;
};

inline PsdWitness is_psd(const HermitianMatrix& a, double tol) {
    const SpectralDecomposition dec = eigh(a);
    PsdWitness w;
    w.min_eigenvalue = dec.min_eigenvalue();
    w.psd = w.min_eigenvalue >= -tol;
    if (!w.psd) w.violating_vector = dec.eigenvectors.col(0);
    return w;
}

// Loewner order: A <= B iff B - A is PSD.
inline PsdWitness loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b,
                              double tol) {
    if (a.dim() != b.dim())
        throw std::invalid_argument("loewner_leq: dimension mismatch");
    return is_psd(b - a, tol);
}

// Property (P): f >= g pointwise on Sp(A) must imply f(A) >= g(A) in the
// Loewner order. `violated` is set only when the pointwise premise holds and
// the operator conclusion fails.
struct PropertyPReport {
    bool pointwise_dominates = false;
    bool loewner_dominates = false;
    bool violated = false;
    double min_pointwise_gap = 0.0; // min over Sp(A) of f - g
    double min_loewner_gap = 0.0;   // lambda_min(f(A) - g(A))
};

inline PropertyPReport check_property_P(const ScalarFunction& f, const ScalarFunction& g,
                                        const HermitianMatrix& a, double tol) {
    const SpectralDecomposition dec = eigh(a);
    PropertyPReport rep;
    rep.min_pointwise_gap = kInf;
    for (Eigen::Index i = 0; i < a.dim(); ++i) {
        const double lam = dec.eigenvalues(i);
        rep.min_pointwise_gap = std::min(rep.min_pointwise_gap, f(lam) - g(lam));
    }
    rep.pointwise_dominates = rep.min_pointwise_gap >= 0.0;

    const PsdWitness w = loewner_leq(apply_function(g, a), apply_function(f, a), tol);
    rep.loewner_dominates = w.psd;
    rep.min_loewner_gap = w.min_eigenvalue;
    rep.violated = rep.pointwise_dominates && !rep.loewner_dominates;
    return rep;
}

} // namespace hhop
