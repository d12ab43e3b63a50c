#pragma once

#include "hhop/errors.hpp"
#include "hhop/hermitian_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace hhop {

// Eigendecomposition of a Hermitian matrix:
//   A = U diag(lambda) U*,  eigenvalues ascending, U columns orthonormal.
//
// Computed by cyclic Jacobi with complex rotations. For each off-diagonal
// pivot b = A(p,q) the unitary
//
//   G = [ c          s ]          s = t*c * b/|b|,  c = 1/sqrt(1+t^2),
//       [ -conj(s)   c ]          t = sign(th)/(|th| + sqrt(th^2+1)),
//                                 th = (A(p,p) - A(q,q)) / (2|b|)
//
// annihilates the pivot under A <- G* A G. Sweeps run in a fixed row-major
// pivot order, so the output is a pure function of the input bits.
//
// Output convention: ties in the ascending eigenvalue sort keep their
// pre-sort order (stable sort), and each eigenvector is scaled by a unit
// phase so its first component of modulus > 1e-12 is real positive.
struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues; // ascending
    Matrix eigenvectors;         // columns, orthonormal, phase-fixed

    double min_eigenvalue() const { return eigenvalues(0); }
    double max_eigenvalue() const { return eigenvalues(eigenvalues.size() - 1); }
};

namespace detail {

inline double offdiag_norm(const Matrix& m) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            if (i != j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

inline void fix_column_phases(Matrix& u) {
    constexpr double kNonzero = 1e-12;
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
        for (Eigen::Index i = 0; i < u.rows(); ++i) {
            const double a = std::abs(u(i, j));
            if (a > kNonzero) {
                u.col(j) *= std::conj(u(i, j)) / a;
                break;
            }
        }
    }
}

} // namespace detail

inline SpectralDecomposition eigh(const HermitianMatrix& a) {
    constexpr int kMaxSweeps = 100;
    constexpr double kRelOffTol = 1e-14;

    const Eigen::Index n = a.dim();
    Matrix m = a.mat();
    Matrix u = Matrix::Identity(n, n);

    const double fro = m.norm();
    const double threshold = kRelOffTol * fro;

    double off = detail::offdiag_norm(m);
    if (fro > 0.0 && off > threshold) {
        bool converged = false;
        for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
            for (Eigen::Index p = 0; p + 1 < n; ++p) {
                for (Eigen::Index q = p + 1; q < n; ++q) {
                    const Complex b = m(p, q);
                    const double ab = std::abs(b);
                    if (ab == 0.0) continue;

                    const double app = m(p, p).real();
                    const double aqq = m(q, q).real();
                    // Small root of t^2 - 2 th t - 1 = 0.
                    const double th = (app - aqq) / (2.0 * ab);
                    const double t = (th >= 0.0 ? -1.0 : 1.0) /
                                     (std::abs(th) + std::sqrt(th * th + 1.0));
                    const double c = 1.0 / std::sqrt(t * t + 1.0);
                    const Complex s = (t * c) * (b / ab);

                    // A <- G* A G, columns then rows.
                    const Vector colp = c * m.col(p) - std::conj(s) * m.col(q);
                    const Vector colq = s * m.col(p) + c * m.col(q);
                    m.col(p) = colp;
                    m.col(q) = colq;
                    const Eigen::RowVectorXcd rowp = c * m.row(p) - s * m.row(q);
                    const Eigen::RowVectorXcd rowq =
                        std::conj(s) * m.row(p) + c * m.row(q);
                    m.row(p) = rowp;
                    m.row(q) = rowq;

                    const Vector up = c * u.col(p) - std::conj(s) * u.col(q);
                    const Vector uq = s * u.col(p) + c * u.col(q);
                    u.col(p) = up;
                    u.col(q) = uq;
                }
            }
            off = detail::offdiag_norm(m);
            converged = off <= threshold;
        }
        if (!converged)
            throw ConvergenceError("eigh: Jacobi sweep cap reached", off);
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&m](Eigen::Index i, Eigen::Index j) {
        return m(i, i).real() < m(j, j).real();
    });

    SpectralDecomposition dec;
    dec.eigenvalues.resize(n);
    dec.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        dec.eigenvalues(k) = m(order[static_cast<std::size_t>(k)],
                               order[static_cast<std::size_t>(k)])
                                 .real();
        dec.eigenvectors.col(k) = u.col(order[static_cast<std::size_t>(k)]);
    }
    detail::fix_column_phases(dec.eigenvectors);
    return dec;
}

} // namespace hhop
