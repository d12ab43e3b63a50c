#pragma once

#include "hhop/hermitian_matrix.hpp"

#include <cstdint>
#include <random>

namespace hhop {

// SplitMix64 finalizer. Per-trial seeds are derived from the campaign seed
// and the trial index through this mix, so trials are independent streams
// regardless of execution order or thread count.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t per_trial_seed(std::uint64_t campaign_seed, std::uint64_t trial) {
    return splitmix64(campaign_seed ^ splitmix64(trial));
}

// Seeded RNG with the distributions the samplers need.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(engine_);
    }

    double gaussian() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }

    std::uint64_t bits() { return engine_(); }

    Complex complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return Complex(re, im);
    }

    // Haar-ish unitary: QR of a complex Gaussian matrix with the R diagonal
    // rotated positive.
    Matrix unitary(Eigen::Index n) {
        Matrix g(n, n);
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j) g(i, j) = complex_gaussian();
        Eigen::HouseholderQR<Matrix> qr(g);
        Matrix q = qr.householderQ();
        const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
        for (Eigen::Index j = 0; j < n; ++j) {
            const double a = std::abs(r(j, j));
            if (a > 0.0) q.col(j) *= r(j, j) / a;
        }
        return q;
    }

    // Hermitian matrix with spectrum drawn uniformly from the interior of
    // (lo, hi): eigenvalues in [lo + d, hi - d] with d = 0.05 (hi - lo),
    // conjugated by a random unitary.
    HermitianMatrix hermitian_in_interval(Eigen::Index n, double lo, double hi) {
        const double delta = 0.05 * (hi - lo);
        Eigen::VectorXd lam(n);
        for (Eigen::Index i = 0; i < n; ++i) lam(i) = uniform(lo + delta, hi - delta);
        const Matrix u = unitary(n);
        const Matrix m = u * lam.asDiagonal() * u.adjoint();
        return HermitianMatrix(0.5 * (m + m.adjoint()));
    }

    // Unit vector uniform on the complex sphere.
    Vector unit_vector(Eigen::Index n) {
        Vector v(n);
        double norm2 = 0.0;
        do {
            for (Eigen::Index i = 0; i < n; ++i) v(i) = complex_gaussian();
            norm2 = v.squaredNorm();
        } while (norm2 == 0.0);
        return v / std::sqrt(norm2);
    }

private:
    std::mt19937_64 engine_;
};

} // namespace hhop
