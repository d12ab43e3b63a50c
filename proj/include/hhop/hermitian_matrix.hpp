#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace hhop {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Dense self-adjoint matrix. Construction validates A = A* entrywise within
// an absolute tolerance of 1e-12 and stores the symmetrized part (A + A*)/2,
// so stored entries satisfy a(i,j) == conj(a(j,i)) bitwise. Sums, real scalar
// multiples and differences of stored matrices therefore stay Hermitian
// bitwise and need no re-symmetrization.
class HermitianMatrix {
public:
    static constexpr double kHermitianTol = 1e-12;

    explicit HermitianMatrix(const Matrix& raw) {
        if (raw.rows() != raw.cols() || raw.rows() < 1)
            throw std::invalid_argument("HermitianMatrix: matrix must be square, dim >= 1");
        const double drift = (raw - raw.adjoint()).cwiseAbs().maxCoeff();
        if (drift > kHermitianTol)
            throw std::invalid_argument(
                "HermitianMatrix: input is not Hermitian (max |a_ij - conj(a_ji)| = " +
                std::to_string(drift) + ")");
        mat_ = 0.5 * (raw + raw.adjoint());
    }

    static HermitianMatrix identity(Eigen::Index n) {
        return HermitianMatrix(Matrix::Identity(n, n));
    }

    static HermitianMatrix zero(Eigen::Index n) {
        return HermitianMatrix(Matrix::Zero(n, n));
    }

    // 1x1 convenience used throughout the scalar-reduction tests.
    static HermitianMatrix scalar(double v) {
        Matrix m(1, 1);
        m(0, 0) = v;
        return HermitianMatrix(m);
    }

    Eigen::Index dim() const { return mat_.rows(); }
    const Matrix& mat() const { return mat_; }
    Complex operator()(Eigen::Index i, Eigen::Index j) const { return mat_(i, j); }

    bool same_entries(const HermitianMatrix& other) const {
        return mat_.rows() == other.mat_.rows() && mat_ == other.mat_;
    }

private:
    Matrix mat_;
};

inline HermitianMatrix operator+(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix(a.mat() + b.mat());
}

inline HermitianMatrix operator-(const HermitianMatrix& a, const HermitianMatrix& b) {
    return HermitianMatrix(a.mat() - b.mat());
}

inline HermitianMatrix operator*(double r, const HermitianMatrix& a) {
    return HermitianMatrix(r * a.mat());
}

inline HermitianMatrix operator-(const HermitianMatrix& a) {
    return HermitianMatrix(-a.mat());
}

} // namespace hhop
