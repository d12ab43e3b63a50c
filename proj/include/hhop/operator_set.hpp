#pragma once

#include "hhop/hermitian_matrix.hpp"
#include "hhop/jacobi_eigen.hpp"

#include <string>
#include <vector>

namespace hhop {

// Open operator interval (lo, hi) = { A : lo*1 < A < hi*1 }, tested through
// the spectrum: lo < lambda_min and lambda_max < hi.
struct OperatorInterval {
    double lo;
    double hi;
};

// Either the whole Hermitian cone or a finite union of open operator
// intervals. Strict membership uses open comparisons; closure membership
// admits boundary points within a tolerance (paths of the bundled eta maps
// terminate on component boundaries at t = 1).
class OperatorSet {
public:
    static OperatorSet all_hermitian(std::string label = "hermitian") {
        OperatorSet s;
        s.all_ = true;
        s.label_ = std::move(label);
        return s;
    }

    static OperatorSet interval_union(std::vector<OperatorInterval> intervals,
                                      std::string label) {
        OperatorSet s;
        s.intervals_ = std::move(intervals);
        s.label_ = std::move(label);
        return s;
    }

    bool is_all_hermitian() const { return all_; }
    const std::vector<OperatorInterval>& intervals() const { return intervals_; }
    const std::string& label() const { return label_; }

    // Index of the open component containing A, or -1.
    int component_index(const HermitianMatrix& a) const {
        if (all_) return 0;
        const SpectralDecomposition dec = eigh(a);
        for (std::size_t k = 0; k < intervals_.size(); ++k)
            if (dec.min_eigenvalue() > intervals_[k].lo &&
                dec.max_eigenvalue() < intervals_[k].hi)
                return static_cast<int>(k);
        return -1;
    }

    bool contains(const HermitianMatrix& a) const { return component_index(a) >= 0; }

    bool contains_closure(const HermitianMatrix& a, double tol) const {
        if (all_) return true;
        const SpectralDecomposition dec = eigh(a);
        for (const OperatorInterval& iv : intervals_)
            if (dec.min_eigenvalue() >= iv.lo - tol && dec.max_eigenvalue() <= iv.hi + tol)
                return true;
        return false;
    }

private:
    bool all_ = false;
    std::vector<OperatorInterval> intervals_;
    std::string label_;
};

} // namespace hhop
