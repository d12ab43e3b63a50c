#pragma once

#include "hhop/errors.hpp"
#include "hhop/eta_map.hpp"
#include "hhop/functional_calculus.hpp"
#include "hhop/invexity_checks.hpp"

#include <cmath>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace hhop {

// Scalar curve t -> < f(A + t D) x, x > along an eta-path, for a unit vector
// x. Convexity of every such curve on [0,1] characterizes operator
// preinvexity of f along the path.
class RayleighCurve {
public:
    RayleighCurve(ScalarFunction f, HermitianMatrix base, HermitianMatrix direction,
                  Vector x)
        : f_(std::move(f)), base_(std::move(base)), direction_(std::move(direction)),
          x_(std::move(x)) {
        if (base_.dim() != direction_.dim() || x_.size() != base_.dim())
            throw std::invalid_argument("RayleighCurve: dimension mismatch");
        if (std::abs(x_.norm() - 1.0) > 1e-12)
            throw std::invalid_argument("RayleighCurve: x must be a unit vector");
    }

    double at(double t) const {
        const HermitianMatrix p(base_.mat() + t * direction_.mat());
        const HermitianMatrix fp = apply_function(f_, p);
        const Complex v = (x_.adjoint() * (fp.mat() * x_))(0, 0);
        const double scale = std::max(1.0, operator_norm(fp));
        if (std::abs(v.imag()) > 1e-12 * scale)
            throw std::logic_error("RayleighCurve: non-real inner product");
        return v.real();
    }

    const ScalarFunction& f() const { return f_; }
    const HermitianMatrix& base() const { return base_; }
    const HermitianMatrix& direction() const { return direction_; }
    const Vector& x() const { return x_; }

private:
    ScalarFunction f_;
    HermitianMatrix base_;
    HermitianMatrix direction_;
    Vector x_;
};

inline double phi(const RayleighCurve& curve, double t) {
    if (t < 0.0 || t > 1.0)
        throw std::domain_error("phi: t outside [0,1]");
    return curve.at(t);
}

// Centered second differences on an equispaced grid; convex iff all are
// >= -tol_base * max(1, |phi|_inf on the grid).
struct ConvexityCheck {
    bool convex = false;
    double worst_second_difference = 0.0;
    double effective_tol = 0.0;
};

inline ConvexityCheck check_phi_convexity(const RayleighCurve& curve, int grid_size = 101,
                                          double tol_base = 1e-9) {
    if (grid_size < 3)
        throw std::invalid_argument("check_phi_convexity: grid_size must be >= 3");
    std::vector<double> values(static_cast<std::size_t>(grid_size));
    double sup = 0.0;
    for (int k = 0; k < grid_size; ++k) {
        values[static_cast<std::size_t>(k)] =
            curve.at(static_cast<double>(k) / (grid_size - 1));
        sup = std::max(sup, std::abs(values[static_cast<std::size_t>(k)]));
    }
    ConvexityCheck out;
    out.effective_tol = tol_base * std::max(1.0, sup);
    out.worst_second_difference = kInf;
    for (int k = 1; k + 1 < grid_size; ++k) {
        const double dd = values[static_cast<std::size_t>(k) - 1] -
                          2.0 * values[static_cast<std::size_t>(k)] +
                          values[static_cast<std::size_t>(k) + 1];
        out.worst_second_difference = std::min(out.worst_second_difference, dd);
    }
    out.convex = out.worst_second_difference >= -out.effective_tol;
    return out;
}

// ---------------------------------------------------------------------------
// Operator preinvexity of f with respect to eta: for sampled pairs (A, B)
// and grid t, the gap
//
//   G = (1-t) f(A) + t f(B) - f(A + t eta(B, A))
//
// must be PSD. A witness records lambda_min(G) < -tol*scale together with the
// minimizing eigenvector, through which the scalar Rayleigh form of the same
// inequality fails at the same (A, B, t).
// ---------------------------------------------------------------------------
struct PreinvexityWitness {
    HermitianMatrix a;
    HermitianMatrix b;
    double t;
    double min_gap_eigenvalue;
    Vector x;               // unit eigenvector of the gap at lambda_min
    bool scalar_confirmed;  // Rayleigh form of the inequality fails at x
};

struct PreinvexityReport {
    enum class Verdict { kHoldsOnSamples, kViolated };

    Verdict verdict = Verdict::kHoldsOnSamples;
    std::size_t samples_tested = 0;
    std::size_t inapplicable = 0; // path spectrum left the function domain
    double min_gap = kInf;        // most negative lambda_min seen
    std::vector<PreinvexityWitness> witnesses;

    bool holds() const { return verdict == Verdict::kHoldsOnSamples; }
};

inline PreinvexityReport check_operator_preinvex(
    const ScalarFunction& f, const EtaMap& eta, const PairSampler& sampler,
    std::size_t pairs, Rng& rng, const std::vector<double>& t_grid = uniform_grid(21),
    double tol = 1e-8) {
    PreinvexityReport rep;
    for (std::size_t i = 0; i < pairs; ++i) {
        const auto [a, b] = sampler(rng);
        const HermitianMatrix d = eta(b, a);
        HermitianMatrix fa = HermitianMatrix::zero(a.dim());
        HermitianMatrix fb = fa;
        try {
            fa = apply_function(f, a);
            fb = apply_function(f, b);
        } catch (const SpectrumDomainError&) {
            rep.inapplicable += t_grid.size();
            continue;
        }
        const double scale = std::max({1.0, operator_norm(fa), operator_norm(fb)});
        for (double t : t_grid) {
            const HermitianMatrix p(a.mat() + t * d.mat());
            HermitianMatrix fp = fa;
            try {
                fp = apply_function(f, p);
            } catch (const SpectrumDomainError&) {
                ++rep.inapplicable;
                continue;
            }
            ++rep.samples_tested;
            const HermitianMatrix gap(
                (1.0 - t) * fa.mat() + t * fb.mat() - fp.mat());
            const SpectralDecomposition dec = eigh(gap);
            const double lam = dec.min_eigenvalue();
            rep.min_gap = std::min(rep.min_gap, lam);
            if (lam < -tol * scale) {
                const Vector x = dec.eigenvectors.col(0);
                const double lhs = ((x.adjoint() * (fp.mat() * x))(0, 0)).real();
                const double rhs = ((x.adjoint() * ((1.0 - t) * fa.mat() + t * fb.mat()) * x)(0, 0)).real();
                rep.witnesses.push_back({a, b, t, lam, x, lhs > rhs});
            }
        }
    }
    rep.verdict = rep.witnesses.empty() ? PreinvexityReport::Verdict::kHoldsOnSamples
                                        : PreinvexityReport::Verdict::kViolated;
    return rep;
}

// ---------------------------------------------------------------------------
// Equivalence cross-check on one eta-path: convexity of the Rayleigh curves
// for sampled unit vectors versus preinvexity of f between path points
// C_i = A + t_i eta(B,A). Grid triples (t_a, t_m, t_b) are chosen with t_m a
// grid point, so the two views test the same evaluations and a clean failure
// of one side with a clean pass of the other is a genuine inconsistency.
// ---------------------------------------------------------------------------
struct PathEquivalenceReport {
    bool curves_convex = true;          // over supplied + witness vectors
    double worst_second_difference = kInf;
    bool path_preinvex = true;          // over sampled grid triples
    double worst_path_gap = kInf;       // most negative lambda_min
    std::size_t triples_tested = 0;
    std::size_t inapplicable = 0;
    bool inconsistent = false;

    bool consistent() const { return !inconsistent; }
};

inline PathEquivalenceReport check_path_equivalence(
    const ScalarFunction& f, const EtaMap& eta, const HermitianMatrix& a,
    const HermitianMatrix& b, const std::vector<Vector>& x_samples,
    const std::vector<double>& t_grid = uniform_grid(21), double tol = 1e-9) {
    PathEquivalenceReport rep;
    const HermitianMatrix d = eta(b, a);

    // f at every grid point of the path, computed once; points whose spectra
    // leave the domain of f stay empty.
    std::vector<std::optional<HermitianMatrix>> fc(t_grid.size());
    for (std::size_t k = 0; k < t_grid.size(); ++k) {
        const HermitianMatrix p(a.mat() + t_grid[k] * d.mat());
        try {
            fc[k] = apply_function(f, p);
        } catch (const SpectrumDomainError&) {
        }
    }

    double max_f_norm = 1.0;
    std::vector<PreinvexityWitness> witnesses;
    for (std::size_t ia = 0; ia < t_grid.size(); ++ia) {
        for (std::size_t ib = ia + 2; ib < t_grid.size(); ++ib) {
            for (std::size_t im = ia + 1; im < ib; ++im) {
                const auto& fca = fc[ia];
                const auto& fcb = fc[ib];
                const auto& fcm = fc[im];
                if (!fca || !fcb || !fcm) {
                    ++rep.inapplicable;
                    continue;
                }
                ++rep.triples_tested;
                const double lam_frac =
                    (t_grid[im] - t_grid[ia]) / (t_grid[ib] - t_grid[ia]);
                const HermitianMatrix gap((1.0 - lam_frac) * fca->mat() +
                                          lam_frac * fcb->mat() - fcm->mat());
                max_f_norm = std::max({max_f_norm, operator_norm(*fca),
                                       operator_norm(*fcb)});
                const SpectralDecomposition dec = eigh(gap);
                if (dec.min_eigenvalue() < rep.worst_path_gap) {
                    rep.worst_path_gap = dec.min_eigenvalue();
                }
                if (dec.min_eigenvalue() < -tol * max_f_norm) {
                    witnesses.push_back({a, b, t_grid[im], dec.min_eigenvalue(),
                                         dec.eigenvectors.col(0), true});
                }
            }
        }
    }
    rep.path_preinvex = witnesses.empty();

    // Curve convexity over the supplied vectors plus any violation witnesses.
    std::vector<Vector> xs = x_samples;
    for (const PreinvexityWitness& w : witnesses) xs.push_back(w.x);
    const int grid_size = static_cast<int>(t_grid.size());
    for (const Vector& x : xs) {
        const RayleighCurve curve(f, a, d, x);
        ConvexityCheck c;
        try {
            c = check_phi_convexity(curve, grid_size, tol);
        } catch (const SpectrumDomainError&) {
            ++rep.inapplicable;
            continue;
        }
        rep.worst_second_difference =
            std::min(rep.worst_second_difference, c.worst_second_difference);
        if (!c.convex) rep.curves_convex = false;
    }

    // A clean pass on one side with a clean failure on the other is an
    // inconsistency; the 100x band absorbs second-difference accumulation
    // across grid spans.
    const double clean_fail = 100.0 * tol * max_f_norm;
    const bool curves_clean_fail = rep.worst_second_difference < -clean_fail;
    const bool path_clean_fail = rep.worst_path_gap < -clean_fail;
    rep.inconsistent = (rep.curves_convex && path_clean_fail) ||
                       (rep.path_preinvex && curves_clean_fail);
    return rep;
}

} // namespace hhop
