#pragma once

#include "hhop/errors.hpp"
#include "hhop/functional_calculus.hpp"
#include "hhop/hermitian_matrix.hpp"
#include "hhop/operator_set.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace hhop {

// A map eta(X, Y) on pairs of Hermitian matrices together with its domain.
class EtaMap {
public:
    using Rule = std::function<HermitianMatrix(const HermitianMatrix&,
                                               const HermitianMatrix&)>;

    EtaMap(Rule rule, OperatorSet domain, std::string label)
        : rule_(std::move(rule)), domain_(std::move(domain)), label_(std::move(label)) {}

    HermitianMatrix operator()(const HermitianMatrix& x, const HermitianMatrix& y) const {
        if (x.dim() != y.dim())
            throw std::invalid_argument("EtaMap '" + label_ + "': dimension mismatch");
        return rule_(x, y);
    }

    const OperatorSet& domain() const { return domain_; }
    const std::string& label() const { return label_; }

private:
    Rule rule_;
    OperatorSet domain_;
    std::string label_;
};

// Point on an eta-path: base + t * direction, t in [0, 1].
struct PathPoint {
    HermitianMatrix base;
    HermitianMatrix direction;
    double t = 0.0;

    HermitianMatrix value() const {
        return HermitianMatrix(base.mat() + t * direction.mat());
    }
};

// The convex map eta(X, Y) = X - Y on all Hermitian matrices; preinvexity
// with respect to it is plain operator convexity.
inline EtaMap make_convex_eta() {
    return EtaMap([](const HermitianMatrix& x, const HermitianMatrix& y) { return x - y; },
                  OperatorSet::all_hermitian(), "convex");
}

// Casewise map on S = (-3,-1) u (1,4):
//   X - Y      both arguments in the same component,
//   1 - Y      X in the lower component, Y in the upper,
//   -1 - Y     X in the upper component, Y in the lower.
inline EtaMap make_eta1() {
    OperatorSet s = OperatorSet::interval_union({{-3.0, -1.0}, {1.0, 4.0}}, "T|U");
    auto rule = [s](const HermitianMatrix& x, const HermitianMatrix& y) {
        const int cx = s.component_index(x);
        const int cy = s.component_index(y);
        if (cx < 0 || cy < 0)
            throw EtaDomainError("eta1: argument outside (-3,-1) u (1,4)");
        if (cx == cy) return x - y;
        const double boundary = (cx == 0) ? 1.0 : -1.0;
        return HermitianMatrix(boundary * Matrix::Identity(y.dim(), y.dim()) - y.mat());
    };
    return EtaMap(rule, s, "eta1");
}

// Casewise map on S = (-2,0) u (0,2): X - Y inside a component, 0 across.
inline EtaMap make_eta2() {
    OperatorSet s = OperatorSet::interval_union({{-2.0, 0.0}, {0.0, 2.0}}, "V|W");
    auto rule = [s](const HermitianMatrix& x, const HermitianMatrix& y) {
        const int cx = s.component_index(x);
        const int cy = s.component_index(y);
        if (cx < 0 || cy < 0)
            throw EtaDomainError("eta2: argument outside (-2,0) u (0,2)");
        if (cx == cy) return x - y;
        return HermitianMatrix::zero(y.dim());
    };
    return EtaMap(rule, s, "eta2");
}

// Sign-casewise map on all Hermitian matrices: X - Y when X, Y are both PSD
// or both NSD (at tolerance 1e-10), otherwise Y - X.
inline EtaMap make_eta3() {
    auto rule = [](const HermitianMatrix& x, const HermitianMatrix& y) {
        constexpr double tol = 1e-10;
        const bool x_psd = is_psd(x, tol).psd;
        const bool y_psd = is_psd(y, tol).psd;
        const bool x_nsd = is_psd(-x, tol).psd;
        const bool y_nsd = is_psd(-y, tol).psd;
        if ((x_psd && y_psd) || (x_nsd && y_nsd)) return x - y;
        return y - x;
    };
    return EtaMap(rule, OperatorSet::all_hermitian(), "eta3");
}

// Resolves a registry name: eta1, eta2, eta3, convex.
inline EtaMap make_eta(const std::string& name) {
    if (name == "eta1") return make_eta1();
    if (name == "eta2") return make_eta2();
    if (name == "eta3") return make_eta3();
    if (name == "convex") return make_convex_eta();
    throw std::invalid_argument("unknown eta map '" + name +
                                "'; registry: eta1, eta2, eta3, convex");
}

} // namespace hhop
