#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace hhop {

// Gauss-Legendre rule on [0, 1]. Nodes come from Newton iteration on the
// Legendre polynomial with cos initial guesses; only the lower half is
// iterated and the upper half mirrored, so node k and node n-1-k are exact
// reflections about 1/2.
struct GaussLegendreRule {
    std::vector<double> nodes;   // ascending in (0, 1)
    std::vector<double> weights; // sum to 1
};

namespace detail {

inline GaussLegendreRule build_gauss_legendre(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Root of P_n near cos(pi (i + 3/4) / (n + 1/2)), refined by Newton.
        double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 =
                    ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
                p0 = p1;
                p1 = p2;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // x is the i-th largest root; mirror onto [0, 1].
        const std::size_t hi = static_cast<std::size_t>(n - 1 - i);
        const std::size_t lo = static_cast<std::size_t>(i);
        rule.nodes[hi] = 0.5 * (1.0 + x);
        rule.nodes[lo] = 0.5 * (1.0 - x);
        rule.weights[hi] = 0.5 * w;
        rule.weights[lo] = 0.5 * w;
    }
    if (n % 2 == 1) {
        rule.nodes[static_cast<std::size_t>(n / 2)] = 0.5;
    }
    return rule;
}

} // namespace detail

// Refinement ladder used by the doubling integrator.
inline constexpr std::array<int, 6> kGaussLegendreSizes{8, 16, 32, 64, 128, 256};

inline const GaussLegendreRule& gauss_legendre_rule(int n) {
    static const std::array<GaussLegendreRule, 6> rules = [] {
        std::array<GaussLegendreRule, 6> r;
        for (std::size_t i = 0; i < kGaussLegendreSizes.size(); ++i)
            r[i] = detail::build_gauss_legendre(kGaussLegendreSizes[i]);
        return r;
    }();
    for (std::size_t i = 0; i < kGaussLegendreSizes.size(); ++i)
        if (kGaussLegendreSizes[i] == n) return rules[i];
    throw std::invalid_argument("gauss_legendre_rule: unsupported node count");
}

// Integral over [lo, hi] of a V-valued integrand by Gauss-Legendre with node
// doubling. V needs zero-like construction via `zero`, eval(t) -> V, and the
// caller supplies accumulate/axpy through plain arithmetic: V must support
// `v += w * f(t)` style updates and a norm functional.
template <typename V>
struct RefinedIntegral {
    V value;
    double error_estimate = 0.0; // norm of the last doubling difference
    int nodes = 0;
    bool converged = false;
};

template <typename V, typename Eval, typename Norm>
RefinedIntegral<V> integrate_refined(const Eval& eval, const Norm& norm,
                                     V zero, double lo, double hi,
                                     int initial_nodes = 8,
                                     double rel_tol = 1e-11) {
    const double width = hi - lo;
    auto at_nodes = [&](int n) {
        const GaussLegendreRule& rule = gauss_legendre_rule(n);
        V acc = zero;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k)
            acc += (width * rule.weights[k]) * eval(lo + width * rule.nodes[k]);
        return acc;
    };

    RefinedIntegral<V> out;
    int start_index = 0;
    // Start one rung below the cap at most, so at least one doubling happens
    // and the error estimate is always a measured difference.
    while (start_index + 2 < static_cast<int>(kGaussLegendreSizes.size()) &&
           kGaussLegendreSizes[static_cast<std::size_t>(start_index)] < initial_nodes)
        ++start_index;

    V prev = at_nodes(kGaussLegendreSizes[static_cast<std::size_t>(start_index)]);
    for (std::size_t i = static_cast<std::size_t>(start_index) + 1;
         i < kGaussLegendreSizes.size(); ++i) {
        const V next = at_nodes(kGaussLegendreSizes[i]);
        const double diff = norm(next - prev);
        const double scale = std::max(1.0, norm(next));
        out.value = next;
        out.error_estimate = diff;
        out.nodes = kGaussLegendreSizes[i];
        if (diff <= rel_tol * scale) {
            out.converged = true;
            return out;
        }
        prev = next;
    }
    return out; // cap reached; error_estimate carries the last difference
}

// Adaptive Simpson on [a, b] to absolute tolerance `tol`.
inline double adaptive_simpson(const std::function<double(double)>& f, double a,
                               double b, double tol = 1e-12) {
    if (!(a < b)) throw std::invalid_argument("adaptive_simpson: requires a < b");
    struct Impl {
        const std::function<double(double)>& f;
        double recurse(double lo, double hi, double flo, double fmid, double fhi,
                       double whole, double tol, int depth) const {
            const double mid = 0.5 * (lo + hi);
            const double lmid = 0.5 * (lo + mid);
            const double rmid = 0.5 * (mid + hi);
            const double flm = f(lmid);
            const double frm = f(rmid);
            const double left = (mid - lo) / 6.0 * (flo + 4.0 * flm + fmid);
            const double right = (hi - mid) / 6.0 * (fmid + 4.0 * frm + fhi);
            const double delta = left + right - whole;
            if (depth >= 48 || std::abs(delta) <= 15.0 * tol)
                return left + right + delta / 15.0;
            return recurse(lo, mid, flo, flm, fmid, left, 0.5 * tol, depth + 1) +
                   recurse(mid, hi, fmid, frm, fhi, right, 0.5 * tol, depth + 1);
        }
    };
    const double mid = 0.5 * (a + b);
    const double fa = f(a), fm = f(mid), fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return Impl{f}.recurse(a, b, fa, fm, fb, whole, tol, 0);
}

} // namespace hhop
