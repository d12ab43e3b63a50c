#pragma once

#include "hhop/estimates.hpp"
#include "hhop/hh_chain.hpp"
#include "hhop/invexity_checks.hpp"
#include "hhop/matrix_io.hpp"
#include "hhop/preinvexity.hpp"
#include "hhop/scalar_oracles.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace hhop {

inline const std::vector<std::string>& suite_registry() {
    static const std::vector<std::string> names{
        "gelfand",    "invex",    "condition-c",    "preinvex", "chain",
        "corollary1", "estimate", "scalar-oracles", "falsify"};
    return names;
}

// Campaign configuration. Unset tolerances (< 0) fall back to the suite
// default; unset a/b fall back to [0,1] endpoints for scalar-oracles and to
// per-trial random draws for the estimate suite.
struct SuiteConfig {
    std::string suite;
    std::string eta = "convex";
    std::string fn = "square";
    std::vector<int> dims = {1, 2, 3, 4};
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    double tol = -1.0;
    double a = -1.0;
    double b = -1.0;
    int threads = 0; // 0: use HH_OPVERIFY_THREADS, else 1

    void validate() const {
        bool known = false;
        for (const std::string& s : suite_registry()) known = known || s == suite;
        if (!known) {
            std::string msg = "unknown suite '" + suite + "'; registry:";
            for (const std::string& s : suite_registry()) msg += " " + s;
            throw std::invalid_argument(msg);
        }
        if (dims.empty()) throw std::invalid_argument("dims must be nonempty");
        for (int d : dims)
            if (d < 1 || d > 16)
                throw std::invalid_argument("dims must lie in [1, 16]");
        if (trials < 1) throw std::invalid_argument("trials must be >= 1");
        make_eta(eta);      // resolves or throws
        make_function(fn);  // resolves or throws
    }
};

// One verification trial. `margin` is the tightest slack the trial observed
// (suite-specific; negative on violation); the summary keeps the worst one.
struct TrialRecord {
    std::size_t index = 0;
    std::string digest;
    std::string verdict; // pass | violation | inapplicable | error
    double margin = 0.0;
    std::vector<std::pair<std::string, double>> certificates;
    std::string message;
};

struct RunSummary {
    std::size_t trials = 0;
    std::size_t passes = 0;
    std::size_t violations = 0;
    std::size_t inapplicable = 0;
    std::size_t errors = 0;
    double worst_margin = 0.0;
    bool expects_violations = false; // falsify suites
    bool expectation_met = false;
    int exit_code = 0; // 0 ok, 2 unexpected violations, 3 missing violations
    double wall_ms = 0.0;
    std::uint64_t seed = 0;
};

struct RunReport {
    SuiteConfig config;
    std::vector<TrialRecord> trials;
    RunSummary summary;
};

namespace detail {

class Digest {
public:
    void add_bytes(const void* p, std::size_t n) {
        const unsigned char* c = static_cast<const unsigned char*>(p);
        for (std::size_t i = 0; i < n; ++i) {
            h_ ^= c[i];
            h_ *= 0x00000100000001b3ULL;
        }
    }
    void add(double v) { add_bytes(&v, sizeof v); }
    void add(std::uint64_t v) { add_bytes(&v, sizeof v); }
    void add(const HermitianMatrix& m) {
        add(static_cast<std::uint64_t>(m.dim()));
        for (Eigen::Index i = 0; i < m.dim(); ++i)
            for (Eigen::Index j = 0; j < m.dim(); ++j) {
                add(m(i, j).real());
                add(m(i, j).imag());
            }
    }
    std::string hex() const {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(h_));
        return buf;
    }

private:
    std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

// Pair sampler matched to the structure of each bundled eta map: matrices are
// drawn inside one component; cross-component pairs are produced for the
// casewise maps (dimension 1 only for the map on (-3,-1) u (1,4), any
// dimension for the zero-across map).
inline std::pair<HermitianMatrix, HermitianMatrix>
sample_pair_for_eta(const std::string& eta_name, int dim, Rng& rng,
                    double lo = -2.0, double hi = 2.0) {
    const auto in = [&](const OperatorInterval& iv) {
        return rng.hermitian_in_interval(dim, iv.lo, iv.hi);
    };
    if (eta_name == "eta1") {
        const OperatorInterval t{-3.0, -1.0}, u{1.0, 4.0};
        const int cases = dim == 1 ? 4 : 2;
        switch (rng.bits() % cases) {
            case 0: return {in(t), in(t)};
            case 1: return {in(u), in(u)};
            case 2: return {in(t), in(u)};
            default: return {in(u), in(t)};
        }
    }
    if (eta_name == "eta2") {
        const OperatorInterval v{-2.0, 0.0}, w{0.0, 2.0};
        switch (rng.bits() % 4) {
            case 0: return {in(v), in(v)};
            case 1: return {in(w), in(w)};
            case 2: return {in(v), in(w)};
            default: return {in(w), in(v)};
        }
    }
    return {rng.hermitian_in_interval(dim, lo, hi),
            rng.hermitian_in_interval(dim, lo, hi)};
}

inline PairSampler sampler_for_eta(const std::string& eta_name, int dim,
                                   double lo = -2.0, double hi = 2.0) {
    return [eta_name, dim, lo, hi](Rng& rng) {
        return sample_pair_for_eta(eta_name, dim, rng, lo, hi);
    };
}

inline std::vector<double> polynomial_coeffs(Rng& rng, int max_degree = 4) {
    const int degree = 1 + static_cast<int>(rng.bits() % max_degree);
    std::vector<double> coeffs(static_cast<std::size_t>(degree) + 1);
    for (double& c : coeffs) c = rng.uniform(-1.0, 1.0);
    return coeffs;
}

} // namespace detail

namespace suites {

// --- gelfand: functional-calculus laws on random matrices and polynomials ---
inline TrialRecord run_gelfand_trial(const SuiteConfig& cfg, std::size_t index,
                                     int dim, Rng& rng) {
    TrialRecord rec;
    rec.index = index;
    const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-9;

    const HermitianMatrix a = rng.hermitian_in_interval(dim, -2.0, 2.0);
    const std::vector<double> pc = detail::polynomial_coeffs(rng);
    const std::vector<double> qc = detail::polynomial_coeffs(rng);
    const double alpha = rng.uniform(-1.0, 1.0);
    const double beta = rng.uniform(-1.0, 1.0);

    detail::Digest dg;
    dg.add(a);
    for (double c : pc) dg.add(c);
    for (double c : qc) dg.add(c);
    rec.digest = dg.hex();

    const ScalarFunction p = make_polynomial(pc);
    const ScalarFunction q = make_polynomial(qc);
    const SpectralDecomposition dec = eigh(a);
    const double a_norm = std::max(std::abs(dec.min_eigenvalue()),
                                   std::abs(dec.max_eigenvalue()));

    // Reconstruction residual of the decomposition itself.
    const Matrix recomposed =
        dec.eigenvectors * dec.eigenvalues.asDiagonal() * dec.eigenvectors.adjoint();
    const double eigh_resid =
        operator_norm(HermitianMatrix(0.5 * (recomposed + recomposed.adjoint())) - a);
    const double eigh_budget = 1e-10 * std::max(1.0, a_norm);

    // Spectral mapping: eigenvalues of p(A) are the mapped eigenvalues.
    const HermitianMatrix pa = apply_function(p, a);
    const SpectralDecomposition pdec = eigh(pa);
    std::vector<double> mapped(static_cast<std::size_t>(dim));
    double mapped_sup = 1.0;
    for (int i = 0; i < dim; ++i) {
        mapped[static_cast<std::size_t>(i)] = p(dec.eigenvalues(i));
        mapped_sup = std::max(mapped_sup, std::abs(mapped[static_cast<std::size_t>(i)]));
    }
    std::sort(mapped.begin(), mapped.end());
    double mapping_err = 0.0;
    for (int i = 0; i < dim; ++i)
        mapping_err = std::max(
            mapping_err,
            std::abs(pdec.eigenvalues(i) - mapped[static_cast<std::size_t>(i)]));
    const double mapping_budget = tol * mapped_sup;

    // Linearity.
    const HermitianMatrix qa = apply_function(q, a);
    const ScalarFunction lin =
        make_polynomial(poly_add(pc, qc, alpha, beta));
    const double lin_scale =
        std::max({1.0, operator_norm(pa), operator_norm(qa)});
    const double linearity_err = operator_norm(
        apply_function(lin, a) -
        HermitianMatrix(alpha * pa.mat() + beta * qa.mat()));
    const double linearity_budget = tol * lin_scale;

    // Multiplicativity on commuting factors from the same A.
    const ScalarFunction prod = make_polynomial(poly_mul(pc, qc));
    const Matrix prod_direct = pa.mat() * qa.mat();
    const HermitianMatrix prod_sym(0.5 * (prod_direct + prod_direct.adjoint()));
    const double mult_scale = std::max(
        {1.0, operator_norm(pa) * operator_norm(qa), operator_norm(prod_sym)});
    const double mult_err = operator_norm(apply_function(prod, a) - prod_sym);
    const double mult_budget = tol * mult_scale;

    // Property (P) with a guaranteed pointwise-dominating pair q + p^2 >= q,
    // plus the raw pair which must never trip the implication.
    const ScalarFunction dom = make_polynomial(poly_add(qc, poly_mul(pc, pc)));
    const PropertyPReport dom_rep = check_property_P(dom, q, a, tol * mult_scale);
    const PropertyPReport raw_rep = check_property_P(p, q, a, tol * mult_scale);
    const bool property_ok = dom_rep.pointwise_dominates && dom_rep.loewner_dominates &&
                             !dom_rep.violated && !raw_rep.violated;

    rec.certificates = {{"eigh_residual", eigh_resid},
                        {"mapping_error", mapping_err},
                        {"linearity_error", linearity_err},
                        {"mult_error", mult_err},
                        {"property_p_gap", dom_rep.min_loewner_gap}};
    rec.margin = std::min({eigh_budget - eigh_resid, mapping_budget - mapping_err,
                           linearity_budget - linearity_err, mult_budget - mult_err,
                           property_ok ? 0.0 : -1.0});
    rec.verdict = (eigh_resid <= eigh_budget && mapping_err <= mapping_budget &&
                   linearity_err <= linearity_budget && mult_err <= mult_budget &&
                   property_ok)
                      ? "pass"
                      : "violation";
    return rec;
}

// --- invex: closure of the set under eta-paths ---
inline TrialRecord run_invex_trial(const SuiteConfig& cfg, std::size_t index, int dim,
                                   Rng& rng) {
    TrialRecord rec;
    rec.index = index;
    const EtaMap eta = make_eta(cfg.eta);
    const double margin = cfg.tol > 0.0 ? cfg.tol : kClosureTol;

    const auto pair = detail::sample_pair_for_eta(cfg.eta, dim, rng);
    detail::Digest dg;
    dg.add(pair.first);
    dg.add(pair.second);
    rec.digest = dg.hex();

    PairSampler fixed = [&pair](Rng&) { return pair; };
    const InvexReport rep =
        check_invex(eta.domain(), eta, fixed, 1, rng, uniform_grid(21), margin);

    double worst = 0.0;
    for (const InvexViolation& v : rep.violations) worst = std::max(worst, v.overshoot);
    rec.certificates = {
        {"points_checked", static_cast<double>(rep.points_checked)},
        {"boundary_hits", static_cast<double>(rep.boundary_hits.size())},
        {"strict_violations", static_cast<double>(rep.violations.size())},
        {"worst_overshoot", worst}};
    rec.margin = -worst;
    rec.verdict = rep.invex_on_samples() ? "pass" : "violation";
    return rec;
}

// --- condition-c: the two eta identities plus the path-difference identity ---
inline TrialRecord run_condition_c_trial(const SuiteConfig& cfg, std::size_t index,
                                         int dim, Rng& rng) {
    TrialRecord rec;
    rec.index = index;
    const EtaMap eta = make_eta(cfg.eta);
    const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-12;

    const auto pair = detail::sample_pair_for_eta(cfg.eta, dim, rng);
    detail::Digest dg;
    dg.add(pair.first);
    dg.add(pair.second);
    rec.digest = dg.hex();

    PairSampler fixed = [&pair](Rng&) { return pair; };
    const ConditionCReport crep =
        check_condition_C(eta, fixed, 1, rng, uniform_grid(21), tol);
    const PathDifferenceReport prep =
        check_eq_path_difference(eta, fixed, 1, rng, ordered_pairs_grid(11), tol);

    const double scale =
        std::max({1.0, operator_norm(pair.first), operator_norm(pair.second)});
    rec.certificates = {
        {"residual_first", crep.max_residual_first},
        {"residual_second", crep.max_residual_second},
        {"residual_path_difference", prep.max_residual},
        {"applicable", static_cast<double>(crep.applicable)},
        {"inapplicable", static_cast<double>(crep.inapplicable)}};
    const double worst =
        std::max({crep.max_residual_first, crep.max_residual_second, prep.max_residual});
    rec.margin = tol * scale - worst;
    if (crep.applicable == 0 && prep.applicable == 0)
        rec.verdict = "inapplicable";
    else
        rec.verdict = (crep.satisfied_on_samples() && prep.satisfied_on_samples())
                          ? "pass"
                          : "violation";
    return rec;
}

// --- preinvex / falsify: the defining operator inequality on sampled pairs ---
inline TrialRecord run_preinvex_trial(const SuiteConfig& cfg, std::size_t index, int dim,
                                      Rng& rng, double lo = -2.0, double hi = 2.0) {
    TrialRecord rec;
    rec.index = index;
    const EtaMap eta = make_eta(cfg.eta);
    const ScalarFunction f = make_function(cfg.fn);
    const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-8;

    const auto pair = detail::sample_pair_for_eta(cfg.eta, dim, rng, lo, hi);
    detail::Digest dg;
    dg.add(pair.first);
    dg.add(pair.second);
    rec.digest = dg.hex();

    PairSampler fixed = [&pair](Rng&) { return pair; };
    const PreinvexityReport rep =
        check_operator_preinvex(f, eta, fixed, 1, rng, uniform_grid(21), tol);

    rec.certificates = {
        {"min_gap", rep.min_gap == kInf ? 0.0 : rep.min_gap},
        {"samples_tested", static_cast<double>(rep.samples_tested)},
        {"inapplicable", static_cast<double>(rep.inapplicable)},
        {"witnesses", static_cast<double>(rep.witnesses.size())}};
    rec.margin = rep.min_gap == kInf ? 0.0 : rep.min_gap;
    if (rep.samples_tested == 0)
        rec.verdict = "inapplicable";
    else
        rec.verdict = rep.holds() ? "pass" : "violation";
    if (!rep.witnesses.empty() && !rep.witnesses.front().scalar_confirmed)
        rec.message = "witness not confirmed by scalar form";
    return rec;
}

// --- chain / corollary1: the operator inequality chain and its consequence ---
inline TrialRecord run_chain_trial(const SuiteConfig& cfg, std::size_t index, int dim,
                                   Rng& rng, bool with_corollary) {
    TrialRecord rec;
    rec.index = index;
    const EtaMap eta = make_eta(cfg.eta);
    const ScalarFunction f = make_function(cfg.fn);
    const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-8;

    const auto [a, b] = detail::sample_pair_for_eta(cfg.eta, dim, rng);
    detail::Digest dg;
    dg.add(a);
    dg.add(b);
    rec.digest = dg.hex();

    const ChainReport rep = hh_chain(f, eta, a, b);
    rec.certificates = {{"gap_quarter_vs_midpoint", rep.gap_quarter_vs_midpoint},
                        {"gap_integral_vs_quarter", rep.gap_integral_vs_quarter},
                        {"gap_mixed_vs_integral", rep.gap_mixed_vs_integral},
                        {"gap_endpoint_vs_mixed", rep.gap_endpoint_vs_mixed},
                        {"quadrature_error", rep.quadrature_error}};
    bool ok = rep.holds(tol);
    double margin = rep.worst_gap();
    if (with_corollary) {
        const MidpointProximityCheck c = check_integral_closer_to_midpoint(rep, tol);
        rec.certificates.emplace_back("proximity_lower_gap", c.lower_gap);
        rec.certificates.emplace_back("proximity_slack", c.slack);
        ok = ok && c.holds;
        margin = std::min({margin, c.lower_gap, c.slack});
    }
    rec.margin = margin;
    rec.verdict = ok ? "pass" : "violation";
    return rec;
}

// --- estimate: trapezoid-style bounds in scalar and norm form ---
inline TrialRecord run_estimate_trial(const SuiteConfig& cfg, std::size_t index, int dim,
                                      Rng& rng) {
    TrialRecord rec;
    rec.index = index;
    const EtaMap eta = make_eta(cfg.eta);
    const ScalarFunction f = make_function(cfg.fn);
    const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-9;

    const auto [a, b] = detail::sample_pair_for_eta(cfg.eta, dim, rng);
    double pa = cfg.a, pb = cfg.b;
    if (!(pa > 0.0 && pb > 0.0 && pa < pb && pb < 1.0)) {
        pa = rng.uniform(0.05, 0.45);
        pb = rng.uniform(pa + 0.05, 0.95);
    }
    const Vector x = rng.unit_vector(dim);

    detail::Digest dg;
    dg.add(a);
    dg.add(b);
    dg.add(pa);
    dg.add(pb);
    rec.digest = dg.hex();

    const EstimateReport scalar_rep = trapezoid_estimate(f, eta, a, b, pa, pb, x);
    const EstimateReport norm_rep = trapezoid_estimate_norm(f, eta, a, b, pa, pb);

    rec.certificates = {{"a", pa},
                        {"b", pb},
                        {"lhs", scalar_rep.lhs},
                        {"rhs", scalar_rep.rhs},
                        {"slack", scalar_rep.slack},
                        {"norm_lhs", norm_rep.lhs},
                        {"norm_rhs", norm_rep.rhs},
                        {"norm_rhs_split", norm_rep.rhs_split},
                        {"norm_slack", norm_rep.slack},
                        {"norm_slack_split", norm_rep.slack_split}};
    rec.margin = std::min({scalar_rep.slack, norm_rep.slack, norm_rep.slack_split});
    rec.verdict = (scalar_rep.holds(tol) && norm_rep.holds(tol)) ? "pass" : "violation";
    return rec;
}

// --- scalar-oracles: the scalar inequalities on [a, b] ---
inline TrialRecord run_scalar_oracles_trial(const SuiteConfig& cfg, std::size_t index,
                                            Rng&) {
    TrialRecord rec;
    rec.index = index;
    const ScalarFunction f = make_function(cfg.fn);
    const double a = cfg.a < cfg.b ? cfg.a : 0.0;
    const double b = cfg.a < cfg.b ? cfg.b : 1.0;
    const double tol = cfg.tol > 0.0 ? cfg.tol : 1e-12;

    detail::Digest dg;
    dg.add(a);
    dg.add(b);
    rec.digest = dg.hex();

    const ScalarHH hh = scalar_hh(f, a, b);
    const ScalarTrapezoid tz = scalar_trapezoid(f, true, a, b);
    rec.certificates = {{"midpoint", hh.midpoint},
                        {"mean", hh.mean},
                        {"endpoint_average", hh.endpoint_average},
                        {"trapezoid_lhs", tz.lhs},
                        {"trapezoid_rhs", tz.rhs}};
    rec.margin = std::min({hh.mean - hh.midpoint, hh.endpoint_average - hh.mean,
                           tz.slack});
    rec.verdict = (hh.ascending(tol) && tz.holds(tol)) ? "pass" : "violation";
    return rec;
}

} // namespace suites

inline int thread_count_from_env() {
    const char* env = std::getenv("HH_OPVERIFY_THREADS");
    if (!env) return 1;
    const int k = std::atoi(env);
    return k >= 1 ? k : 1;
}

// Runs a campaign. Trials are independent: trial i derives its own RNG from
// (seed, i), so verdicts and certificates do not depend on execution order or
// thread count. Records are emitted sorted by trial index.
inline RunReport run_suite(const SuiteConfig& cfg) {
    cfg.validate();
    const auto t_start = std::chrono::steady_clock::now();

    RunReport report;
    report.config = cfg;
    report.trials.resize(cfg.trials);

    const bool falsify = cfg.suite == "falsify";
    const int threads =
        std::max(1, cfg.threads > 0 ? cfg.threads : thread_count_from_env());

    // falsify searches on the interval the counterexample lives on: PSD
    // pairs for the convex map, the casewise domains otherwise.
    const double sample_lo = falsify && cfg.eta == "convex" ? 0.0 : -2.0;
    const double sample_hi = falsify && cfg.eta == "convex" ? 10.0 : 2.0;

    auto run_one = [&](std::size_t i) {
        const int dim = cfg.dims[i % cfg.dims.size()];
        Rng rng(per_trial_seed(cfg.seed, i));
        TrialRecord rec;
        try {
            if (cfg.suite == "gelfand")
                rec = suites::run_gelfand_trial(cfg, i, dim, rng);
            else if (cfg.suite == "invex")
                rec = suites::run_invex_trial(cfg, i, dim, rng);
            else if (cfg.suite == "condition-c")
                rec = suites::run_condition_c_trial(cfg, i, dim, rng);
            else if (cfg.suite == "preinvex" || cfg.suite == "falsify")
                rec = suites::run_preinvex_trial(cfg, i, dim, rng, sample_lo, sample_hi);
            else if (cfg.suite == "chain")
                rec = suites::run_chain_trial(cfg, i, dim, rng, false);
            else if (cfg.suite == "corollary1")
                rec = suites::run_chain_trial(cfg, i, dim, rng, true);
            else if (cfg.suite == "estimate")
                rec = suites::run_estimate_trial(cfg, i, dim, rng);
            else // scalar-oracles
                rec = suites::run_scalar_oracles_trial(cfg, i, rng);
        } catch (const std::exception& e) {
            rec = TrialRecord{};
            rec.index = i;
            rec.verdict = "error";
            rec.message = e.what();
        }
        rec.index = i;
        report.trials[i] = std::move(rec);
    };

    if (threads == 1 || cfg.trials == 1) {
        for (std::size_t i = 0; i < cfg.trials; ++i) run_one(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        const int workers = std::min<std::size_t>(threads, cfg.trials);
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < cfg.trials;
                     i = next.fetch_add(1))
                    run_one(i);
            });
        for (std::thread& th : pool) th.join();
    }

    RunSummary& s = report.summary;
    s.trials = cfg.trials;
    s.seed = cfg.seed;
    s.expects_violations = falsify;
    s.worst_margin = kInf;
    for (const TrialRecord& rec : report.trials) {
        if (rec.verdict == "pass") ++s.passes;
        else if (rec.verdict == "violation") ++s.violations;
        else if (rec.verdict == "inapplicable") ++s.inapplicable;
        else ++s.errors;
        s.worst_margin = std::min(s.worst_margin, rec.margin);
    }
    if (s.worst_margin == kInf) s.worst_margin = 0.0;
    if (falsify) {
        s.expectation_met = s.violations > 0;
        s.exit_code = s.expectation_met ? 0 : 3;
    } else {
        s.expectation_met = s.violations == 0 && s.errors == 0;
        s.exit_code = s.expectation_met ? 0 : 2;
    }
    s.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t_start)
                    .count();
    return report;
}

} // namespace hhop
