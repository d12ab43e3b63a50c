#include "hhop/hh_chain.hpp"
#include "hhop/random_sampling.hpp"

#include <gtest/gtest.h>

namespace {

using namespace hhop;

TEST(HHChain, DegeneratePairCollapsesToSingleValue) {
    Rng rng(31);
    const HermitianMatrix a = rng.hermitian_in_interval(3, 1.0, 4.0);
    const ChainReport rep = hh_chain(make_square(), make_eta1(), a, a);
    const HermitianMatrix fa = apply_function(make_square(), a);
    const double scale = std::max(1.0, operator_norm(fa));
    for (const HermitianMatrix* term :
         {&rep.midpoint, &rep.quarter_average, &rep.path_mean, &rep.mixed_bound,
          &rep.endpoint_average})
        EXPECT_LE(operator_norm(*term - fa), 1e-12 * scale);
    EXPECT_TRUE(rep.holds());
    EXPECT_NEAR(rep.worst_gap(), 0.0, 1e-12 * scale);
    EXPECT_FALSE(rep.endpoint_forms_differ);
}

TEST(HHChain, FrozenScalarInstance) {
    // (A, B) = (2, -2) with the casewise map on (-3,-1) u (1,4):
    // direction 1 - 2 = -1, path end V = 1, and the squared chain evaluates
    // to 2.25 <= 2.3125 <= 7/3 <= 2.375 <= 4.
    const ChainReport rep = hh_chain(make_square(), make_eta1(),
                                     HermitianMatrix::scalar(2.0),
                                     HermitianMatrix::scalar(-2.0));
    EXPECT_NEAR(rep.midpoint(0, 0).real(), 2.25, 1e-12);
    EXPECT_NEAR(rep.quarter_average(0, 0).real(), 2.3125, 1e-12);
    EXPECT_NEAR(rep.path_mean(0, 0).real(), 7.0 / 3.0, 1e-12);
    EXPECT_NEAR(rep.mixed_bound(0, 0).real(), 2.375, 1e-12);
    EXPECT_NEAR(rep.endpoint_average(0, 0).real(), 4.0, 1e-12);
    EXPECT_TRUE(rep.holds());
    // f(V) = 1 differs materially from f(B) = 4 on this cross pair.
    EXPECT_TRUE(rep.endpoint_forms_differ);
    EXPECT_NEAR(rep.endpoint_average_v(0, 0).real(), 2.5, 1e-12);
}

TEST(HHChain, SquareWithConvexMapHoldsOnRandomPairs) {
    Rng rng(32);
    for (int trial = 0; trial < 50; ++trial) {
        const int dim = 2 + static_cast<int>(rng.bits() % 5);
        const HermitianMatrix a = rng.hermitian_in_interval(dim, -2.0, 2.0);
        const HermitianMatrix b = rng.hermitian_in_interval(dim, -2.0, 2.0);
        const ChainReport rep = hh_chain(make_square(), make_convex_eta(), a, b);
        EXPECT_TRUE(rep.holds()) << "trial " << trial;
        EXPECT_FALSE(rep.endpoint_forms_differ);
    }
}

TEST(HHChain, ConvexMapMatchesDirectEndpointEvaluation) {
    // With eta(B,A) = B - A the chain must coincide, term by term, with the
    // expression built directly from A and B instead of V = A + eta(B,A).
    Rng rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 1 + static_cast<int>(rng.bits() % 4);
        const HermitianMatrix a = rng.hermitian_in_interval(dim, -2.0, 2.0);
        const HermitianMatrix b = rng.hermitian_in_interval(dim, -2.0, 2.0);
        const ChainReport rep = hh_chain(make_square(), make_convex_eta(), a, b);

        const ScalarFunction f = make_square();
        const HermitianMatrix mid(0.5 * (a.mat() + b.mat()));
        const HermitianMatrix q1(0.25 * (3.0 * a.mat() + b.mat()));
        const HermitianMatrix q3(0.25 * (a.mat() + 3.0 * b.mat()));
        const HermitianMatrix direct_mid = apply_function(f, mid);
        const HermitianMatrix direct_quarter(
            0.5 * (apply_function(f, q1).mat() + apply_function(f, q3).mat()));
        const HermitianMatrix fa = apply_function(f, a);
        const HermitianMatrix fb = apply_function(f, b);
        const HermitianMatrix direct_mixed(
            0.5 * (direct_mid.mat() + 0.5 * (fa.mat() + fb.mat())));
        const OperatorIntegral direct_integral =
            operator_integral(f, a, HermitianMatrix(b.mat() - a.mat()));

        const double scale = rep.scale;
        EXPECT_LE(operator_norm(rep.midpoint - direct_mid), 1e-10 * scale);
        EXPECT_LE(operator_norm(rep.quarter_average - direct_quarter), 1e-10 * scale);
        EXPECT_LE(operator_norm(rep.path_mean - direct_integral.value), 1e-10 * scale);
        EXPECT_LE(operator_norm(rep.mixed_bound - direct_mixed), 1e-10 * scale);
        EXPECT_LE(operator_norm(rep.endpoint_average -
                                HermitianMatrix(0.5 * (fa.mat() + fb.mat()))),
                  1e-10 * scale);
    }
}

TEST(HHChain, Eta1ComponentAndCrossPairsHold) {
    Rng rng(34);
    for (int trial = 0; trial < 60; ++trial) {
        const int kind = static_cast<int>(rng.bits() % 3);
        HermitianMatrix a = HermitianMatrix::scalar(0.0);
        HermitianMatrix b = a;
        if (kind == 2) { // cross pair, scalar case
            const bool swap = rng.bits() % 2;
            a = rng.hermitian_in_interval(1, swap ? -3.0 : 1.0, swap ? -1.0 : 4.0);
            b = rng.hermitian_in_interval(1, swap ? 1.0 : -3.0, swap ? 4.0 : -1.0);
        } else {
            const int dim = 2 + static_cast<int>(rng.bits() % 5);
            const double lo = kind == 0 ? -3.0 : 1.0;
            const double hi = kind == 0 ? -1.0 : 4.0;
            a = rng.hermitian_in_interval(dim, lo, hi);
            b = rng.hermitian_in_interval(dim, lo, hi);
        }
        const ChainReport rep = hh_chain(make_square(), make_eta1(), a, b);
        EXPECT_TRUE(rep.holds()) << "trial " << trial << " kind " << kind;
    }
}

TEST(HHChain, ZeroDirectionCrossPairCanBreakTheLastLink) {
    // The zero-across map with f = t^2: on a cross pair the path collapses
    // to A, so the last link compares f(A) against (f(A)+f(B))/2 and fails
    // whenever f(B) < f(A). The checker must report that honestly.
    const ChainReport rep = hh_chain(make_square(), make_eta2(),
                                     HermitianMatrix::scalar(1.5),
                                     HermitianMatrix::scalar(-0.5));
    EXPECT_FALSE(rep.holds());
    EXPECT_NEAR(rep.gap_endpoint_vs_mixed, (0.25 - 2.25) / 2.0, 1e-12);
}

TEST(MidpointProximity, DegeneratePairHasZeroSlack) {
    Rng rng(35);
    const HermitianMatrix a = rng.hermitian_in_interval(3, -1.0, 1.0);
    const ChainReport rep = hh_chain(make_square(), make_convex_eta(), a, a);
    const MidpointProximityCheck c = check_integral_closer_to_midpoint(rep);
    EXPECT_TRUE(c.holds);
    EXPECT_NEAR(c.lower_gap, 0.0, 1e-12);
    EXPECT_NEAR(c.slack, 0.0, 1e-12);
}

TEST(MidpointProximity, FrozenScalarInstance) {
    // From the frozen chain: path mean - midpoint = 1/12 and
    // endpoint average - path mean = 5/3, so the slack is 5/3 - 1/12.
    const ChainReport rep = hh_chain(make_square(), make_eta1(),
                                     HermitianMatrix::scalar(2.0),
                                     HermitianMatrix::scalar(-2.0));
    const MidpointProximityCheck c = check_integral_closer_to_midpoint(rep);
    EXPECT_TRUE(c.holds);
    EXPECT_NEAR(c.lower_gap, 7.0 / 3.0 - 2.25, 1e-12);
    EXPECT_NEAR(c.slack, (4.0 - 7.0 / 3.0) - (7.0 / 3.0 - 2.25), 1e-12);
}

TEST(MidpointProximity, HoldsAcrossRandomConvexPairs) {
    Rng rng(36);
    for (int trial = 0; trial < 50; ++trial) {
        const int dim = 1 + static_cast<int>(rng.bits() % 6);
        const HermitianMatrix a = rng.hermitian_in_interval(dim, -2.0, 2.0);
        const HermitianMatrix b = rng.hermitian_in_interval(dim, -2.0, 2.0);
        const ChainReport rep = hh_chain(make_square(), make_convex_eta(), a, b);
        EXPECT_TRUE(check_integral_closer_to_midpoint(rep).holds) << "trial " << trial;
    }
}

} // namespace
