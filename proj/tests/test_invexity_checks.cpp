#include "hhop/invexity_checks.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

namespace {

using namespace hhop;

PairSampler fixed_pair(double x, double y) {
    return [x, y](Rng&) {
        return std::make_pair(HermitianMatrix::scalar(x), HermitianMatrix::scalar(y));
    };
}

PairSampler interval_pair_sampler(const std::string& eta_name, int dim) {
    return [eta_name, dim](Rng& rng) {
        if (eta_name == "eta1") {
            const bool upper = rng.bits() % 2;
            const double lo = upper ? 1.0 : -3.0;
            const double hi = upper ? 4.0 : -1.0;
            return std::make_pair(rng.hermitian_in_interval(dim, lo, hi),
                                  rng.hermitian_in_interval(dim, lo, hi));
        }
        if (eta_name == "eta2") {
            const int c = static_cast<int>(rng.bits() % 4);
            const double lo1 = c == 0 || c == 2 ? -2.0 : 0.0;
            const double lo2 = c == 0 || c == 3 ? -2.0 : 0.0;
            return std::make_pair(rng.hermitian_in_interval(dim, lo1, lo1 + 2.0),
                                  rng.hermitian_in_interval(dim, lo2, lo2 + 2.0));
        }
        return std::make_pair(rng.hermitian_in_interval(dim, -2.0, 2.0),
                              rng.hermitian_in_interval(dim, -2.0, 2.0));
    };
}

TEST(CheckInvex, ConvexMapOnHermitianConeNeverViolates) {
    Rng rng(1);
    const EtaMap eta = make_convex_eta();
    const InvexReport rep = check_invex(eta.domain(), eta,
                                        interval_pair_sampler("convex", 3), 25, rng);
    EXPECT_TRUE(rep.invex_on_samples());
    EXPECT_TRUE(rep.boundary_hits.empty());
}

TEST(CheckInvex, Eta1InteriorGridStaysInside) {
    // t capped just below 1 keeps cross-component paths strictly inside.
    Rng rng(2);
    const EtaMap eta = make_eta1();
    std::vector<double> grid = uniform_grid(21);
    grid.back() = 1.0 - 1e-6;
    PairSampler cross = fixed_pair(-2.0, 2.0);
    const InvexReport rep = check_invex(eta.domain(), eta, cross, 1, rng, grid);
    EXPECT_TRUE(rep.invex_on_samples());
    EXPECT_TRUE(rep.boundary_hits.empty());
}

TEST(CheckInvex, Eta1BoundaryHitAtTOneIsClosureAccepted) {
    // (x, y) = (-2, 2): the path ends on the component boundary 1 at t = 1,
    // a strict-membership miss accepted under the closure tolerance.
    Rng rng(3);
    const EtaMap eta = make_eta1();
    const InvexReport rep =
        check_invex(eta.domain(), eta, fixed_pair(-2.0, 2.0), 1, rng);
    EXPECT_TRUE(rep.invex_on_samples());
    ASSERT_EQ(rep.boundary_hits.size(), 1u);
    EXPECT_DOUBLE_EQ(rep.boundary_hits[0].t, 1.0);
    EXPECT_NEAR(rep.boundary_hits[0].offending_eigenvalue, 1.0, 1e-12);
}

TEST(CheckInvex, RandomEta1PairsAreClosureInvex) {
    Rng rng(4);
    const EtaMap eta = make_eta1();
    auto sampler = [](Rng& r) {
        const int c = static_cast<int>(r.bits() % 4);
        const double lo1 = c == 0 || c == 2 ? -3.0 : 1.0;
        const double hi1 = c == 0 || c == 2 ? -1.0 : 4.0;
        const double lo2 = c == 0 || c == 3 ? -3.0 : 1.0;
        const double hi2 = c == 0 || c == 3 ? -1.0 : 4.0;
        return std::make_pair(r.hermitian_in_interval(1, lo1, hi1),
                              r.hermitian_in_interval(1, lo2, hi2));
    };
    const InvexReport rep = check_invex(eta.domain(), eta, sampler, 50, rng);
    EXPECT_TRUE(rep.invex_on_samples());
}

TEST(ConditionC, ConvexMapFirstResidualExactlyZero) {
    Rng rng(5);
    const EtaMap eta = make_convex_eta();
    for (int dim : {1, 2, 5}) {
        const ConditionCReport rep = check_condition_C(
            eta, interval_pair_sampler("convex", dim), 20, rng);
        EXPECT_EQ(rep.max_residual_first, 0.0);
        EXPECT_LE(rep.max_residual_second, 1e-15 * 4.0);
        EXPECT_TRUE(rep.satisfied_on_samples());
        EXPECT_EQ(rep.inapplicable, 0u);
    }
}

TEST(ConditionC, Eta1CrossPairMatchesHandEvaluation) {
    // x in (-3,-1), y in (1,4): eta1(x,y) = 1 - y and
    // eta1(x, y + t(1-y)) = (1-t)(1-y); residuals stay at rounding level.
    Rng rng(6);
    const EtaMap eta = make_eta1();
    std::vector<double> grid = uniform_grid(21);
    grid.pop_back(); // t = 1 lands on the boundary, outside the open domain
    const ConditionCReport rep =
        check_condition_C(eta, fixed_pair(-2.0, 2.0), 1, rng, grid);
    EXPECT_EQ(rep.inapplicable, 0u);
    EXPECT_EQ(rep.max_residual_first, 0.0);
    EXPECT_LE(rep.max_residual_second, 1e-15 * 4.0);
}

TEST(ConditionC, Eta1BoundaryPointRecordedInapplicable) {
    Rng rng(7);
    const EtaMap eta = make_eta1();
    const ConditionCReport rep =
        check_condition_C(eta, fixed_pair(-2.0, 2.0), 1, rng, {0.0, 0.5, 1.0});
    EXPECT_EQ(rep.applicable, 2u);
    EXPECT_EQ(rep.inapplicable, 1u); // the t = 1 endpoint
    EXPECT_TRUE(rep.satisfied_on_samples());
}

TEST(ConditionC, Eta2CrossPairBothIdentitiesReduceToZero) {
    Rng rng(8);
    const EtaMap eta = make_eta2();
    const ConditionCReport rep =
        check_condition_C(eta, fixed_pair(-1.0, 1.0), 1, rng);
    EXPECT_EQ(rep.max_residual_first, 0.0);
    EXPECT_EQ(rep.max_residual_second, 0.0);
    EXPECT_EQ(rep.inapplicable, 0u);
}

TEST(ConditionC, Eta2RandomPairsWithinMachineRounding) {
    Rng rng(9);
    const EtaMap eta = make_eta2();
    auto sampler = [](Rng& r) {
        const int c = static_cast<int>(r.bits() % 4);
        const double lo1 = c == 0 || c == 2 ? -2.0 : 0.0;
        const double lo2 = c == 0 || c == 3 ? -2.0 : 0.0;
        return std::make_pair(r.hermitian_in_interval(2, lo1, lo1 + 2.0),
                              r.hermitian_in_interval(2, lo2, lo2 + 2.0));
    };
    const ConditionCReport rep = check_condition_C(eta, sampler, 50, rng);
    EXPECT_TRUE(rep.satisfied_on_samples());
    EXPECT_LE(rep.max_residual(), 1e-12 * 2.0);
}

TEST(PathDifference, AffineMapExactAtRoundingLevel) {
    Rng rng(10);
    const EtaMap eta = make_convex_eta();
    const PathDifferenceReport rep = check_eq_path_difference(
        eta, interval_pair_sampler("convex", 3), 20, rng);
    EXPECT_TRUE(rep.satisfied_on_samples());
    EXPECT_LE(rep.max_residual, 1e-15 * 4.0);
}

TEST(PathDifference, EqualParametersGiveZero) {
    Rng rng(11);
    const EtaMap eta = make_eta1();
    const PathDifferenceReport rep = check_eq_path_difference(
        eta, fixed_pair(1.5, 3.0), 1, rng, {{0.3, 0.3}, {0.7, 0.7}});
    EXPECT_EQ(rep.max_residual, 0.0);
}

TEST(PathDifference, Eta1SameComponentPairAcrossGrid) {
    Rng rng(12);
    const EtaMap eta = make_eta1();
    const PathDifferenceReport rep = check_eq_path_difference(
        eta, fixed_pair(1.5, 3.0), 1, rng, {{0.2, 0.9}, {0.9, 0.2}, {0.25, 0.75}});
    EXPECT_EQ(rep.inapplicable, 0u);
    EXPECT_LE(rep.max_residual, 1e-15 * 4.0);
}

TEST(PathDifference, BoundedByConditionCResiduals) {
    // Triangle inequality: the path-difference residual at (t1, t2) is at
    // most the sum of the first-identity residuals at t1 and t2 plus a
    // rounding floor of a few ulps.
    Rng rng(13);
    for (const char* name : {"convex", "eta1", "eta2"}) {
        const EtaMap eta = make_eta(name);
        PairSampler sampler = interval_pair_sampler(name, 2);
        for (int rep_i = 0; rep_i < 10; ++rep_i) {
            const auto pair = sampler(rng);
            PairSampler fixed = [&pair](Rng&) { return pair; };
            Rng dummy(0);
            const ConditionCReport crep =
                check_condition_C(eta, fixed, 1, dummy, uniform_grid(21));
            const PathDifferenceReport prep = check_eq_path_difference(
                eta, fixed, 1, dummy, ordered_pairs_grid(11));

            std::map<double, double> res1_by_t;
            for (const ConditionCSample& s : crep.samples)
                res1_by_t[s.t] = s.residual_first;
            const double scale =
                std::max({1.0, operator_norm(pair.first), operator_norm(pair.second)});
            for (const PathDifferenceSample& s : prep.samples) {
                const auto i1 = res1_by_t.find(s.t1);
                const auto i2 = res1_by_t.find(s.t2);
                if (i1 == res1_by_t.end() || i2 == res1_by_t.end()) continue;
                EXPECT_LE(s.residual, i1->second + i2->second + 1e-15 * scale);
            }
        }
    }
}

} // namespace
