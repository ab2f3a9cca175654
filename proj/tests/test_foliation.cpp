#include "lpb/foliation.hpp"
#include "lpb/forms.hpp"

#include <gtest/gtest.h>

using namespace lpb;

namespace {

BigRational q(long p, long r = 1) { return make_rational(p, r); }

// Expansion of (20/27) C(d+4,5) (d^2+6d+11)(d^2+2d+3), computed independently.
const UniPoly kClosedFormN3({0, q(44, 9), q(145, 9), q(3779, 162), q(179, 9), q(589, 54), q(35, 9), q(47, 54), q(1, 9),
                             q(1, 162)});

} // namespace

TEST(EdClass, VirtualRank)
{
    const auto ctx = GrassContext::for_projections(3);
    EXPECT_EQ(chern_roots(ed_class(0), ctx).virtual_rank(), 3);
    EXPECT_EQ(chern_roots(ed_class(2), ctx).virtual_rank(), 15);
    EXPECT_EQ(dimension_vdn(2, 2), 15);
    EXPECT_THROW(ed_class(-1), std::invalid_argument);
}

TEST(EdClass, RankMatchesFormsDimension)
{
    const auto ctx = GrassContext::for_projections(3);
    for (int d = 0; d <= 10; ++d) {
        const long r = lpb_invariants(d, 3).rank_ed;
        EXPECT_EQ(r, (d + 1) * (d + 3));
        EXPECT_EQ(chern_roots(ed_class(d), ctx).virtual_rank(), r);
        EXPECT_EQ(dimension_vdn(2, d), r);
    }
}

TEST(LpbInvariants, Examples)
{
    EXPECT_EQ(lpb_invariants(2, 3), (LpbInvariants{2, 3, 15, 17, 3}));
    EXPECT_EQ(lpb_invariants(0, 3).rank_ed, 3);
    EXPECT_EQ(lpb_invariants(0, 3).dim_lpb, 5);
    EXPECT_EQ(lpb_invariants(3, 4), (LpbInvariants{3, 4, 24, 29, 6}));
    EXPECT_THROW(lpb_invariants(2, 2), std::invalid_argument);
}

TEST(DegreeLpb, KnownValues)
{
    EXPECT_EQ(degree_lpb(2, 3), 1320);
    EXPECT_EQ(degree_lpb(3, 3), 10640);
    EXPECT_EQ(degree_lpb(4, 3), 57120);
    EXPECT_EQ(degree_lpb(2, 4), 739000);
    EXPECT_EQ(degree_lpb(3, 4), BigInt("39943925"));
    EXPECT_EQ(degree_lpb(2, 5), BigInt("259757260"));
}

TEST(DegreeLpb, FormalRange)
{
    EXPECT_TRUE(is_formal(0));
    EXPECT_TRUE(is_formal(1));
    EXPECT_FALSE(is_formal(2));
    EXPECT_EQ(degree_lpb(1, 3), 80);
    EXPECT_EQ(degree_lpb(1, 4), 4035);
    // The Segre integral vanishes at d = 0.
    for (int n = 3; n <= 5; ++n)
        EXPECT_EQ(degree_lpb(0, n), 0) << n;
}

TEST(DegreeLpb, MethodsAgreeOnGrid)
{
    for (int n = 3; n <= 4; ++n)
        for (int d = 0; d <= 6; ++d)
            EXPECT_EQ(degree_lpb(d, n, DegreeMethod::chern_quotient), degree_lpb(d, n, DegreeMethod::ch_partition))
                << "d=" << d << " n=" << n;
    EXPECT_NO_THROW(degree_lpb(3, 4, DegreeMethod::both));
}

TEST(DegreeLpb, PositiveForGeometricDegrees)
{
    for (int n = 3; n <= 5; ++n)
        for (int d = 1; d <= (n == 5 ? 3 : 8); ++d)
            EXPECT_GT(degree_lpb(d, n), 0) << "d=" << d << " n=" << n;
}

TEST(DegreeLpb, FaultInjectionIsDetected)
{
    DegreeOptions opts;
    opts.perturb_character_path = true;
    EXPECT_THROW(degree_lpb(2, 3, DegreeMethod::both, opts), InconsistencyError);
    EXPECT_EQ(degree_lpb(2, 3, DegreeMethod::ch_partition, opts), 1321);
}

TEST(DegreeLpb, ArgumentErrors)
{
    EXPECT_THROW(degree_lpb(-1, 3), std::invalid_argument);
    EXPECT_THROW(degree_lpb(2, 2), std::invalid_argument);
}

TEST(ReferenceFormula, Examples)
{
    EXPECT_EQ(reference_formula(3, 2), 1320);
    EXPECT_EQ(reference_formula(3, 4), 57120);
    EXPECT_EQ(reference_formula(4, 2), 739000);
    EXPECT_THROW(reference_formula(5, 2), std::invalid_argument);
    EXPECT_THROW(reference_formula(4, 0), std::invalid_argument);
}

TEST(ReferenceFormula, MatchesEngineForN3)
{
    for (int d = 2; d <= 10; ++d)
        EXPECT_EQ(reference_formula(3, d), degree_lpb(d, 3)) << d;
}

TEST(ReferenceFormula, LiteralAndExpandedFormsAgree)
{
    for (int n = 3; n <= 4; ++n)
        for (int d = 1; d <= 25; ++d)
            EXPECT_EQ(reference_polynomial(n)(BigRational(d)), BigRational(reference_formula(n, d)))
                << "n=" << n << " d=" << d;
}

TEST(ClosedForm, N3MatchesFrozenExpansion)
{
    const UniPoly p = closed_form(3);
    EXPECT_EQ(p, kClosedFormN3);
    EXPECT_EQ(p.degree(), 9);
    EXPECT_EQ(p.leading_coefficient(), q(1, 162));
    EXPECT_EQ(p, reference_polynomial(3));
    EXPECT_TRUE(compare_coefficients(p, reference_polynomial(3)).empty());
}

TEST(ClosedForm, N3PredictsDirectComputation)
{
    const UniPoly p = closed_form(3);
    for (int d = 2; d <= 20; ++d)
        EXPECT_EQ(p(BigRational(d)), BigRational(degree_lpb(d, 3))) << d;
}

TEST(ClosedForm, InterpolationThroughTenNodes)
{
    std::vector<InterpolationPoint> pts;
    for (int d = 2; d <= 11; ++d)
        pts.emplace_back(BigRational(d), BigRational(degree_lpb(d, 3)));
    EXPECT_EQ(lagrange_interpolate(std::span<const InterpolationPoint>(pts)), kClosedFormN3);
}

TEST(ClosedForm, UsesProviderAndLogsEveryNode)
{
    std::vector<int> seen;
    const UniPoly p = closed_form(
        3, [](int d) { return reference_formula(3, d); }, [&](int d, const BigInt&) { seen.push_back(d); });
    EXPECT_EQ(p, kClosedFormN3);
    // g = 3: nodes 2..11, held out at 12.
    ASSERT_EQ(seen.size(), 11u);
    EXPECT_EQ(seen.front(), 2);
    EXPECT_EQ(seen.back(), 12);
}

TEST(ClosedForm, HeldOutNodeMismatchIsFatal)
{
    const auto bad = [](int d) { return d == 12 ? BigInt(reference_formula(3, d) + 1) : reference_formula(3, d); };
    EXPECT_THROW(closed_form(3, bad), InconsistencyError);
    EXPECT_THROW(closed_form(2), std::invalid_argument);
}

TEST(CompareCoefficients, ReportsEachDifference)
{
    const auto diff = compare_coefficients(UniPoly({1, 2, 3}), UniPoly({1, 5}));
    ASSERT_EQ(diff.size(), 2u);
    EXPECT_EQ(diff[0].power, 1);
    EXPECT_EQ(diff[0].computed, 2);
    EXPECT_EQ(diff[0].reference, 5);
    EXPECT_EQ(diff[1].power, 2);
}
