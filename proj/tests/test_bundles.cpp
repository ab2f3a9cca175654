#include "lpb/bundles.hpp"
#include "lpb/foliation.hpp"
#include "lpb/symfunc.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace lpb;

namespace {

const GrassContext kCtx = GrassContext::for_projections(3);
const VirtualBundleExpr kT = VirtualBundleExpr::tautological();

TruncatedPoly e(int i, int cap = 9) { return elementary(3, cap, i); }
TruncatedPoly one(int cap = 9) { return TruncatedPoly::one(3, cap); }

VirtualBundleExpr random_actual(std::mt19937_64& gen, int depth)
{
    const auto pick = gen() % 4;
    if (depth == 0 || pick == 0)
        return gen() % 2 ? kT : dual(kT);
    if (pick == 1)
        return sym(static_cast<int>(gen() % 3), random_actual(gen, depth - 1));
    if (pick == 2)
        return tensor(random_actual(gen, depth - 1), random_actual(gen, depth - 1));
    return plus(random_actual(gen, depth - 1), random_actual(gen, depth - 1));
}

VirtualBundleExpr random_virtual(std::mt19937_64& gen)
{
    auto a = random_actual(gen, 2);
    return gen() % 2 ? minus(a, random_actual(gen, 2)) : a;
}

} // namespace

TEST(ChernRoots, SymOneOfTautological)
{
    const auto r = chern_roots(sym(1, kT), kCtx);
    EXPECT_EQ(r, RootSet::of(3, {LinearForm{-1, 0, 0}, LinearForm{0, -1, 0}, LinearForm{0, 0, -1}}));
}

TEST(ChernRoots, SymTwoOfDual)
{
    const auto r = chern_roots(sym(2, dual(kT)), kCtx);
    EXPECT_EQ(r, RootSet::of(3, {LinearForm{2, 0, 0}, LinearForm{1, 1, 0}, LinearForm{1, 0, 1}, LinearForm{0, 2, 0},
                                  LinearForm{0, 1, 1}, LinearForm{0, 0, 2}}));
}

TEST(ChernRoots, RankOfE0)
{
    const auto r = chern_roots(ed_class(0), kCtx);
    EXPECT_EQ(r.virtual_rank(), 3);
}

TEST(ChernRoots, SymOfVirtualIsRejected)
{
    EXPECT_THROW(chern_roots(sym(2, minus(kT, dual(kT))), kCtx), std::invalid_argument);
    EXPECT_THROW(sym(-1, kT), std::invalid_argument);
}

TEST(ChernRoots, DualNegatesEveryRoot)
{
    const auto r = chern_roots(sym(3, kT), kCtx);
    EXPECT_EQ(chern_roots(dual(sym(3, kT)), kCtx), r.dual());
    EXPECT_EQ(r.dual().dual(), r);
}

TEST(TotalChern, Examples)
{
    EXPECT_EQ(total_chern(kT, kCtx, 3), one(3) - e(1, 3) + e(2, 3) - e(3, 3));
    EXPECT_EQ(total_chern(dual(kT), kCtx, 3), one(3) + e(1, 3) + e(2, 3) + e(3, 3));
    const auto a = tensor(sym(2, kT), dual(kT));
    EXPECT_EQ(total_chern(minus(a, a), kCtx, 9), one());
}

TEST(TotalChern, WhitneyFormula)
{
    std::mt19937_64 gen(12);
    for (int trial = 0; trial < 25; ++trial) {
        const auto a = random_virtual(gen), b = random_virtual(gen);
        EXPECT_EQ(total_chern(plus(a, b), kCtx, 9), mul(total_chern(a, kCtx, 9), total_chern(b, kCtx, 9)))
            << a.to_string() << " + " << b.to_string();
    }
}

TEST(TotalSegre, InvertsTotalChern)
{
    std::mt19937_64 gen(13);
    std::vector<VirtualBundleExpr> exprs;
    for (int d = 0; d <= 4; ++d)
        exprs.push_back(ed_class(d));
    for (int i = 0; i < 20; ++i)
        exprs.push_back(random_virtual(gen));
    for (const auto& x : exprs) {
        const auto s = total_segre(x, kCtx, 9);
        EXPECT_EQ(mul(s, total_chern(x, kCtx, 9)), one()) << x.to_string();
        EXPECT_EQ(s, inverse_unit_series(total_chern(x, kCtx, 9))) << x.to_string();
    }
}

TEST(TotalSegre, LineBundleGeometricSeries)
{
    // s = 1 / (1 + r) for a single root r.
    TruncatedPoly geometric(1, 6), alternating(1, 6);
    for (int j = 0; j <= 6; ++j) {
        geometric.add_term({j}, 1);
        alternating.add_term({j}, j % 2 == 0 ? 1 : -1);
    }
    EXPECT_EQ(total_segre(RootSet::of(1, {LinearForm{-1}}), 6), geometric);
    EXPECT_EQ(total_segre(RootSet::of(1, {LinearForm{1}}), 6), alternating);
}

TEST(TotalSegre, E0EvaluationOrders)
{
    const auto lhs = total_segre(ed_class(0), kCtx, 9);
    const auto rhs = mul(total_segre(tensor(sym(1, kT), kT), kCtx, 9), total_chern(sym(2, kT), kCtx, 9));
    EXPECT_EQ(lhs, rhs);
}

TEST(TotalSegre, E2IntegratesTo1320)
{
    const int g = kCtx.dimension();
    EXPECT_EQ(integrate(kCtx, graded_part(total_segre(ed_class(2), kCtx, g), g)), 1320);
}

TEST(ChernCharacter, Examples)
{
    EXPECT_EQ(chern_character_graded(sym(4, dual(kT)), kCtx, 0, 6), TruncatedPoly::constant(3, 6, 15));
    EXPECT_EQ(chern_character_graded(sym(1, dual(kT)), kCtx, 1, 6), e(1, 6));
    EXPECT_EQ(chern_character_graded(sym(2, dual(kT)), kCtx, 1, 6), e(1, 6) * BigRational(4));
    EXPECT_THROW(chern_character_graded(kT, kCtx, 7, 6), std::out_of_range);
}

TEST(ChernCharacter, RankOfSymmetricPowers)
{
    for (int d = 0; d <= 8; ++d)
        EXPECT_EQ(chern_character_graded(sym(d, dual(kT)), kCtx, 0, 3).constant_term(), BigRational(binomial(d + 2, 2)));
}

TEST(DualPaths, AgreeOnEdForAllDegrees)
{
    for (int n = 3; n <= 4; ++n) {
        const auto ctx = GrassContext::for_projections(n);
        const int g = ctx.dimension();
        for (int d = 0; d <= 4; ++d) {
            const auto roots = chern_roots(ed_class(d), ctx);
            const auto s = total_segre(roots, g);
            const auto ch = chern_character(roots.dual(), g);
            for (int k = 0; k <= g; ++k)
                EXPECT_EQ(segre_via_characters(ch, k), graded_part(s, k)) << "n=" << n << " d=" << d << " k=" << k;
        }
    }
}

TEST(DegreeBounds, FirstCharacterCoefficientIsCubic)
{
    std::vector<InterpolationPoint> pts;
    for (int d = 0; d <= 4; ++d) {
        const auto ch1 = chern_character_graded(sym(d, dual(kT)), kCtx, 1, 1);
        const auto q = to_elementary(ch1);
        EXPECT_EQ(q.terms().size(), d == 0 ? 0u : 1u);
        pts.emplace_back(BigRational(d), q.coefficient({1, 0, 0}));
    }
    const UniPoly q1 = lagrange_interpolate(std::span<const InterpolationPoint>(pts));
    EXPECT_EQ(q1.degree(), 3);
    // d(d+1)(d+2)/6
    EXPECT_EQ(q1, UniPoly({0, make_rational(1, 3), make_rational(1, 2), make_rational(1, 6)}));
}

TEST(DegreeBounds, SegreCoefficientsArePolynomialsOfDegreeAtMost3k)
{
    for (int k = 1; k <= 3; ++k) {
        // 3k + 2 nodes: one more than a degree-3k fit needs.
        std::map<Exponent, std::vector<InterpolationPoint>> series;
        const int nodes = 3 * k + 2;
        for (int d = 0; d < nodes; ++d) {
            const auto s = graded_part(total_segre(sym(d, dual(kT)), kCtx, k), k);
            const auto el = to_elementary(s);
            for (int b3 = 0; 3 * b3 <= k; ++b3)
                for (int b2 = 0; 3 * b3 + 2 * b2 <= k; ++b2) {
                    const Exponent b = {k - 3 * b3 - 2 * b2, b2, b3};
                    series[b].emplace_back(BigRational(d), el.coefficient(b));
                }
        }
        long top = -1;
        for (const auto& [b, pts] : series) {
            ASSERT_EQ(static_cast<int>(pts.size()), nodes);
            const auto p = lagrange_interpolate(std::span<const InterpolationPoint>(pts));
            EXPECT_LE(p.degree(), 3 * k);
            top = std::max(top, p.degree());
        }
        EXPECT_EQ(top, 3 * k) << "k=" << k;
    }
}
