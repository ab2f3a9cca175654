#include "lpb/forms.hpp"

#include <gtest/gtest.h>

using namespace lpb;

namespace {

Poly Z(int nvars, int i) { return Poly::variable(nvars, i); }

ProjectiveOneForm form(int n, int d, std::vector<Poly> a) { return ProjectiveOneForm(n, d, std::move(a)); }

// -Z1 dZ0 + Z0 dZ1 on P^2.
ProjectiveOneForm rotation()
{
    return form(2, 0, {-Z(3, 1), Z(3, 0), Poly(3)});
}

// Coefficients of omega^j, laid out like a kernel vector, as a matrix column.
RationalMatrix restricted_pullback(const LinearProjection& f, int d)
{
    const RationalMatrix pull = pullback_matrix(f, d);
    const auto basis = kernel_basis(contraction_matrix(2, d));
    RationalMatrix m(pull.rows(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const RationalVector col = pull * basis[c];
        for (std::size_t r = 0; r < col.size(); ++r)
            m(r, c) = col[r];
    }
    return m;
}

} // namespace

TEST(ContractRadial, Examples)
{
    EXPECT_TRUE(contract_radial(rotation()).is_zero());

    const auto radial = form(2, 0, {Z(3, 0), Poly(3), Poly(3)});
    EXPECT_EQ(contract_radial(radial), Z(3, 0) * Z(3, 0));
    EXPECT_FALSE(is_twisted_form(radial));

    const auto pairs = form(2, 0, {Z(3, 2), Z(3, 2), -Z(3, 0) - Z(3, 1)});
    EXPECT_TRUE(contract_radial(pairs).is_zero());
}

TEST(ProjectiveOneForm, RejectsMalformedCoefficients)
{
    EXPECT_THROW(form(2, 0, {Z(3, 0), Z(3, 1)}), std::invalid_argument);
    EXPECT_THROW(form(2, 0, {Z(3, 0) * Z(3, 0), Poly(3), Poly(3)}), std::invalid_argument);
    EXPECT_THROW(form(2, 0, {Z(4, 0), Poly(4), Poly(4)}), std::invalid_argument);
}

TEST(ProjectiveOneForm, CoordinatesRoundTrip)
{
    const auto w = random_form(3, 1, 4);
    EXPECT_EQ(ProjectiveOneForm::from_coordinates(3, 1, w.coordinates()), w);
}

TEST(IntegrabilityDefect, EveryPlaneFormIsIntegrable)
{
    for (int d = 0; d <= 3; ++d) {
        for (const auto& v : kernel_basis(contraction_matrix(2, d)))
            EXPECT_TRUE(is_integrable(ProjectiveOneForm::from_coordinates(2, d, v)));
        for (std::uint64_t seed = 0; seed < 5; ++seed)
            EXPECT_TRUE(is_integrable(random_form(2, d, seed)));
    }
}

TEST(IntegrabilityDefect, ProductFormRegression)
{
    // Z1 Z2 dZ0 - Z0 Z2 dZ1 = Z2 (Z1 dZ0 - Z0 dZ1) is integrable.
    const int nv = 4;
    const auto w = form(3, 1, {Z(nv, 1) * Z(nv, 2), -(Z(nv, 0) * Z(nv, 2)), Poly(nv), Poly(nv)});
    EXPECT_TRUE(is_twisted_form(w));
    const auto defects = integrability_defect(w);
    ASSERT_EQ(defects.size(), 4u);
    for (const auto& f : defects)
        EXPECT_TRUE(f.value.is_zero()) << f.i << f.j << f.k;
}

TEST(IntegrabilityDefect, ContactFormRegression)
{
    // Z1 dZ0 - Z0 dZ1 + Z3 dZ2 - Z2 dZ3 is a contact form on P^3.
    const int nv = 4;
    const auto w = form(3, 0, {Z(nv, 1), -Z(nv, 0), Z(nv, 3), -Z(nv, 2)});
    EXPECT_TRUE(is_twisted_form(w));
    const auto defects = integrability_defect(w);
    ASSERT_EQ(defects.size(), 4u);
    const BigRational two = 2;
    EXPECT_EQ(defects[0].value, -Z(nv, 3) * two); // 012
    EXPECT_EQ(defects[1].value, Z(nv, 2) * two);  // 013
    EXPECT_EQ(defects[2].value, -Z(nv, 1) * two); // 023
    EXPECT_EQ(defects[3].value, Z(nv, 0) * two);  // 123
    EXPECT_FALSE(is_integrable(w));
}

TEST(IntegrabilityDefect, LogarithmicForm)
{
    // G dF - F dG with F = Z0, G = Z1.
    const int nv = 4;
    const auto w = form(3, 0, {Z(nv, 1), -Z(nv, 0), Poly(nv), Poly(nv)});
    EXPECT_TRUE(is_integrable(w));
}

TEST(Pullback, CoordinateProjection)
{
    const auto w = random_form(2, 2, 9);
    const auto mu = pullback_linear(LinearProjection::coordinate(3), w);
    ASSERT_EQ(mu.n(), 3);
    const std::vector<Poly> lift = {Z(4, 0), Z(4, 1), Z(4, 2)};
    for (std::size_t i = 0; i < 3; ++i)
        EXPECT_EQ(mu[i], w[i].compose(lift));
    EXPECT_TRUE(mu[3].is_zero());
}

TEST(Pullback, IdentityOnThePlane)
{
    const auto w = random_form(2, 1, 2);
    EXPECT_EQ(pullback_linear(LinearProjection::coordinate(2), w), w);
}

TEST(Pullback, RandomPullbacksAreIntegrableTwistedForms)
{
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto f = random_projection(4, seed);
        const auto mu = pullback_linear(f, random_form(2, 2, seed + 100));
        EXPECT_EQ(mu.d(), 2);
        EXPECT_TRUE(contract_radial(mu).is_zero());
        EXPECT_TRUE(is_integrable(mu));
    }
}

TEST(Pullback, IsLinear)
{
    const auto f = random_projection(3, 5);
    const auto a = random_form(2, 1, 1), b = random_form(2, 1, 2);
    RationalVector sum = a.coordinates();
    const auto bc = b.coordinates();
    for (std::size_t i = 0; i < sum.size(); ++i)
        sum[i] = sum[i] * 3 - bc[i];
    const auto lhs = pullback_linear(f, ProjectiveOneForm::from_coordinates(2, 1, sum)).coordinates();
    auto pa = pullback_linear(f, a).coordinates();
    const auto pb = pullback_linear(f, b).coordinates();
    for (std::size_t i = 0; i < pa.size(); ++i)
        pa[i] = pa[i] * 3 - pb[i];
    EXPECT_EQ(lhs, pa);
}

TEST(Pullback, InjectiveOnPlaneForms)
{
    for (int n = 3; n <= 4; ++n)
        for (int d = 0; d <= 3; ++d) {
            const auto m = restricted_pullback(random_projection(n, static_cast<std::uint64_t>(10 * n + d)), d);
            EXPECT_EQ(static_cast<std::int64_t>(rank(m)), dimension_vdn(2, d)) << "n=" << n << " d=" << d;
        }
}

TEST(Pullback, RejectsNonPlaneSource)
{
    EXPECT_THROW(pullback_linear(LinearProjection::coordinate(4), random_form(3, 1, 0)), std::invalid_argument);
}

TEST(LinearProjection, RejectsRankDeficientRows)
{
    EXPECT_THROW(LinearProjection(RationalMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}}), std::invalid_argument);
    EXPECT_THROW(LinearProjection(RationalMatrix{{1, 0}, {0, 1}}), std::invalid_argument);
}

TEST(DimensionVdn, Examples)
{
    EXPECT_EQ(dimension_vdn(2, 2), 15);
    EXPECT_EQ(dimension_vdn(2, 0), 3);
    EXPECT_EQ(dimension_vdn(3, 1), 20);
    for (int d = 0; d <= 10; ++d)
        EXPECT_EQ(dimension_vdn(2, d), (d + 1) * (d + 3));
}

TEST(DimensionVdn, MatchesKernelOfContraction)
{
    for (int n = 2; n <= 4; ++n)
        for (int d = 0; d <= 2; ++d)
            EXPECT_EQ(static_cast<std::int64_t>(kernel_basis(contraction_matrix(n, d)).size()), dimension_vdn(n, d));
}

TEST(RandomForm, LiesInTheRightSpace)
{
    EXPECT_EQ(kernel_basis(contraction_matrix(2, 1)).size(), 8u);
    EXPECT_EQ(kernel_basis(contraction_matrix(3, 0)).size(), 6u);
    const auto a = random_form(2, 1, 77);
    EXPECT_EQ(a.n(), 2);
    EXPECT_EQ(a.d(), 1);
    EXPECT_TRUE(is_twisted_form(a));
    EXPECT_TRUE(is_twisted_form(random_form(3, 0, 5)));
    EXPECT_FALSE(a.is_zero());
}

TEST(RandomForm, DeterministicPerSeed)
{
    EXPECT_EQ(random_form(3, 2, 42), random_form(3, 2, 42));
    EXPECT_NE(random_form(3, 2, 42), random_form(3, 2, 43));
    EXPECT_EQ(random_projection(5, 1).matrix(), random_projection(5, 1).matrix());
}

TEST(Recover, RoundTrip)
{
    for (int d = 0; d <= 3; ++d)
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            const auto f = random_projection(3, seed);
            const auto w = random_form(2, d, seed + 50);
            const auto back = recover(f, pullback_linear(f, w));
            ASSERT_TRUE(back.has_value());
            EXPECT_EQ(*back, w);
        }
}

TEST(Recover, CoordinateRotation)
{
    const auto f = LinearProjection::coordinate(3);
    const auto back = recover(f, pullback_linear(f, rotation()));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, rotation());
}

TEST(Recover, GenericFormIsNotAPullback)
{
    for (int d = 0; d <= 2; ++d)
        EXPECT_FALSE(recover(random_projection(3, 3), random_form(3, d, 8)).has_value()) << d;
}

TEST(Recover, AmbientMismatch)
{
    EXPECT_THROW(recover(random_projection(4, 0), random_form(3, 1, 0)), std::invalid_argument);
}
