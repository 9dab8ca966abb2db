#include "helpers.hpp"

#include <coxl2/builtins.hpp>
#include <coxl2/growth.hpp>

#include <gtest/gtest.h>

using namespace coxl2;
using namespace coxl2::testing;

namespace {

RationalFunction poincare(std::initializer_list<unsigned> degrees)
{
    Polynomial p = upoly({1});
    for (unsigned d : degrees) p *= q_integer(d);
    return RationalFunction(p);
}

// Bott: W(t) = W_0(t) / prod (1 - t^{m_i}) for the affine group over W_0 with exponents m_i
RationalFunction bott(std::initializer_list<unsigned> degrees)
{
    Polynomial den = upoly({1});
    for (unsigned d : degrees) {
        std::vector<Rational> c(d - 1, Rational(0));
        c[0] = 1;
        c.push_back(-1);
        den *= Polynomial::univariate(c);  // 1 - t^{d-1}
    }
    return poincare(degrees) / RationalFunction(den);
}

}  // namespace

TEST(Growth, FiniteGroupsArePoincarePolynomials)
{
    EXPECT_EQ(GrowthData(builtin_system("a2")).growth_series(), poincare({2, 3}));
    EXPECT_EQ(GrowthData(builtin_system("b3")).growth_series(), poincare({2, 4, 6}));
    EXPECT_EQ(GrowthData(builtin_system("h3")).growth_series(), poincare({2, 6, 10}));
    EXPECT_EQ(GrowthData(builtin_system("f4")).growth_series(), poincare({2, 6, 8, 12}));
}

TEST(Growth, AffineGroupsMatchBott)
{
    EXPECT_EQ(GrowthData(builtin_system("triangle-(3,3,3)")).growth_series(), bott({2, 3}));
    EXPECT_EQ(GrowthData(builtin_system("triangle-(2,4,4)")).growth_series(), bott({2, 4}));
    EXPECT_EQ(GrowthData(builtin_system("triangle-(2,3,6)")).growth_series(), bott({2, 6}));
}

TEST(Growth, InfiniteDihedralTwoParameters)
{
    GrowthData g(builtin_system("dihedral-infinite"));
    Polynomial t1 = Polynomial::variable(2, 0), t2 = Polynomial::variable(2, 1), one(2, 1);
    EXPECT_EQ(g.inverse_series(), RationalFunction(one - t1 * t2, (one + t1) * (one + t2)));
}

TEST(Growth, RightAngledFromFaceCounts)
{
    // 1/W(t) = f_L(-t/(1+t)); icosahedron f = (1,12,30,20), pentagon (1,5,5)
    EXPECT_EQ(GrowthData(builtin_system("dodecahedral")).inverse_series(),
              RationalFunction(upoly({1, -1}) * upoly({1, -8, 1}), upoly({1, 1}).pow(3)));
    EXPECT_EQ(GrowthData(builtin_system("pentagon")).inverse_series(), urf({1, -3, 1}, {1, 2, 1}));
    EXPECT_EQ(GrowthData(builtin_system("k-points-3")).inverse_series(), urf({1, -2}, {1, 1}));
}

TEST(Growth, SeriesMatchesEnumerationForTriangleGroup)
{
    CoxeterSystem w = builtin_system("triangle-(2,3,7)");
    auto series = GrowthData(w).growth_series().series_coefficients_1d(12);
    std::vector<Rational> hist(13, Rational(0));
    for (const auto& e : w.enumerate_ball(12)) hist[e.length()] += 1;
    EXPECT_EQ(series, hist);
}

TEST(Growth, DodecahedralRadius)
{
    GrowthData g(builtin_system("dodecahedral"));
    auto rho = g.radius_of_convergence();
    ASSERT_TRUE(rho.has_value());
    rho->refine(rat(1, 1000000));
    EXPECT_LE(rho->width(), rat(1, 1000000));
    // contains 4 - sqrt 15, the smaller root of t^2 - 8t + 1
    UniCoeffs p{1, -8, 1};
    EXPECT_LT(uni::sign_at(p, rho->lo()) * uni::sign_at(p, rho->hi()), 0);
    EXPECT_LT(rho->hi(), rat(1, 4));
}

TEST(Growth, DodecahedralRegionTags)
{
    GrowthData g(builtin_system("dodecahedral"));
    EXPECT_EQ(g.classify_region({rat(1, 10)}).tag, RegionTag::interior_R);
    for (int q = 1; q <= 7; ++q) EXPECT_EQ(g.classify_region({rat(q)}).tag, RegionTag::intermediate) << q;
    EXPECT_EQ(g.classify_region({rat(8)}).tag, RegionTag::interior_Rinv);
}

TEST(Growth, BoundaryOfRegion)
{
    // (D_inf)^2 has radius 1: q = 1 lies on the boundary of both sides
    GrowthData g(builtin_system("product-dihedral-2"));
    RegionClass rc = g.classify_region({rat(1)});
    EXPECT_TRUE(rc.closure_R);
    EXPECT_TRUE(rc.closure_Rinv);
    EXPECT_EQ(g.classify_region({rat(1, 2)}).tag, RegionTag::interior_R);
    EXPECT_EQ(g.classify_region({rat(2)}).tag, RegionTag::interior_Rinv);
    EXPECT_EQ(GrowthData(builtin_system("a2")).classify_region({rat(5)}).tag, RegionTag::all);
}

TEST(Growth, DescentClassRatiosForA2)
{
    // at q = 1 the ratio counts elements with descent set exactly T
    GrowthData g(builtin_system("a2"));
    EXPECT_EQ(g.wT_over_W_at(0, {rat(1)}), rat(1, 6));
    EXPECT_EQ(g.wT_over_W_at(1, {rat(1)}), rat(1, 3));
    EXPECT_EQ(g.wT_over_W_at(2, {rat(1)}), rat(1, 3));
    EXPECT_EQ(g.wT_over_W_at(3, {rat(1)}), rat(1, 6));
    // q = 3: W = (1+3)(1+3+9) = 52; classes {e}, {s,ts}, {t,st}, {sts}
    EXPECT_EQ(g.wT_over_W_at(1, {rat(3)}), rat(3 + 9, 52));
    EXPECT_EQ(g.wT_over_W_at(3, {rat(3)}), rat(27, 52));
}

TEST(Growth, ParameterCountIsChecked)
{
    GrowthData g(builtin_system("dihedral-infinite"));
    EXPECT_THROW(g.inverse_at({rat(1, 2)}), InvalidArgument);
    EXPECT_THROW(g.radius_of_convergence(), Unsupported);
}
