#include "helpers.hpp"

#include <coxl2/error.hpp>
#include <coxl2/roots.hpp>

#include <gtest/gtest.h>

using namespace coxl2;
using namespace coxl2::testing;

TEST(Rational, ParsesFractionsDecimalsAndExponents)
{
    EXPECT_EQ(parse_rational("-2/5"), rat(-2, 5));
    EXPECT_EQ(parse_rational("0.125"), rat(1, 8));
    EXPECT_EQ(parse_rational("1e-3"), rat(1, 1000));
    EXPECT_EQ(parse_rational("4/6"), rat(2, 3));
    EXPECT_THROW(parse_rational("abc"), ParseError);
    EXPECT_THROW(parse_rational("1/0"), Error);
}

TEST(Rational, DecimalRoundsHalfAwayFromZero)
{
    EXPECT_EQ(to_decimal(rat(2, 3), 3), "0.667");
    EXPECT_EQ(to_decimal(rat(-1, 8), 2), "-0.13");
    EXPECT_EQ(to_decimal(rat(7, 729), 6), "0.009602");
    EXPECT_EQ(to_decimal(rat(5), 2), "5.00");
}

TEST(Multiparam, RejectsNonPositiveEntries)
{
    EXPECT_EQ(parse_multiparam("1/2,3").size(), 2u);
    EXPECT_THROW(parse_multiparam("0"), InvalidArgument);
    EXPECT_THROW(parse_multiparam("1,-2"), InvalidArgument);
}

TEST(Polynomial, BinomialExpansion)
{
    Polynomial p = upoly({1, 1}).pow(5);
    std::vector<Rational> expect{1, 5, 10, 10, 5, 1};
    EXPECT_EQ(p.dense_univariate(), expect);
}

TEST(Polynomial, MultivariateArithmeticAndText)
{
    Polynomial t1 = Polynomial::variable(2, 0), t2 = Polynomial::variable(2, 1);
    Polynomial one(2, 1);
    Polynomial p = (one + t1) * (one + t2);
    EXPECT_EQ(p.to_string(), "1 + t2 + t1 + t1*t2");
    EXPECT_EQ(p.evaluate({rat(1, 2), rat(1, 3)}), rat(2));
    EXPECT_EQ(divide_exact(p, one + t1), one + t2);
    EXPECT_THROW(divide_exact(p, one + t1 * t1), InvalidArgument);
}

TEST(Polynomial, GcdOfSharedFactor)
{
    Polynomial a = upoly({-1, 1}) * upoly({2, 1});
    Polynomial b = upoly({-1, 1}) * upoly({-3, 1});
    EXPECT_EQ(gcd(a, b), upoly({-1, 1}));
    EXPECT_EQ(gcd(upoly({1, 1}), upoly({2, 1})), upoly({1}));
}

TEST(RationalFunction, ReducesToLowestTerms)
{
    RationalFunction f(upoly({-1, 0, 1}), upoly({-1, 1}));
    EXPECT_TRUE(f.is_polynomial());
    EXPECT_EQ(f, RationalFunction(upoly({1, 1})));
    // equal functions have identical representations
    RationalFunction g(upoly({2, 2}), upoly({4}));
    EXPECT_EQ(g.to_string(), "1/2 + 1/2*t");
}

TEST(RationalFunction, EvaluationAndPoles)
{
    RationalFunction f = urf({1}, {1, -1});
    EXPECT_EQ(f.evaluate({rat(1, 2)}), rat(2));
    EXPECT_THROW(f.evaluate({rat(1)}), PoleError);
    EXPECT_THROW(f / RationalFunction(1, 0), DivisionByZero);
}

TEST(RationalFunction, SeriesOfGeometricAndSquare)
{
    auto s = urf({1}, {1, -1}).series_coefficients_1d(6);
    for (const auto& c : s) EXPECT_EQ(c, 1);
    auto s2 = urf({1}, {1, -2, 1}).series_coefficients_1d(6);
    for (std::size_t n = 0; n < s2.size(); ++n) EXPECT_EQ(s2[n], Rational(static_cast<long>(n + 1)));
}

TEST(RationalFunction, InvertVariables)
{
    // (1 - t)/(1 + t) at t -> 1/t is (t - 1)/(t + 1)
    EXPECT_EQ(urf({1, -1}, {1, 1}).invert_variables(), urf({-1, 1}, {1, 1}));
}

TEST(Roots, SqrtTwoIsIsolated)
{
    auto roots = isolate_positive_roots(UniCoeffs{-2, 0, 1});
    ASSERT_EQ(roots.size(), 1u);
    AlgebraicNumber x = roots[0].value;
    x.refine(rat(1, 1000000));
    EXPECT_LT(x.lo() * x.lo(), 2);
    EXPECT_GT(x.hi() * x.hi(), 2);
    EXPECT_LE(x.width(), rat(1, 1000000));
    EXPECT_EQ(x.decimal(5), "1.41421");
}

TEST(Roots, MultiplicitiesAndRationalRoots)
{
    // (t - 1)^2 (t - 3) (t + 2)
    UniCoeffs p = uni::mul(uni::mul(UniCoeffs{-1, 1}, UniCoeffs{-1, 1}), uni::mul(UniCoeffs{-3, 1}, UniCoeffs{2, 1}));
    auto roots = isolate_positive_roots(p);
    ASSERT_EQ(roots.size(), 2u);
    EXPECT_EQ(roots[0].multiplicity, 2u);
    EXPECT_EQ(compare(roots[0].value, Rational(1)), 0);
    EXPECT_EQ(roots[1].multiplicity, 1u);
    EXPECT_EQ(compare(roots[1].value, Rational(3)), 0);
}

TEST(Roots, FourPlusMinusSqrtFifteen)
{
    auto roots = isolate_positive_roots(UniCoeffs{1, -8, 1});
    ASSERT_EQ(roots.size(), 2u);
    // 4 - sqrt 15 = 0.12701665..., 4 + sqrt 15 = 7.87298334...
    EXPECT_GT(compare(roots[0].value, rat(12701, 100000)), 0);
    EXPECT_LT(compare(roots[0].value, rat(12702, 100000)), 0);
    EXPECT_GT(compare(roots[1].value, rat(787298, 100000)), 0);
    EXPECT_LT(compare(roots[1].value, rat(787299, 100000)), 0);
    EXPECT_TRUE(roots[0].value < roots[1].value);
}

TEST(Roots, ZeroPolynomialThrows)
{
    EXPECT_THROW(isolate_positive_roots(UniCoeffs{0}), Error);
}

TEST(Roots, UnitIntervalDetection)
{
    EXPECT_TRUE(has_root_in_unit_interval(UniCoeffs{-1, 1}));
    EXPECT_TRUE(has_root_in_unit_interval(UniCoeffs{1, -8, 1}));
    EXPECT_FALSE(has_root_in_unit_interval(UniCoeffs{-3, 1}));
}
