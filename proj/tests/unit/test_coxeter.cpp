#include "helpers.hpp"

#include <coxl2/builtins.hpp>
#include <coxl2/classification.hpp>
#include <coxl2/coxeter.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace coxl2;

namespace {

// s_i acts on permutations by swapping positions i and i+1 (right action)
std::vector<int> permutation_of(const Word& w, int n)
{
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int s : w) std::swap(p[s], p[s + 1]);
    return p;
}

int inversions(const std::vector<int>& p)
{
    int k = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++k;
    return k;
}

}  // namespace

TEST(CoxeterSystem, RejectsMalformedMatrices)
{
    EXPECT_THROW(CoxeterSystem({"s", "t"}, {{1, 3}, {2, 1}}), InvalidArgument);
    EXPECT_THROW(CoxeterSystem({"s", "t"}, {{1, 1}, {1, 1}}), InvalidArgument);
    EXPECT_THROW(CoxeterSystem({"s", "s"}, {{1, 3}, {3, 1}}), InvalidArgument);
    // odd m forces a common parameter class
    EXPECT_THROW(CoxeterSystem({"s", "t"}, {{1, 3}, {3, 1}}, {0, 1}), InvalidArgument);
    EXPECT_NO_THROW(CoxeterSystem({"s", "t"}, {{1, 4}, {4, 1}}, {0, 1}));
}

TEST(CoxeterSystem, TextFormatRoundTrip)
{
    CoxeterSystem w = parse_system("generators: a b c\nm a b 5\nm b c inf\nclasses: x x y\n");
    EXPECT_EQ(w.m(0, 1), 5u);
    EXPECT_EQ(w.m(1, 2), kInf);
    EXPECT_EQ(w.m(0, 2), 2u);
    EXPECT_EQ(w.num_classes(), 2u);
    CoxeterSystem v = parse_system(serialize_system(w));
    EXPECT_EQ(v.matrix(), w.matrix());
    EXPECT_EQ(v.classes(), w.classes());
    EXPECT_EQ(v.labels(), w.labels());
    EXPECT_THROW(parse_system("generators: a b\nmatrix:\n1 3\n"), ParseError);
}

TEST(CoxeterSystem, ShortlexNormalFormsInA2)
{
    CoxeterSystem w = builtin_system("a2");
    EXPECT_EQ(w.format(w.normal_form(w.parse_word("t s t"))), "s t s");
    EXPECT_EQ(w.normal_form(w.parse_word("s s")), w.identity());
    EXPECT_EQ(w.format(w.normal_form(w.parse_word("t s t s"))), "s t");
    EXPECT_EQ(w.descent_set(w.normal_form(w.parse_word("s t"))), singleton(1));
    EXPECT_EQ(w.left_descent_set(w.normal_form(w.parse_word("s t"))), singleton(0));
    Element x = w.normal_form(w.parse_word("s t"));
    EXPECT_EQ(w.multiply(x, w.inverse(x)), w.identity());
}

TEST(CoxeterSystem, SymmetricGroupAgainstPermutations)
{
    // oracle: A_{n-1} is S_n, length is the inversion number
    for (int n : {3, 4, 5}) {
        CoxeterSystem w = builtin_system("a" + std::to_string(n - 1));
        auto ball = w.enumerate_finite_subgroup(w.all());
        std::set<std::vector<int>> perms;
        for (const auto& e : ball) {
            auto p = permutation_of(e.word, n);
            EXPECT_EQ(inversions(p), static_cast<int>(e.length()));
            perms.insert(p);
            for (int s = 0; s < n - 1; ++s)
                EXPECT_EQ(contains(w.descent_set(e), s), p[s] > p[s + 1]);
        }
        long fact = 1;
        for (int k = 2; k <= n; ++k) fact *= k;
        EXPECT_EQ(static_cast<long>(perms.size()), fact);
        EXPECT_EQ(static_cast<long>(ball.size()), fact);
    }
}

TEST(CoxeterSystem, FiniteOrdersFromTheTable)
{
    std::vector<std::pair<std::string, long>> orders{{"a1", 2},  {"a3", 24},  {"b3", 48},   {"d4", 192},
                                                      {"h3", 120}, {"f4", 1152}, {"i2-7", 14}, {"a1xa1", 4}};
    for (const auto& [name, order] : orders) {
        CoxeterSystem w = builtin_system(name);
        auto types = classify_finite(w, w.all());
        ASSERT_TRUE(types.has_value()) << name;
        EXPECT_EQ(finite_order(*types), order) << name;
        EXPECT_EQ(static_cast<long>(w.enumerate_finite_subgroup(w.all()).size()), order) << name;
    }
}

TEST(CoxeterSystem, LongestElementLength)
{
    // number of reflections: A3 6, B3 9, H3 15
    EXPECT_EQ(builtin_system("a3").longest_element(7).length(), 6u);
    EXPECT_EQ(builtin_system("b3").longest_element(7).length(), 9u);
    EXPECT_EQ(builtin_system("h3").longest_element(7).length(), 15u);
}

TEST(CoxeterSystem, SphericalSubsets)
{
    CoxeterSystem w = builtin_system("pentagon");
    SphericalPoset p = w.spherical_poset();
    EXPECT_EQ(p.subsets.size(), 11u);  // empty, 5 vertices, 5 edges
    EXPECT_FALSE(w.is_finite());
    CoxeterSystem t = builtin_system("triangle-(3,3,3)");
    EXPECT_EQ(t.spherical_poset().subsets.size(), 7u);
    CoxeterSystem h = builtin_system("triangle-(2,3,7)");
    EXPECT_FALSE(h.is_spherical(h.all()));
}

TEST(CoxeterSystem, InfiniteDihedralBall)
{
    CoxeterSystem w = builtin_system("dihedral-infinite");
    auto ball = w.enumerate_ball(6);
    std::vector<int> hist(7, 0);
    for (const auto& e : ball) ++hist[e.length()];
    EXPECT_EQ(hist, (std::vector<int>{1, 2, 2, 2, 2, 2, 2}));
}

TEST(CoxeterSystem, BudgetExceededKeepsCompletedSpheres)
{
    CoxeterSystem w = builtin_system("pentagon");
    try {
        w.enumerate_ball(20, Budget{100, 0});
        FAIL() << "expected BudgetExceeded";
    } catch (const BudgetExceeded& e) {
        EXPECT_GE(e.completed_length(), 1);
        EXPECT_LE(e.partial().size(), 100u);
        for (const auto& x : e.partial()) EXPECT_LE(static_cast<int>(x.length()), e.completed_length());
    }
}

TEST(CoxeterSystem, ClassExponentsAndWeights)
{
    CoxeterSystem w({"s", "t"}, {{1, 4}, {4, 1}}, {0, 1});
    Element e = w.normal_form(w.parse_word("s t s"));
    EXPECT_EQ(w.class_exponents(e), (Exponents{2, 1}));
    EXPECT_EQ(w.weight(e, {Rational(2), Rational(3)}), 12);
    EXPECT_THROW(w.weight(e, {Rational(2)}), InvalidArgument);
}

TEST(Builtins, CatalogNamesResolve)
{
    std::set<std::string> names;
    for (const auto& e : builtin_catalog()) {
        EXPECT_NO_THROW(builtin_system(e.name)) << e.name;
        names.insert(e.name);
    }
    // the acceptance battery
    for (const char* n : {"a1", "a2", "b3", "h3", "dihedral-infinite", "product-dihedral-2", "k-points-3", "pentagon",
                          "dodecahedral", "triangle-(3,3,3)", "example-existence-m10"})
        EXPECT_TRUE(names.count(n)) << n;
    EXPECT_THROW(builtin_system("no-such-group"), InvalidArgument);
}
