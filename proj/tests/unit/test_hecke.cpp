#include "helpers.hpp"

#include <coxl2/builtins.hpp>
#include <coxl2/finite_hecke.hpp>
#include <coxl2/growth.hpp>
#include <coxl2/hecke.hpp>
#include <coxl2/verify.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace coxl2;
using namespace coxl2::testing;

TEST(Hecke, QuadraticRelationInRankOne)
{
    CoxeterSystem w = builtin_system("a1");
    HeckeAlgebra<Rational> h(w, {rat(5)});
    Element s = w.normal_form({0});
    auto es = h.basis(s);
    auto sq = h.multiply(es, es);
    // e_s^2 = q + (q-1) e_s
    EXPECT_EQ(sq, (HeckeElement<Rational>{{w.identity(), rat(5)}, {s, rat(4)}}));
    auto a = h.idempotent_a(1);
    EXPECT_EQ(a, (HeckeElement<Rational>{{w.identity(), rat(1, 6)}, {s, rat(1, 6)}}));
    auto hh = h.idempotent_h(1);
    // h_s = (q - e_s)/(1+q)
    EXPECT_EQ(hh, (HeckeElement<Rational>{{w.identity(), rat(5, 6)}, {s, rat(-1, 6)}}));
    EXPECT_EQ(h.multiply(a, hh), HeckeElement<Rational>{});
    EXPECT_EQ(add(a, hh), h.unit());
    EXPECT_EQ(h.inner(es, es), rat(5));
}

TEST(Hecke, SymbolicIdempotentsInB2)
{
    CoxeterSystem w({"s", "t"}, {{1, 4}, {4, 1}}, {0, 1});
    auto h = symbolic_hecke(w);
    for (Subset t = 0; t <= 3; ++t) {
        auto a = h.idempotent_a(t);
        EXPECT_EQ(h.multiply(a, a), a);
        auto hh = h.idempotent_h(t);
        EXPECT_EQ(h.multiply(hh, hh), hh);
        EXPECT_EQ(h.star(a), a);
    }
}

TEST(Hecke, BraidRelationHoldsForGenerators)
{
    CoxeterSystem w = builtin_system("a2");
    HeckeAlgebra<Rational> h(w, {rat(7, 3)});
    auto es = h.basis(w.normal_form({0})), et = h.basis(w.normal_form({1}));
    EXPECT_EQ(h.multiply(h.multiply(es, et), es), h.multiply(h.multiply(et, es), et));
}

TEST(Hecke, SolomonDimensionsAgainstPermutationCount)
{
    // oracle: for S_3 at q = 3, sum q^{inv(p)} over permutations with descent set T
    CoxeterSystem w = builtin_system("a2");
    WeightedSpace l2(w, {rat(3)});
    std::vector<Rational> by_descent(4, Rational(0));
    Rational total = 0;
    std::vector<int> p{0, 1, 2};
    do {
        int inv = 0;
        Subset d = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (p[i] > p[j]) ++inv;
        for (int i = 0; i < 2; ++i)
            if (p[i] > p[i + 1]) d |= singleton(i);
        by_descent[d] += pow(rat(3), inv);
        total += pow(rat(3), inv);
    } while (std::next_permutation(p.begin(), p.end()));
    EXPECT_EQ(total, rat(52));
    SolomonReport rep = verify_solomon(l2);
    EXPECT_TRUE(rep.ok()) << rep.failure;
    for (const auto& e : rep.entries) {
        Rational expected = by_descent[e.t] / total;
        EXPECT_EQ(e.dim_D, expected);
        EXPECT_EQ(e.dim_G, expected);
        EXPECT_EQ(descent_class_ratio(l2, e.t), expected);
    }
    EXPECT_EQ(by_descent[3] / total, rat(27, 52));
    EXPECT_EQ(by_descent[1] / total, rat(3, 13));
}

TEST(Hecke, SolomonAtUnitParameterCountsElements)
{
    WeightedSpace l2(builtin_system("a2"), {rat(1)});
    SolomonReport rep = verify_solomon(l2);
    ASSERT_TRUE(rep.ok()) << rep.failure;
    std::vector<Rational> dims;
    for (const auto& e : rep.entries) dims.push_back(e.dim_D);
    EXPECT_EQ(dims, (std::vector<Rational>{rat(1, 6), rat(1, 3), rat(1, 3), rat(1, 6)}));
}

TEST(Hecke, VonNeumannDimensionOfAIsReciprocalGrowth)
{
    CoxeterSystem w = builtin_system("b3");
    WeightedSpace l2(w, {rat(2)});
    GrowthData g(w);
    // dim L^2 a_S = 1/W(q)
    EXPECT_EQ(von_neumann_dim(l2, subspace_A(l2, w.all())), g.inverse_at({rat(2)}));
    EXPECT_EQ(von_neumann_dim(l2, subspace_H(l2, 0)), rat(1));
}

TEST(Hecke, VonNeumannDimensionRejectsNonInvariantSubspace)
{
    WeightedSpace l2(builtin_system("a2"), {rat(2)});
    Subspace line{"span e_s", Matrix::from_columns({l2.unit(1)}, l2.dim())};
    EXPECT_FALSE(is_left_invariant(l2, line));
    EXPECT_THROW(von_neumann_dim(l2, line), CheckFailed);
}

TEST(Hecke, IdentityTableAllPasses)
{
    for (const char* name : {"a2", "pentagon"}) {
        auto results = check_hecke_identities(builtin_system(name), std::nullopt);
        EXPECT_FALSE(results.empty());
        for (const auto& r : results) EXPECT_TRUE(r.passed) << name << ": " << r.name << " " << r.detail;
    }
}
