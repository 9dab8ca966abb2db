#include "helpers.hpp"

#include <coxl2/builtins.hpp>
#include <coxl2/complex.hpp>
#include <coxl2/right_angled.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace coxl2;
using namespace coxl2::testing;

TEST(SimplicialComplex, FaceCountsOfStandardComplexes)
{
    EXPECT_EQ(points(4).f_vector(), (std::vector<long>{1, 4}));
    EXPECT_EQ(polygon(6).f_vector(), (std::vector<long>{1, 6, 6}));
    EXPECT_EQ(path_complex(4).f_vector(), (std::vector<long>{1, 4, 3}));
    EXPECT_EQ(octahedron(3).f_vector(), (std::vector<long>{1, 6, 12, 8}));
    EXPECT_EQ(empty_complex().f_vector(), (std::vector<long>{1}));
    EXPECT_EQ(empty_complex().dimension(), -1);
    EXPECT_EQ(cone(polygon(5)).f_vector(), (std::vector<long>{1, 6, 10, 5}));
    EXPECT_EQ(suspension(points(2)).f_vector(), (std::vector<long>{1, 4, 4}));
    EXPECT_EQ(join(points(2), points(3)).f_vector(), (std::vector<long>{1, 5, 6}));
    EXPECT_EQ(disjoint_union(polygon(4), points(2)).f_vector(), (std::vector<long>{1, 6, 4}));
}

TEST(SimplicialComplex, FacesAreClosedUnderSubsets)
{
    SimplicialComplex l({"a", "b", "c", "d"}, {{0, 1, 2}, {2, 3}});
    EXPECT_TRUE(l.has_face({0, 2}));
    EXPECT_TRUE(l.has_face({}));
    EXPECT_FALSE(l.has_face({1, 3}));
    EXPECT_EQ(l.facets(), (std::vector<Face>{{0, 1, 2}, {2, 3}}));
    EXPECT_EQ(l.euler_characteristic(), 1);
    EXPECT_THROW(SimplicialComplex({"a"}, {{0, 1}}), InvalidArgument);
}

TEST(SimplicialComplex, HPolynomialOfOctahedraIsBinomial)
{
    for (int n = 1; n <= 5; ++n) EXPECT_EQ(h_polynomial(octahedron(n), n), upoly({1, 1}).pow(n)) << n;
    // polygon: h = 1 + (m-2) t + t^2
    EXPECT_EQ(h_polynomial(polygon(7), 2), upoly({1, 5, 1}));
}

TEST(SimplicialComplex, RelativeCohomology)
{
    // (disk, boundary) is a 2-sphere relative pair
    SimplicialComplex disk = cone(polygon(5));
    int apex = 5;
    auto b = relative_betti(disk, [&](const Face& f) { return std::find(f.begin(), f.end(), apex) == f.end(); });
    EXPECT_EQ(b, (std::vector<long>{0, 0, 1}));
    // absolute cohomology of a circle
    auto c = relative_betti(polygon(4), [](const Face& f) { return f.empty(); });
    EXPECT_EQ(c, (std::vector<long>{1, 1}));
}

TEST(SimplicialComplex, FlagDetection)
{
    EXPECT_TRUE(is_flag(polygon(4)));
    EXPECT_FALSE(is_flag(polygon(3)));
    EXPECT_TRUE(is_flag(flag_complex(icosahedron_graph())));
    EXPECT_EQ(flag_complex(icosahedron_graph()).f_vector(), (std::vector<long>{1, 12, 30, 20}));
}

TEST(MirroredComplex, ChamberOfFiniteGroupIsASimplex)
{
    // for finite W every K^U is contractible, so only U = {} contributes
    MirroredComplex k = chamber(builtin_system("a2"));
    EXPECT_EQ(k.base().f_vector(), (std::vector<long>{1, 4, 5, 2}));
    EXPECT_EQ(k.relative_betti(0), (std::vector<long>{1, 0, 0}));
    for (Subset u = 1; u <= 3; ++u) EXPECT_EQ(k.relative_betti(u), (std::vector<long>{0, 0, 0}));
}

TEST(MirroredComplex, NerveShortcutAgreesWithCochains)
{
    for (const char* name : {"pentagon", "triangle-(3,3,3)", "b3", "k-points-3"}) {
        CoxeterSystem w = builtin_system(name);
        MirroredComplex k = chamber(w);
        for (Subset u = 0; u <= w.all(); ++u) EXPECT_EQ(k.relative_betti(u), k.relative_betti_direct(u)) << name;
    }
}

TEST(MirroredComplex, NerveOfRightAngledSystem)
{
    EXPECT_EQ(nerve(builtin_system("pentagon")).f_vector(), (std::vector<long>{1, 5, 5}));
    EXPECT_EQ(nerve(builtin_system("octahedral")).f_vector(), (std::vector<long>{1, 6, 12, 8}));
    EXPECT_EQ(nerve(builtin_system("h3")).f_vector(), (std::vector<long>{1, 3, 3, 1}));
}

TEST(MirroredComplex, ParseAndValidate)
{
    CoxeterSystem w = builtin_system("a1xa1");
    const std::string text = "vertices: a b c\nfacets:\na b\nb c\nmirror s1: a\nmirror s2: c\n";
    MirroredComplex z = parse_mirrored_complex(text, w);
    EXPECT_EQ(z.base().f_vector(), (std::vector<long>{1, 3, 2}));
    EXPECT_NO_THROW(z.validate(w));
    EXPECT_EQ(z.relative_betti(3), (std::vector<long>{0, 1}));

    // both mirrors meet at b, but in D_inf {s,t} is not spherical
    CoxeterSystem d = builtin_system("dihedral-infinite");
    EXPECT_THROW(parse_mirrored_complex("vertices: a b c\nfacets:\na b\nb c\nmirror s: a b\nmirror t: b c\n", d),
                 InvalidArgument);

    EXPECT_THROW(parse_mirrored_complex("vertices: a\nfacets:\na x\n", w), ParseError);
    EXPECT_THROW(parse_mirrored_complex("vertices: a\nmirror u: a\n", w), Error);
}

TEST(MirroredComplex, TypeCensusMatchesFaces)
{
    MirroredComplex k = chamber(builtin_system("pentagon"));
    long total = 0;
    for (const auto& [t, c] : k.type_census()) total += c;
    EXPECT_EQ(total, k.base().euler_characteristic());
}
