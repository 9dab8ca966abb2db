// One line per acceptance criterion: PASS/FAIL, wall time and its limit.
// Exit status is the number of failed criteria.

#include <coxl2/builtins.hpp>
#include <coxl2/finite_hecke.hpp>
#include <coxl2/growth.hpp>
#include <coxl2/piecewise.hpp>
#include <coxl2/right_angled.hpp>
#include <coxl2/verify.hpp>
#include <coxl2/weighted.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace coxl2;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            note = what;
        }
    }
};

Rational rat(long n, long d = 1)
{
    Rational r(n, d);
    r.canonicalize();
    return r;
}

Polynomial upoly(std::initializer_list<long> coeffs)
{
    std::vector<Rational> c;
    for (long x : coeffs) c.emplace_back(x);
    return Polynomial::univariate(c);
}

std::mt19937_64 rng(20261016);

Rational random_q()
{
    // numerator and denominator in 1..9, so q ranges over [1/9, 9]
    std::uniform_int_distribution<long> d(1, 9);
    return rat(d(rng), d(rng));
}

std::vector<Rational> histogram(const CoxeterSystem& w, unsigned n)
{
    std::vector<Rational> h(n + 1, Rational(0));
    for (const auto& e : w.enumerate_ball(n)) h[e.length()] += 1;
    return h;
}

Outcome growth_oracle()
{
    Outcome o;
    std::vector<std::pair<std::string, unsigned>> battery{{"a2", 10},       {"b3", 10},
                                                          {"h3", 10},       {"dihedral-infinite", 10},
                                                          {"product-dihedral-2", 10}, {"pentagon", 10},
                                                          {"triangle-(3,3,3)", 10},   {"dodecahedral", 5}};
    for (const auto& [name, n] : battery) {
        CoxeterSystem w = builtin_system(name).with_single_class();
        auto series = GrowthData(w).growth_series().series_coefficients_1d(n);
        o.require(series == histogram(w, n), name + ": series and ball histogram differ");
    }
    return o;
}

Outcome dihedral()
{
    Outcome o;
    GrowthData g(builtin_system("dihedral-infinite"));
    Polynomial t1 = Polynomial::variable(2, 0), t2 = Polynomial::variable(2, 1), one(2, 1);
    o.require(g.inverse_series() == RationalFunction(one - t1 * t2, (one + t1) * (one + t2)),
              "1/W = " + g.inverse_series().to_string());
    return o;
}

Outcome dodecahedral()
{
    Outcome o;
    GrowthData g(builtin_system("dodecahedral"));
    RationalFunction expected(upoly({1, -1}) * upoly({1, -8, 1}), upoly({1, 1}).pow(3));
    o.require(g.inverse_series() == expected, "1/W = " + g.inverse_series().to_string());
    auto rho = g.radius_of_convergence();
    o.require(rho.has_value(), "no radius");
    if (!rho) return o;
    rho->refine(rat(1, 1000000));
    o.require(rho->width() <= rat(1, 1000000), "rho interval too wide");
    // 4 - sqrt 15 in [lo, hi]  <=>  lo <= 4 - sqrt15 <= hi; check via (4 - x)^2 vs 15 with x < 4
    auto below_root = [](const Rational& x) { return (4 - x) * (4 - x) > 15; };
    o.require(below_root(rho->lo()) && !below_root(rho->hi()), "rho does not contain 4 - sqrt 15");
    o.require(g.classify_region({rat(1, 10)}).tag == RegionTag::interior_R, "q = 1/10 not interior_R");
    for (int q = 1; q <= 7; ++q)
        o.require(g.classify_region({rat(q)}).tag == RegionTag::intermediate, "q = " + std::to_string(q) + " not intermediate");
    o.require(g.classify_region({rat(8)}).tag == RegionTag::interior_Rinv, "q = 8 not interior_Rinv");
    return o;
}

Outcome formula_vs_direct_finite()
{
    Outcome o;
    std::vector<CoxeterSystem> battery{builtin_system("a2"), CoxeterSystem({"s", "t"}, {{1, 4}, {4, 1}}, {0, 1}),
                                       builtin_system("a1xa1")};
    for (const auto& w : battery) {
        GrowthData g(w);
        MirroredComplex k = chamber(w);
        for (int trial = 0; trial < 5; ++trial) {
            Multiparam q;
            for (std::size_t c = 0; c < w.num_classes(); ++c) q.push_back(random_q());
            o.require(direct_betti_finite(k, g, q).degrees == betti_formula(k, g, q).degrees,
                      serialize_system(w) + ": chamber direct != formula");
            if (w.rank() == 2 && w.m(0, 1) == 2) {
                MirroredComplex z = circle_complex(w);
                o.require(direct_betti_finite(z, g, q).degrees == betti_formula(z, g, q).degrees,
                          "circle direct != formula");
            }
        }
    }
    return o;
}

Outcome hecke()
{
    Outcome o;
    auto require_all = [&](const std::vector<CheckResult>& rs, const std::string& where) {
        for (const auto& r : rs) o.require(r.passed, where + ": " + r.name + " " + r.detail);
    };
    for (const auto& w : {builtin_system("a2"), CoxeterSystem({"s", "t"}, {{1, 4}, {4, 1}}, {0, 1}),
                          builtin_system("dihedral-infinite")})
        require_all(check_hecke_identities(w, std::nullopt), "symbolic " + serialize_system(w));
    for (const char* name : {"a2", "b2", "a1xa1", "b3"}) {
        CoxeterSystem w = builtin_system(name);
        for (int trial = 0; trial < 5; ++trial) {
            Multiparam q;
            for (std::size_t c = 0; c < w.num_classes(); ++c) q.push_back(random_q());
            require_all(check_hecke_identities(w, q), name);
        }
    }
    SolomonReport rep = verify_solomon(WeightedSpace(builtin_system("a2"), {rat(1)}));
    std::vector<Rational> dims;
    for (const auto& e : rep.entries) dims.push_back(e.dim_D);
    o.require(rep.ok(), "solomon: " + rep.failure);
    o.require(dims == std::vector<Rational>{rat(1, 6), rat(1, 3), rat(1, 3), rat(1, 6)}, "solomon dims at q = 1");
    return o;
}

Outcome existence()
{
    Outcome o;
    ExistenceReport r = example_existence(10);
    auto same_up_to_scalar = [](const Polynomial& a, const Polynomial& b) {
        return a * b.leading_coefficient() == b * a.leading_coefficient();
    };
    o.require(same_up_to_scalar(r.chi_a_hat.numerator(), upoly({1, -15, 34, -15, 1})),
              "numerator chi(A^) = " + r.chi_a_hat.numerator().to_string());
    o.require(same_up_to_scalar(r.chi_l.numerator(), upoly({1, -26, 62, -26, 1})),
              "numerator chi(L) = " + r.chi_l.numerator().to_string());
    auto close = [&](const std::vector<IsolatedRoot>& roots, std::vector<double> want, const std::string& what) {
        o.require(roots.size() == want.size(), what + ": wrong number of roots");
        for (std::size_t i = 0; i < roots.size() && i < want.size(); ++i) {
            AlgebraicNumber x = roots[i].value;
            x.refine(rat(1, 100000));
            o.require(std::abs(x.midpoint().get_d() - want[i]) <= 0.005, what + ": root " + x.decimal(4));
        }
    };
    close(r.roots_a_hat, {.08, .48, 2.10, 12.34}, "A^");
    close(r.roots_l, {.04, .48, 2.08, 23.40}, "L");
    return o;
}

Outcome hpoly()
{
    Outcome o;
    std::vector<std::pair<SimplicialComplex, int>> cases{{flag_complex(icosahedron_graph()), 3}, {polygon(5), 2}};
    for (int m = 4; m <= 12; ++m) cases.emplace_back(polygon(m), 2);
    for (int n = 1; n <= 4; ++n) cases.emplace_back(octahedron(n), n);
    for (const auto& [l, n] : cases) {
        HpolyCheck c = verify_hpoly_identity(l, n);
        o.require(c.equal, "identity fails for f = " + std::to_string(l.f_vector().size()) + " entries, n = " + std::to_string(n));
    }
    return o;
}

RationalFunction rq(std::initializer_list<long> num, std::initializer_list<long> den)
{
    return RationalFunction(upoly(num), upoly(den));
}

Outcome calculus()
{
    Outcome o;
    RationalFunction zero(1, Rational(0));
    for (int k = 2; k <= 6; ++k) {
        CalculusResult r = calculus_points(k);
        AlgebraicNumber at(rat(1, k - 1));
        o.require(r.betti.size() >= 2, "P_k has too few degrees");
        if (r.betti.size() < 2) continue;
        o.require(r.betti[0] == PiecewiseRational::step(at, rq({1, -(k - 1)}, {1, 1}), zero), "b0(P" + std::to_string(k) + ")");
        o.require(r.betti[1] == PiecewiseRational::step(at, zero, rq({-1, k - 1}, {1, 1})), "b1(P" + std::to_string(k) + ")");
    }
    AlgebraicNumber one(rat(1));
    for (int n = 1; n <= 4; ++n) {
        CalculusResult r = calculus_octahedron(n);
        RationalFunction down = rq({1, -1}, {1, 1}).pow(n), up = rq({-1, 1}, {1, 1}).pow(n);
        o.require(static_cast<int>(r.betti.size()) == n + 1, "O_n degrees");
        if (static_cast<int>(r.betti.size()) != n + 1) continue;
        o.require(r.betti[0] == PiecewiseRational::step(one, down, zero), "b0(O" + std::to_string(n) + ")");
        o.require(r.betti[n] == PiecewiseRational::step(one, zero, up), "bn(O" + std::to_string(n) + ")");
        for (int i = 1; i < n; ++i) o.require(r.betti[i] == PiecewiseRational(zero), "middle degrees of O_n");
    }
    PiecewiseRational shrink = PiecewiseRational::step(one, rq({1, -1}, {1, 1}), zero);
    PiecewiseRational shift = PiecewiseRational::step(one, zero, rq({-1, 1}, {1, 1}));
    PiecewiseRational cone_factor(rq({1}, {1, 1}));
    for (const char* expr : {"P3", "union(P2, O2)", "join(P2, P3)", "cone(P4)", "union(P2, P4)"}) {
        CalculusResult l = betti_calculus(expr);
        CalculusResult s = calculus_suspension(l), c = calculus_cone(l);
        for (std::size_t i = 0; i < l.betti.size(); ++i) {
            PiecewiseRational expect_s = l.betti[i] * shrink;
            if (i > 0) expect_s = expect_s + l.betti[i - 1] * shift;
            o.require(i < s.betti.size() && s.betti[i] == expect_s, std::string("susp ") + expr);
            o.require(i < c.betti.size() && c.betti[i] == l.betti[i] * cone_factor, std::string("cone ") + expr);
        }
        o.require(s.betti.size() > l.betti.size() && s.betti[l.betti.size()] == l.betti.back() * shift, std::string("susp top ") + expr);
    }
    for (const char* expr : {"P3", "O3", "union(P2, O2)", "join(P3, cone(O2))", "susp(union(P2, P3))", "cone(P4)",
                             "join(O2, P2)", "union(O2, O3)", "susp(susp(P2))", "point", "empty"}) {
        CalculusResult r = betti_calculus(expr);
        o.require(alternating_sum(r.betti) == PiecewiseRational(chi_q(r.complex)), std::string("chi mismatch for ") + expr);
    }
    return o;
}

Outcome duality()
{
    Outcome o;
    for (const char* name : {"dodecahedral", "product-dihedral-2"}) {
        CoxeterSystem w = builtin_system(name);
        GrowthData g(w);
        int n = nerve(w).dimension() + 1;
        RationalFunction inv = g.inverse_series();
        RationalFunction sign(1, Rational(n % 2 ? -1 : 1));
        o.require(inv == sign * inv.invert_variables(), std::string(name) + ": 1/W(q) != (-1)^n/W(1/q)");
        MirroredComplex k = chamber(w);
        for (const Rational& q : {rat(1, 10), rat(1, 7), rat(1, 20)}) {
            if (g.classify_region({q}).tag != RegionTag::interior_R) continue;
            Rational low = betti_formula(k, g, {q}).degrees[0];
            Rational qi = 1 / q;
            auto high = betti_formula(k, g, {qi}).degrees;
            o.require(static_cast<int>(high.size()) == n + 1 && high[n] == low,
                      std::string(name) + ": b^0(q) != b^n(1/q)");
        }
    }
    return o;
}

Outcome ruins()
{
    Outcome o;
    for (const auto& w : {builtin_system("a2"), CoxeterSystem({"s", "t"}, {{1, 4}, {4, 1}}, {0, 1})}) {
        GrowthData g(w);
        for (int trial = 0; trial < 3; ++trial) {
            Multiparam q;
            for (std::size_t c = 0; c < w.num_classes(); ++c) q.push_back(random_q());
            for (Subset t = 0; t <= w.all(); ++t) {
                RuinReport r = ruin_homology_finite(w, w.all(), t, q);
                o.require(r.concentrated_in == cardinality(t), "T = " + w.format(t) + " not concentrated in degree |T|");
            }
            o.require(ruin_homology_finite(w, w.all(), 0, q).dims[0] == g.inverse_at(q), "T = {} dimension != 1/W(q)");
        }
    }
    return o;
}

struct Criterion {
    int id;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main()
{
    std::vector<Criterion> criteria{
        {1, "growth series against ball enumeration", 60, growth_oracle},
        {2, "infinite dihedral 1/W(t1,t2)", 1, dihedral},
        {3, "dodecahedral 1/W, radius and region tags", 5, dodecahedral},
        {4, "finite W: direct Betti numbers equal the formula", 10, formula_vs_direct_finite},
        {5, "Hecke identities and Solomon dimensions", 30, hecke},
        {6, "existence example m = 10", 5, existence},
        {7, "h-polynomial identity", 10, hpoly},
        {8, "Betti calculus closed forms", 5, calculus},
        {9, "duality and reciprocity", 5, duality},
        {10, "ruin homology concentration", 10, ruins},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = secs <= c.limit_seconds;
        bool pass = o.ok && in_time;
        if (!pass) ++failed;
        std::printf("%s  %2d  %-50s %7.3f s (limit %g s)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    c.limit_seconds, o.ok ? "" : ("  " + o.note).c_str(), in_time ? "" : "  over time limit");
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed;
}
