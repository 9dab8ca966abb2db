#include <coxl2/classification.hpp>
#include <coxl2/growth.hpp>

#include <sstream>

namespace coxl2 {

std::string to_string(RegionTag tag)
{
    switch (tag) {
    case RegionTag::interior_R: return "interior_R";
    case RegionTag::boundary_R: return "boundary_R";
    case RegionTag::interior_Rinv: return "interior_Rinv";
    case RegionTag::boundary_Rinv: return "boundary_Rinv";
    case RegionTag::intermediate: return "intermediate";
    case RegionTag::all: return "all";
    }
    return "?";
}

std::string RegionClass::witness() const
{
    // first zero of lambda -> 1/W(lambda q), for q and for q^{-1}
    auto show = [](const std::optional<AlgebraicNumber>& l) { return l ? l->to_string() : std::string("none"); };
    return "first zero along q: " + show(lambda_q) + "; along q^-1: " + show(lambda_qinv);
}

RationalFunction sum_fractions(const std::vector<std::pair<Polynomial, Polynomial>>& terms, std::size_t nvars)
{
    std::map<std::string, std::pair<Polynomial, Polynomial>> grouped;
    for (const auto& [num, den] : terms) {
        auto key = den.to_string();
        auto it = grouped.find(key);
        if (it == grouped.end())
            grouped.emplace(key, std::make_pair(num, den));
        else
            it->second.first += num;
    }
    RationalFunction acc(nvars, 0);
    for (const auto& [key, nd] : grouped)
        if (!nd.first.is_zero()) acc += RationalFunction(nd.first.with_nvars(nvars), nd.second.with_nvars(nvars));
    return acc;
}

GrowthData::GrowthData(const CoxeterSystem& w) : w_(w), poset_(w.spherical_poset())
{
    std::size_t n = nvars();
    // connected spherical components by enumeration, products otherwise
    std::map<Subset, std::pair<Polynomial, Exponents>> component_cache;
    for (Subset t : poset_.subsets) {
        Polynomial p(n, 1);
        Exponents top(n, 0);
        for (Subset c : diagram_components(w_, t)) {
            auto it = component_cache.find(c);
            if (it == component_cache.end()) {
                Polynomial pc(n);
                Exponents lc(n, 0);
                std::size_t best = 0;
                for (const auto& e : w_.enumerate_finite_subgroup(c)) {
                    Exponents ex = w_.class_exponents(e);
                    pc += Polynomial::monomial(ex);
                    if (e.length() >= best) {
                        best = e.length();
                        lc = ex;
                    }
                }
                it = component_cache.emplace(c, std::make_pair(pc, lc)).first;
            }
            p *= it->second.first;
            for (std::size_t i = 0; i < n; ++i) top[i] += it->second.second[i];
        }
        polys_.emplace(t, p);
        longest_.emplace(t, top);
    }
    finite_ = poset_.contains(w_.all());
    std::vector<std::pair<Polynomial, Polynomial>> terms;
    for (Subset t : poset_.subsets) {
        int sign = cardinality(t) % 2 ? -1 : 1;
        terms.emplace_back(Polynomial::monomial(longest_.at(t), sign), polys_.at(t));
    }
    inverse_ = sum_fractions(terms, n);
}

const Polynomial& GrowthData::spherical_growth_poly(Subset t) const
{
    auto it = polys_.find(t);
    if (it == polys_.end()) throw InvalidArgument("T = " + w_.format(t) + " is not spherical");
    return it->second;
}

const Exponents& GrowthData::longest_monomial(Subset t) const
{
    auto it = longest_.find(t);
    if (it == longest_.end()) throw InvalidArgument("T = " + w_.format(t) + " is not spherical");
    return it->second;
}

RationalFunction GrowthData::growth_series() const
{
    return RationalFunction(nvars(), 1) / inverse_;
}

RationalFunction inverse_series_of_subset(const CoxeterSystem& w, Subset t)
{
    if ((t & w.all()) == 0) return RationalFunction(w.num_classes(), 1);
    GrowthData sub(w.restrict_to(t));
    return sub.inverse_series();
}

RationalFunction GrowthData::cofactor_series(Subset t) const
{
    return inverse_series_of_subset(w_, t) / inverse_;
}

RationalFunction GrowthData::wT_over_W(Subset t) const
{
    if (!poset_.contains(t)) throw InvalidArgument("T = " + w_.format(t) + " is not spherical");
    std::vector<std::pair<Polynomial, Polynomial>> terms;
    for (Subset u : poset_.at_least(t)) {
        int sign = cardinality(u & ~t) % 2 ? -1 : 1;
        terms.emplace_back(Polynomial::monomial(longest_.at(u), sign), polys_.at(u));
    }
    return sum_fractions(terms, nvars());
}

RationalFunction GrowthData::wT_over_W_crosscheck(Subset t) const
{
    if (!poset_.contains(t)) throw InvalidArgument("T = " + w_.format(t) + " is not spherical");
    RationalFunction acc(nvars(), 0);
    // T' runs over subsets of T
    for (Subset tp = t;; tp = (tp - 1) & t) {
        int sign = cardinality(t & ~tp) % 2 ? -1 : 1;
        RationalFunction term = inverse_series_of_subset(w_, w_.all() & ~tp);
        acc += sign > 0 ? term : -term;
        if (tp == 0) break;
    }
    return acc;
}

Rational GrowthData::wT_over_W_at(Subset t, const Multiparam& q) const
{
    return wT_over_W(t).evaluate(q);
}

Rational GrowthData::inverse_at(const Multiparam& q) const
{
    if (q.size() != nvars())
        throw InvalidArgument("expected " + std::to_string(nvars()) + " parameter values, got " + std::to_string(q.size()));
    return inverse_.evaluate(q);
}

std::optional<AlgebraicNumber> GrowthData::radius_of_convergence() const
{
    if (nvars() != 1)
        throw Unsupported("radius of convergence needs a single parameter class; use classify_region for multiparameters");
    if (finite_) return std::nullopt;
    auto roots = isolate_positive_roots(inverse_.numerator());
    if (roots.empty()) throw Error("internal", "infinite group without a positive zero of 1/W");
    return roots.front().value;
}

namespace {

// numerator(1/W)(lambda q) as a univariate polynomial in lambda
UniCoeffs along_ray(const Polynomial& num, const Multiparam& q)
{
    UniCoeffs out;
    for (const auto& [e, c] : num.terms()) {
        unsigned d = 0;
        Rational v = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            d += e[i];
            if (e[i]) v *= rational_pow(q[i], e[i]);
        }
        if (out.size() <= d) out.resize(d + 1, Rational(0));
        out[d] += v;
    }
    return out;
}

std::optional<AlgebraicNumber> first_zero(const Polynomial& num, const Multiparam& q)
{
    UniCoeffs g = uni::trimmed(along_ray(num, q));
    if (g.empty()) throw Error("internal", "1/W vanishes identically along a ray");
    auto roots = isolate_positive_roots(g);
    if (roots.empty()) return std::nullopt;
    return roots.front().value;
}

}  // namespace

RegionClass GrowthData::classify_region(const Multiparam& q) const
{
    if (q.size() != nvars())
        throw InvalidArgument("expected " + std::to_string(nvars()) + " parameter values, got " + std::to_string(q.size()));
    for (const auto& x : q)
        if (sgn(x) <= 0) throw InvalidArgument("parameters must be positive");
    RegionClass rc;
    if (finite_) {
        rc.tag = RegionTag::all;
        rc.closure_R = rc.closure_Rinv = true;
        return rc;
    }
    rc.lambda_q = first_zero(inverse_.numerator(), q);
    rc.lambda_qinv = first_zero(inverse_.numerator(), inverse(q));
    auto side = [](const std::optional<AlgebraicNumber>& l) {
        if (!l) return 1;  // no zero: interior
        int c = compare(*l, Rational(1));
        return c > 0 ? 1 : (c == 0 ? 0 : -1);
    };
    int r = side(rc.lambda_q), ri = side(rc.lambda_qinv);
    rc.closure_R = r >= 0;
    rc.closure_Rinv = ri >= 0;
    if (r > 0)
        rc.tag = RegionTag::interior_R;
    else if (ri > 0)
        rc.tag = RegionTag::interior_Rinv;
    else if (r == 0)
        rc.tag = RegionTag::boundary_R;
    else if (ri == 0)
        rc.tag = RegionTag::boundary_Rinv;
    else
        rc.tag = RegionTag::intermediate;
    return rc;
}

}  // namespace coxl2
