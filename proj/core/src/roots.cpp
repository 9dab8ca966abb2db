#include <coxl2/error.hpp>
#include <coxl2/roots.hpp>

#include <algorithm>
#include <sstream>

namespace coxl2 {

namespace uni {

UniCoeffs trimmed(UniCoeffs p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int degree(const UniCoeffs& p)
{
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

Rational eval(const UniCoeffs& p, const Rational& x)
{
    Rational v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        v *= x;
        v += *it;
    }
    return v;
}

int sign_at(const UniCoeffs& p, const Rational& x)
{
    return sgn(eval(p, x));
}

UniCoeffs derivative(const UniCoeffs& p)
{
    UniCoeffs d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    return trimmed(d);
}

UniCoeffs mul(const UniCoeffs& a, const UniCoeffs& b)
{
    if (a.empty() || b.empty()) return {};
    UniCoeffs r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trimmed(r);
}

void divmod(const UniCoeffs& a, const UniCoeffs& b0, UniCoeffs& q, UniCoeffs& r)
{
    UniCoeffs b = trimmed(b0);
    if (b.empty()) throw DivisionByZero("univariate division by zero");
    r = trimmed(a);
    int db = static_cast<int>(b.size()) - 1;
    q.assign(std::max<int>(0, static_cast<int>(r.size()) - db), Rational(0));
    while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
        int k = static_cast<int>(r.size()) - 1 - db;
        Rational c = r.back() / b.back();
        q[k] = c;
        for (int i = 0; i <= db; ++i) r[i + k] -= c * b[i];
        r = trimmed(r);
    }
    q = trimmed(q);
}

UniCoeffs monic_gcd(UniCoeffs a, UniCoeffs b)
{
    a = trimmed(a);
    b = trimmed(b);
    while (!b.empty()) {
        UniCoeffs q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    Rational lc = a.back();
    for (auto& c : a) c /= lc;
    return a;
}

std::vector<UniCoeffs> squarefree_decomposition(const UniCoeffs& p0)
{
    UniCoeffs p = trimmed(p0);
    if (p.empty()) throw InvalidArgument("squarefree decomposition of zero");
    std::vector<UniCoeffs> out;
    if (degree(p) == 0) return out;
    UniCoeffs dp = derivative(p);
    UniCoeffs a = monic_gcd(p, dp);
    UniCoeffs b, c, d, r;
    divmod(p, a, b, r);
    divmod(dp, a, c, r);
    // Yun's algorithm
    while (degree(b) > 0) {
        UniCoeffs bp = derivative(b);
        d = c;
        for (std::size_t i = 0; i < std::max(d.size(), bp.size()); ++i) {
            if (i >= d.size()) d.push_back(0);
            if (i < bp.size()) d[i] -= bp[i];
        }
        d = trimmed(d);
        UniCoeffs g = monic_gcd(b, d);
        out.push_back(g);
        UniCoeffs nb, nc;
        divmod(b, g, nb, r);
        divmod(d, g, nc, r);
        b = nb;
        c = nc;
    }
    while (!out.empty() && degree(out.back()) <= 0) out.pop_back();
    return out;
}

std::vector<UniCoeffs> sturm_sequence(const UniCoeffs& p)
{
    std::vector<UniCoeffs> seq{trimmed(p)};
    UniCoeffs d = derivative(seq[0]);
    if (d.empty()) return seq;
    seq.push_back(d);
    while (true) {
        UniCoeffs q, r;
        divmod(seq[seq.size() - 2], seq.back(), q, r);
        if (r.empty()) break;
        for (auto& x : r) x = -x;
        seq.push_back(r);
    }
    return seq;
}

int sign_changes(const std::vector<UniCoeffs>& seq, const Rational& x)
{
    int changes = 0, last = 0;
    for (const auto& p : seq) {
        int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int count_roots(const std::vector<UniCoeffs>& seq, const Rational& a, const Rational& b)
{
    return sign_changes(seq, a) - sign_changes(seq, b);
}

Rational cauchy_bound(const UniCoeffs& p0)
{
    UniCoeffs p = trimmed(p0);
    Rational m = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, Rational(abs(p[i] / p.back())));
    return 1 + m;
}

std::string to_string(const UniCoeffs& p, const std::string& var)
{
    std::vector<Rational> c = trimmed(p);
    if (c.empty()) return "0";
    return Polynomial::univariate(c).to_string({var});
}

}  // namespace uni

AlgebraicNumber::AlgebraicNumber(const Rational& r) : poly_{-r, 1}, lo_(r), hi_(r) {}

AlgebraicNumber::AlgebraicNumber(UniCoeffs squarefree, Rational lo, Rational hi)
    : poly_(uni::trimmed(std::move(squarefree))), lo_(std::move(lo)), hi_(std::move(hi))
{
    if (lo_ > hi_) throw InvalidArgument("isolating interval with lo > hi");
}

void AlgebraicNumber::bisect()
{
    if (is_rational()) return;
    Rational m = (lo_ + hi_) / 2;
    int sm = uni::sign_at(poly_, m);
    if (sm == 0) {
        lo_ = hi_ = m;
        return;
    }
    if (uni::sign_at(poly_, lo_) * sm < 0)
        hi_ = m;
    else
        lo_ = m;
}

void AlgebraicNumber::refine(const Rational& eps)
{
    while (!is_rational() && width() > eps) bisect();
}

std::string AlgebraicNumber::decimal(int digits) const
{
    AlgebraicNumber x = *this;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits + 1));
    x.refine(Rational(Integer(1), scale));
    return to_decimal(x.midpoint(), digits);
}

std::string AlgebraicNumber::to_string() const
{
    if (is_rational()) return lo_.get_str();
    return "root of " + uni::to_string(poly_) + " in (" + lo_.get_str() + ", " + hi_.get_str() + ")";
}

int compare(const AlgebraicNumber& x, const Rational& r)
{
    if (x.is_rational()) return cmp(x.lo(), r) < 0 ? -1 : (x.lo() == r ? 0 : 1);
    if (r <= x.lo()) return 1;
    if (r >= x.hi()) return -1;
    int sr = uni::sign_at(x.polynomial(), r);
    if (sr == 0) return 0;
    // the root sits on the side where the sign changes
    if (uni::sign_at(x.polynomial(), x.lo()) * sr < 0) return -1;
    return 1;
}

int compare(const AlgebraicNumber& x0, const AlgebraicNumber& y0)
{
    if (x0.is_rational()) return -compare(y0, x0.lo());
    if (y0.is_rational()) return compare(x0, y0.lo());
    AlgebraicNumber x = x0, y = y0;
    Rational lo = std::max(x.lo(), y.lo()), hi = std::min(x.hi(), y.hi());
    if (lo < hi) {
        UniCoeffs g = uni::monic_gcd(x.polynomial(), y.polynomial());
        if (uni::degree(g) > 0 && uni::count_roots(uni::sturm_sequence(g), lo, hi) > 0) return 0;
    }
    while (true) {
        if (x.is_rational()) return -compare(y, x.lo());
        if (y.is_rational()) return compare(x, y.lo());
        if (x.hi() <= y.lo()) return -1;
        if (y.hi() <= x.lo()) return 1;
        x.bisect();
        y.bisect();
    }
}

namespace {

void isolate(const UniCoeffs& p, const std::vector<UniCoeffs>& seq, Rational a, Rational b,
             std::vector<AlgebraicNumber>& out)
{
    int n = uni::count_roots(seq, a, b);
    if (n == 0) return;
    if (n == 1) {
        out.emplace_back(p, a, b);
        return;
    }
    Rational m = (a + b) / 2;
    if (uni::sign_at(p, m) != 0) {
        isolate(p, seq, a, m, out);
        isolate(p, seq, m, b, out);
        return;
    }
    // exact root at the midpoint: cut out a small non-root neighbourhood
    Rational eps = (b - a) / 4;
    while (true) {
        Rational l = m - eps, r = m + eps;
        if (uni::sign_at(p, l) != 0 && uni::sign_at(p, r) != 0 && uni::count_roots(seq, l, r) == 1) {
            isolate(p, seq, a, l, out);
            out.emplace_back(AlgebraicNumber(p, m, m));
            isolate(p, seq, r, b, out);
            return;
        }
        eps /= 2;
    }
}

std::vector<AlgebraicNumber> isolate_squarefree_positive(UniCoeffs p)
{
    p = uni::trimmed(p);
    // strip roots at 0
    std::size_t z = 0;
    while (z < p.size() && p[z] == 0) ++z;
    p.erase(p.begin(), p.begin() + static_cast<long>(z));
    std::vector<AlgebraicNumber> out;
    if (uni::degree(p) <= 0) return out;
    auto seq = uni::sturm_sequence(p);
    isolate(p, seq, Rational(0), uni::cauchy_bound(p), out);
    return out;
}

}  // namespace

std::vector<IsolatedRoot> isolate_positive_roots(const UniCoeffs& p0)
{
    UniCoeffs p = uni::trimmed(p0);
    if (p.empty()) throw InvalidArgument("root isolation of the zero polynomial");
    std::vector<IsolatedRoot> roots;
    auto parts = uni::squarefree_decomposition(p);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (uni::degree(parts[i]) <= 0) continue;
        for (auto& x : isolate_squarefree_positive(parts[i]))
            roots.push_back(IsolatedRoot{x, static_cast<unsigned>(i + 1)});
    }
    std::sort(roots.begin(), roots.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return compare(a.value, b.value) < 0; });
    return roots;
}

std::vector<IsolatedRoot> isolate_positive_roots(const Polynomial& p)
{
    if (p.is_zero()) throw InvalidArgument("root isolation of the zero polynomial");
    return isolate_positive_roots(p.dense_univariate());
}

bool has_root_in_unit_interval(const UniCoeffs& p)
{
    for (const auto& r : isolate_positive_roots(p))
        if (compare(r.value, Rational(1)) <= 0) return true;
    return false;
}

}  // namespace coxl2
