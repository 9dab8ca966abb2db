#include <coxl2/piecewise.hpp>

#include <coxl2/right_angled.hpp>

#include <cctype>
#include <sstream>

namespace coxl2 {

namespace {

RationalFunction rf_const(const Rational& c) { return RationalFunction(1, c); }
RationalFunction rf_q() { return rf_variable(1, 0); }

// Merged sorted breakpoints of a and b, without duplicates.
std::vector<AlgebraicNumber> merge_breaks(const std::vector<AlgebraicNumber>& a, const std::vector<AlgebraicNumber>& b)
{
    std::vector<AlgebraicNumber> out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && compare(a[i], b[j]) < 0)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || compare(a[i], b[j]) > 0) {
            out.push_back(b[j++]);
        } else {
            out.push_back(a[i]);
            ++i;
            ++j;
        }
    }
    return out;
}

// Piece of f on the k-th interval of the merged breakpoints.
std::vector<RationalFunction> refine_to(const PiecewiseRational& f, const std::vector<AlgebraicNumber>& merged)
{
    std::vector<RationalFunction> out;
    std::size_t idx = 0;
    const auto& br = f.breakpoints();
    for (std::size_t k = 0; k <= merged.size(); ++k) {
        out.push_back(f.pieces()[idx]);
        if (k < merged.size() && idx < br.size() && compare(br[idx], merged[k]) == 0) ++idx;
    }
    return out;
}

template <class Op>
PiecewiseRational combine(const PiecewiseRational& a, const PiecewiseRational& b, Op op)
{
    auto merged = merge_breaks(a.breakpoints(), b.breakpoints());
    auto pa = refine_to(a, merged), pb = refine_to(b, merged);
    std::vector<RationalFunction> pieces;
    for (std::size_t k = 0; k < pa.size(); ++k) pieces.push_back(op(pa[k], pb[k]));
    return PiecewiseRational(merged, pieces).simplified();
}

}  // namespace

bool vanishes_at(const Polynomial& p, const AlgebraicNumber& x)
{
    if (p.is_zero()) return true;
    UniCoeffs c = p.dense_univariate();
    if (x.is_rational()) return uni::eval(c, x.lo()) == 0;
    UniCoeffs g = uni::monic_gcd(c, x.polynomial());
    if (uni::degree(g) < 1) return false;
    return uni::sign_at(g, x.lo()) * uni::sign_at(g, x.hi()) < 0;
}

PiecewiseRational::PiecewiseRational() : pieces_{rf_const(0)} {}

PiecewiseRational::PiecewiseRational(const RationalFunction& f) : pieces_{f} {}

PiecewiseRational::PiecewiseRational(std::vector<AlgebraicNumber> breakpoints, std::vector<RationalFunction> pieces)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces))
{
    if (pieces_.size() != breaks_.size() + 1) throw InvalidArgument("a piecewise function needs one more piece than breakpoints");
    for (std::size_t i = 0; i + 1 < breaks_.size(); ++i)
        if (compare(breaks_[i], breaks_[i + 1]) >= 0) throw InvalidArgument("breakpoints must be strictly increasing");
    if (!breaks_.empty() && compare(breaks_.front(), Rational(0)) <= 0) throw InvalidArgument("breakpoints must be positive");
}

PiecewiseRational PiecewiseRational::step(const AlgebraicNumber& at, const RationalFunction& below, const RationalFunction& above)
{
    return PiecewiseRational({at}, {below, above});
}

Rational PiecewiseRational::evaluate(const Rational& q) const
{
    if (q <= 0) throw InvalidArgument("q must be positive");
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
        int c = compare(breaks_[i], q);
        if (c > 0) return pieces_[i].evaluate({q});
        if (c == 0) {
            Rational left = pieces_[i].evaluate({q}), right = pieces_[i + 1].evaluate({q});
            if (left != right)
                throw CheckFailed("one-sided values differ at the breakpoint " + q.get_str() + ": " + left.get_str() +
                                  " and " + right.get_str());
            return left;
        }
    }
    return pieces_.back().evaluate({q});
}

PiecewiseRational PiecewiseRational::simplified() const
{
    std::vector<AlgebraicNumber> br;
    std::vector<RationalFunction> pcs{pieces_.front()};
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
        if (pieces_[i + 1] == pcs.back()) continue;
        br.push_back(breaks_[i]);
        pcs.push_back(pieces_[i + 1]);
    }
    PiecewiseRational r;
    r.breaks_ = std::move(br);
    r.pieces_ = std::move(pcs);
    return r;
}

bool PiecewiseRational::continuous() const
{
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
        RationalFunction d = pieces_[i] - pieces_[i + 1];
        if (vanishes_at(d.denominator(), breaks_[i])) return false;  // a pole at the breakpoint
        if (!vanishes_at(d.numerator(), breaks_[i])) return false;
    }
    return true;
}

PiecewiseRational operator+(const PiecewiseRational& a, const PiecewiseRational& b)
{
    return combine(a, b, [](const RationalFunction& x, const RationalFunction& y) { return x + y; });
}

PiecewiseRational operator-(const PiecewiseRational& a, const PiecewiseRational& b)
{
    return combine(a, b, [](const RationalFunction& x, const RationalFunction& y) { return x - y; });
}

PiecewiseRational operator*(const PiecewiseRational& a, const PiecewiseRational& b)
{
    return combine(a, b, [](const RationalFunction& x, const RationalFunction& y) { return x * y; });
}

bool operator==(const PiecewiseRational& a, const PiecewiseRational& b)
{
    PiecewiseRational d = (a - b).simplified();
    return d.breaks_.empty() && d.pieces_.front().is_zero();
}

std::string PiecewiseRational::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
        if (i) os << "; ";
        std::string lo = i == 0 ? "0" : breaks_[i - 1].to_string();
        std::string hi = i == breaks_.size() ? "inf" : breaks_[i].to_string();
        os << pieces_[i].to_string({"q"}) << " on (" << lo << ", " << hi << ")";
    }
    return os.str();
}

PiecewiseRational alternating_sum(const BettiTable& b)
{
    PiecewiseRational s;
    for (std::size_t i = 0; i < b.size(); ++i) s = i % 2 ? s - b[i] : s + b[i];
    return s;
}

namespace {

BettiTable trim(BettiTable b)
{
    PiecewiseRational zero;
    while (b.size() > 1 && b.back() == zero) b.pop_back();
    return b;
}

}  // namespace

CalculusResult calculus_empty()
{
    return {empty_complex(), {PiecewiseRational(rf_const(1))}};
}

CalculusResult calculus_point()
{
    return {points(1), {PiecewiseRational(rf_const(1) / (rf_const(1) + rf_q()))}};
}

CalculusResult calculus_points(int k)
{
    if (k < 1) throw InvalidArgument("P_k needs k >= 1");
    if (k == 1) return calculus_point();
    RationalFunction one = rf_const(1), q = rf_q();
    RationalFunction km1 = rf_const(k - 1);
    RationalFunction b0 = (one - km1 * q) / (one + q);
    AlgebraicNumber at(Rational(1, k - 1));
    return {points(k),
            {PiecewiseRational::step(at, b0, rf_const(0)), PiecewiseRational::step(at, rf_const(0), -b0)}};
}

CalculusResult calculus_join(const CalculusResult& a, const CalculusResult& b)
{
    BettiTable t(a.betti.size() + b.betti.size() - 1);
    for (std::size_t i = 0; i < a.betti.size(); ++i)
        for (std::size_t j = 0; j < b.betti.size(); ++j) t[i + j] = t[i + j] + a.betti[i] * b.betti[j];
    return {join(a.complex, b.complex), trim(t)};
}

CalculusResult calculus_cone(const CalculusResult& a) { return calculus_join(a, calculus_point()); }

CalculusResult calculus_suspension(const CalculusResult& a) { return calculus_join(a, calculus_points(2)); }

CalculusResult calculus_octahedron(int n)
{
    if (n < 0) throw InvalidArgument("O_n needs n >= 0");
    CalculusResult r = calculus_empty();
    for (int i = 0; i < n; ++i) r = calculus_suspension(r);
    return r;
}

CalculusResult calculus_disjoint_union(const CalculusResult& a, const CalculusResult& b)
{
    SimplicialComplex l = disjoint_union(a.complex, b.complex);
    if (a.complex.dimension() < 0 || b.complex.dimension() < 0)
        throw Unsupported("disjoint union with the empty complex");
    RationalFunction chi = chi_q(l);
    // b^0 = chi on [0, rho), 0 beyond; higher degrees add; b^1 balances chi
    auto roots = isolate_positive_roots(chi.numerator());
    PiecewiseRational b0 = roots.empty() ? PiecewiseRational(chi)
                                         : PiecewiseRational::step(roots.front().value, chi, rf_const(0));
    std::size_t n = std::max({a.betti.size(), b.betti.size(), std::size_t{2}});
    BettiTable t(n);
    t[0] = b0;
    for (std::size_t i = 2; i < n; ++i) {
        if (i < a.betti.size()) t[i] = t[i] + a.betti[i];
        if (i < b.betti.size()) t[i] = t[i] + b.betti[i];
    }
    PiecewiseRational rest;  // b^0 + sum_{i>=2} (-1)^i b^i - chi
    rest = t[0] - PiecewiseRational(chi);
    for (std::size_t i = 2; i < n; ++i) rest = i % 2 ? rest - t[i] : rest + t[i];
    t[1] = rest;
    return {l, trim(t)};
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    CalculusResult parse()
    {
        CalculusResult r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(msg + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
    }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    void expect(char c)
    {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    std::string word()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }
    int number()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return std::stoi(s_.substr(start, pos_ - start));
    }
    CalculusResult expr()
    {
        std::string w = word();
        if (w == "point") return calculus_point();
        if (w == "empty") return calculus_empty();
        if (w == "P") return calculus_points(number());
        if (w == "O") return calculus_octahedron(number());
        if (w == "join" || w == "union") {
            expect('(');
            CalculusResult a = expr();
            expect(',');
            CalculusResult b = expr();
            expect(')');
            return w == "join" ? calculus_join(a, b) : calculus_disjoint_union(a, b);
        }
        if (w == "cone" || w == "susp") {
            expect('(');
            CalculusResult a = expr();
            expect(')');
            return w == "cone" ? calculus_cone(a) : calculus_suspension(a);
        }
        if (w.empty()) fail("expected an expression");
        throw Unsupported("unsupported leaf or operation '" + w + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

CalculusResult betti_calculus(const std::string& expr)
{
    return Parser(expr).parse();
}

}  // namespace coxl2
