#include <coxl2/error.hpp>
#include <coxl2/rational_function.hpp>

#include <algorithm>
#include <functional>
#include <numeric>

namespace coxl2 {

RationalFunction::RationalFunction(const Polynomial& p) : num_(p), den_(p.nvars(), 1) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) : num_(num), den_(den)
{
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    reduce();
}

void RationalFunction::reduce()
{
    std::size_t n = nvars();
    num_ = num_.with_nvars(n);
    den_ = den_.with_nvars(n);
    if (num_.is_zero()) {
        den_ = Polynomial(n, 1);
        return;
    }
    if (!den_.is_constant()) {
        Polynomial g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }
    Rational f = normalizing_factor(den_);
    num_ *= f;
    den_ *= f;
}

RationalFunction RationalFunction::operator-() const
{
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
{
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    if (a.is_polynomial() && b.is_polynomial()) {
        return RationalFunction(a.num_ * Rational(1 / a.den_.constant_term()) + b.num_ * Rational(1 / b.den_.constant_term()));
    }
    Polynomial g = gcd(a.den_, b.den_);
    Polynomial ad = divide_exact(a.den_, g), bd = divide_exact(b.den_, g);
    return RationalFunction(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
{
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
{
    if (a.is_zero() || b.is_zero()) return RationalFunction(Polynomial(std::max(a.nvars(), b.nvars())));
    // cross-cancel first to keep the final gcd small
    Polynomial g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    Polynomial an = divide_exact(a.num_, g1), bd = divide_exact(b.den_, g1);
    Polynomial bn = divide_exact(b.num_, g2), ad = divide_exact(a.den_, g2);
    RationalFunction r;
    r.num_ = an * bn;
    r.den_ = ad * bd;
    std::size_t n = r.nvars();
    r.num_ = r.num_.with_nvars(n);
    r.den_ = r.den_.with_nvars(n);
    Rational f = normalizing_factor(r.den_);
    r.num_ *= f;
    r.den_ *= f;
    return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
{
    if (b.is_zero()) throw DivisionByZero("rational function division by zero");
    RationalFunction inv;
    inv.num_ = b.den_;
    inv.den_ = b.num_;
    Rational f = normalizing_factor(inv.den_);
    inv.num_ *= f;
    inv.den_ *= f;
    return a * inv;
}

bool operator==(const RationalFunction& a, const RationalFunction& b)
{
    return a.num_ == b.num_ && a.den_ == b.den_;
}

RationalFunction RationalFunction::pow(int k) const
{
    if (k < 0) return RationalFunction(Polynomial(nvars(), 1)) / pow(-k);
    RationalFunction r;
    r.num_ = num_.pow(static_cast<unsigned>(k));
    r.den_ = den_.pow(static_cast<unsigned>(k));
    return r;
}

Rational RationalFunction::evaluate(const std::vector<Rational>& point) const
{
    Rational d = den_.evaluate(point);
    if (d == 0) throw PoleError("denominator vanishes at the evaluation point");
    return num_.evaluate(point) / d;
}

RationalFunction RationalFunction::compose(const std::vector<RationalFunction>& images) const
{
    std::size_t n = nvars();
    if (images.size() < n) throw InvalidArgument("composition needs an image for every variable");
    auto apply = [&](const Polynomial& p) {
        RationalFunction acc(Polynomial(0));
        std::vector<std::vector<RationalFunction>> powers(n);
        for (const auto& [e, c] : p.terms()) {
            RationalFunction term(Polynomial(0, c));
            for (std::size_t i = 0; i < n; ++i) {
                if (!e[i]) continue;
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(RationalFunction(Polynomial(0, 1)));
                while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
                term *= pw[e[i]];
            }
            acc += term;
        }
        return acc;
    };
    RationalFunction d = apply(den_);
    if (d.is_zero()) throw DivisionByZero("composition makes the denominator vanish");
    return apply(num_) / d;
}

RationalFunction RationalFunction::invert_variables() const
{
    std::size_t n = nvars();
    std::vector<RationalFunction> images;
    for (std::size_t i = 0; i < n; ++i)
        images.push_back(RationalFunction(Polynomial(n, 1), Polynomial::variable(n, i)));
    return compose(images);
}

std::map<Exponents, Rational, GrlexLess> RationalFunction::series_coefficients(unsigned order) const
{
    std::size_t n = nvars();
    Rational d0 = den_.constant_term();
    if (d0 == 0) throw InvalidArgument("denominator has zero constant term; no Taylor expansion at 0");
    // enumerate monomials of degree <= order in grlex order
    std::vector<Exponents> monos;
    Exponents e(n, 0);
    std::function<void(std::size_t, unsigned)> gen = [&](std::size_t i, unsigned left) {
        if (i == n) {
            monos.push_back(e);
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            e[i] = k;
            gen(i + 1, left - k);
        }
        e[i] = 0;
    };
    gen(0, order);
    std::sort(monos.begin(), monos.end(), GrlexLess{});

    std::map<Exponents, Rational, GrlexLess> s;
    for (const auto& a : monos) {
        Rational v = num_.coefficient(a);
        for (const auto& [b, db] : den_.terms()) {
            bool zero = true, le = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (b[i]) zero = false;
                if (b[i] > a[i]) le = false;
            }
            if (zero || !le) continue;
            Exponents diff(n);
            for (std::size_t i = 0; i < n; ++i) diff[i] = a[i] - b[i];
            auto it = s.find(diff);
            if (it != s.end()) v -= db * it->second;
        }
        v /= d0;
        s.emplace(a, v);
    }
    return s;
}

std::vector<Rational> RationalFunction::series_coefficients_1d(unsigned order) const
{
    if (nvars() > 1) throw InvalidArgument("univariate series requested for a multivariate function");
    std::vector<Rational> num = num_.dense_univariate(), den = den_.dense_univariate();
    if (den[0] == 0) throw InvalidArgument("denominator has zero constant term; no Taylor expansion at 0");
    std::vector<Rational> s(order + 1);
    for (unsigned k = 0; k <= order; ++k) {
        Rational v = k < num.size() ? num[k] : Rational(0);
        for (unsigned j = 1; j <= k && j < den.size(); ++j) v -= den[j] * s[k - j];
        s[k] = v / den[0];
    }
    return s;
}

std::string RationalFunction::to_string(const std::vector<std::string>& names) const
{
    if (den_.is_constant() && den_.constant_term() == 1) return num_.to_string(names);
    return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

RationalFunction rf_variable(std::size_t nvars, std::size_t i)
{
    return RationalFunction(Polynomial::variable(nvars, i));
}

}  // namespace coxl2
