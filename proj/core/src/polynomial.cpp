#include <coxl2/error.hpp>
#include <coxl2/polynomial.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace coxl2 {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const
{
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    // larger exponent on an earlier variable is greater
    std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        unsigned x = i < a.size() ? a[i] : 0;
        unsigned y = i < b.size() ? b[i] : 0;
        if (x != y) return x < y;
    }
    return false;
}

Polynomial::Polynomial(std::size_t nvars, const Rational& c) : nvars_(nvars)
{
    if (c != 0) terms_.emplace(Exponents(nvars, 0), c);
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index)
{
    if (index >= nvars) throw InvalidArgument("variable index out of range");
    Exponents e(nvars, 0);
    e[index] = 1;
    return monomial(e);
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c)
{
    Polynomial p(e.size());
    if (c != 0) p.terms_.emplace(e, c);
    return p;
}

Polynomial Polynomial::univariate(const std::vector<Rational>& coeffs)
{
    Polynomial p(1);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) p.terms_.emplace(Exponents{static_cast<unsigned>(i)}, coeffs[i]);
    return p;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rational Polynomial::constant_term() const
{
    return coefficient(Exponents(nvars_, 0));
}

Rational Polynomial::coefficient(const Exponents& e) const
{
    Exponents key = e;
    key.resize(nvars_, 0);
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::total_degree() const
{
    if (terms_.empty()) return 0;
    const auto& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), 0u);
}

unsigned Polynomial::degree_in(std::size_t var) const
{
    unsigned d = 0;
    if (var >= nvars_) return 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

const Exponents& Polynomial::leading_exponents() const
{
    if (terms_.empty()) throw InvalidArgument("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const
{
    if (terms_.empty()) throw InvalidArgument("leading coefficient of zero polynomial");
    return terms_.rbegin()->second;
}

void Polynomial::pad(std::size_t n)
{
    if (n <= nvars_) return;
    TermMap padded;
    for (auto& [e, c] : terms_) {
        Exponents f = e;
        f.resize(n, 0);
        padded.emplace(std::move(f), c);
    }
    terms_ = std::move(padded);
    nvars_ = n;
}

Polynomial Polynomial::with_nvars(std::size_t n) const
{
    if (n >= nvars_) {
        Polynomial p = *this;
        p.pad(n);
        return p;
    }
    Polynomial p(n);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = n; i < nvars_; ++i)
            if (e[i] != 0) throw InvalidArgument("cannot drop a variable that occurs");
        p.terms_.emplace(Exponents(e.begin(), e.begin() + n), c);
    }
    return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const
{
    Polynomial p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    pad(o.nvars_);
    if (o.nvars_ == nvars_) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
    } else {
        Polynomial q = o.with_nvars(nvars_);
        for (const auto& [e, c] : q.terms_) add_term(e, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    return *this += -o;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    std::size_t n = std::max(a.nvars_, b.nvars_);
    const Polynomial& x = a.nvars_ == n ? a : a.with_nvars(n);
    Polynomial ytmp;
    const Polynomial* y = &b;
    if (b.nvars_ != n) {
        ytmp = b.with_nvars(n);
        y = &ytmp;
    }
    Polynomial r(n);
    Exponents e(n);
    Rational c;
    for (const auto& [ea, ca] : x.terms_) {
        for (const auto& [eb, cb] : y->terms_) {
            for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            c = ca * cb;
            r.add_term(e, c);
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    if (a.nvars_ == b.nvars_) return a.terms_ == b.terms_;
    std::size_t n = std::max(a.nvars_, b.nvars_);
    return a.with_nvars(n).terms_ == b.with_nvars(n).terms_;
}

Polynomial Polynomial::pow(unsigned k) const
{
    Polynomial result(nvars_, 1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const
{
    if (point.size() < nvars_) throw InvalidArgument("evaluation point has too few coordinates");
    Rational sum = 0;
    Rational term;
    for (const auto& [e, c] : terms_) {
        term = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i]) term *= rational_pow(point[i], e[i]);
        sum += term;
    }
    return sum;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const
{
    if (images.size() < nvars_) throw InvalidArgument("composition needs an image for every variable");
    std::size_t n = 0;
    for (const auto& p : images) n = std::max(n, p.nvars());
    Polynomial result(n);
    // cache powers per variable
    std::vector<std::vector<Polynomial>> powers(nvars_);
    for (const auto& [e, c] : terms_) {
        Polynomial term(n, c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(Polynomial(n, 1));
            while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
            term *= pw[e[i]];
        }
        result += term;
    }
    return result;
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t var) const
{
    std::vector<Polynomial> cs(degree_in(var) + 1, Polynomial(nvars_));
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        unsigned k = f[var];
        f[var] = 0;
        cs[k].add_term(f, c);
    }
    return cs;
}

Polynomial Polynomial::from_coefficients_in(std::size_t var, const std::vector<Polynomial>& cs, std::size_t nvars)
{
    Polynomial r(nvars);
    for (std::size_t k = 0; k < cs.size(); ++k) {
        Polynomial c = cs[k].with_nvars(nvars);
        for (const auto& [e, v] : c.terms()) {
            Exponents f = e;
            f[var] += static_cast<unsigned>(k);
            r.add_term(f, v);
        }
    }
    return r;
}

std::vector<Rational> Polynomial::dense_univariate() const
{
    std::size_t var = 0;
    bool found = false;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i]) {
                if (found && i != var) throw InvalidArgument("polynomial is not univariate");
                var = i;
                found = true;
            }
    std::vector<Rational> out(found ? degree_in(var) + 1 : 1, Rational(0));
    for (const auto& [e, c] : terms_) out[found ? e[var] : 0] = c;
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::string> default_variable_names(std::size_t nvars)
{
    if (nvars == 1) return {"t"};
    std::vector<std::string> names;
    for (std::size_t i = 0; i < nvars; ++i) names.push_back("t" + std::to_string(i + 1));
    return names;
}

std::string Polynomial::to_string(const std::vector<std::string>& given) const
{
    if (terms_.empty()) return "0";
    std::vector<std::string> names = given.size() >= nvars_ ? given : default_variable_names(nvars_);
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool neg = sgn(c) < 0;
        Rational a = abs(c);
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        if (mono.empty()) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << mono;
        }
        first = false;
    }
    return os.str();
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::size_t n = std::max(a.nvars(), b.nvars());
    Polynomial r = a.with_nvars(n);
    Polynomial d = b.with_nvars(n);
    Polynomial q(n);
    const Exponents& le = d.leading_exponents();
    Rational lc = d.leading_coefficient();
    while (!r.is_zero()) {
        const Exponents& re = r.leading_exponents();
        Exponents e(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (re[i] < le[i]) throw InvalidArgument("polynomial division is not exact");
            e[i] = re[i] - le[i];
        }
        Polynomial t = Polynomial::monomial(e, r.leading_coefficient() / lc);
        q += t;
        r -= t * d;
    }
    return q;
}

Rational normalizing_factor(const Polynomial& p)
{
    if (p.is_zero()) return 1;
    Integer l = 1, g = 0;
    for (const auto& [e, c] : p.terms()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    for (const auto& [e, c] : p.terms()) {
        Integer v = c.get_num() * (l / c.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    Rational f(l, g);
    f.canonicalize();
    if (sgn(p.leading_coefficient()) < 0) f = -f;
    return f;
}

namespace {

Polynomial normalized(const Polynomial& p)
{
    return p * normalizing_factor(p);
}

int first_variable(const Polynomial& a, const Polynomial& b)
{
    int best = -1;
    for (const Polynomial* p : {&a, &b})
        for (const auto& [e, c] : p->terms())
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] && (best < 0 || static_cast<int>(i) < best)) best = static_cast<int>(i);
    return best;
}

Polynomial content_in(const Polynomial& p, std::size_t var)
{
    Polynomial g(p.nvars());
    for (const auto& c : p.coefficients_in(var)) {
        if (c.is_zero()) continue;
        g = gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

Polynomial primitive_in(const Polynomial& p, std::size_t var)
{
    if (p.is_zero()) return p;
    Polynomial c = content_in(p, var);
    Polynomial r = divide_exact(p, c);
    return normalized(r);
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t var)
{
    auto bc = b.coefficients_in(var);
    std::size_t db = bc.size() - 1;
    const Polynomial& lcb = bc.back();
    std::size_t n = a.nvars();
    Polynomial r = a;
    while (!r.is_zero()) {
        auto rc = r.coefficients_in(var);
        std::size_t dr = rc.size() - 1;
        if (dr < db) break;
        Exponents shift(n, 0);
        shift[var] = static_cast<unsigned>(dr - db);
        r = lcb * r - rc.back() * Polynomial::monomial(shift) * b;
    }
    return r;
}

}  // namespace

Polynomial gcd(const Polynomial& a0, const Polynomial& b0)
{
    std::size_t n = std::max(a0.nvars(), b0.nvars());
    Polynomial a = a0.with_nvars(n), b = b0.with_nvars(n);
    if (a.is_zero() && b.is_zero()) return Polynomial(n);
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);
    int v = first_variable(a, b);
    if (v < 0) return Polynomial(n, 1);
    std::size_t var = static_cast<std::size_t>(v);

    Polynomial ca = content_in(a, var), cb = content_in(b, var);
    Polynomial c = gcd(ca, cb);
    Polynomial r0 = normalized(divide_exact(a, ca));
    Polynomial r1 = normalized(divide_exact(b, cb));
    if (r0.degree_in(var) < r1.degree_in(var)) std::swap(r0, r1);
    while (!r1.is_zero()) {
        if (r1.degree_in(var) == 0) {
            // primitive with no var: a unit
            r0 = Polynomial(n, 1);
            break;
        }
        Polynomial r = pseudo_remainder(r0, r1, var);
        r0 = std::move(r1);
        r1 = primitive_in(r, var);
    }
    Polynomial g = primitive_in(r0, var);
    return normalized(c * g);
}

}  // namespace coxl2
