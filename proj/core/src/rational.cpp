#include <coxl2/error.hpp>
#include <coxl2/rational.hpp>

#include <cctype>
#include <sstream>

namespace coxl2 {

namespace {

std::string trim(const std::string& s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

Rational pow10(long e)
{
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rational(p);
    return Rational(Integer(1), p);
}

}  // namespace

Rational parse_rational(const std::string& raw)
{
    std::string text = trim(raw);
    if (text.empty()) throw ParseError("empty rational");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        Integer num, den;
        if (num.set_str(trim(text.substr(0, slash)), 10) != 0 || den.set_str(trim(text.substr(slash + 1)), 10) != 0)
            throw ParseError("malformed rational '" + raw + "'");
        if (den == 0) throw DivisionByZero("zero denominator in '" + raw + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    // decimal with optional exponent
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') neg = text[i++] == '-';
    std::string digits;
    long scale = 0;
    bool seen_point = false, any = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            any = true;
            if (seen_point) --scale;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!any) throw ParseError("malformed rational '" + raw + "'");
    if (i < text.size()) {
        if (text[i] != 'e' && text[i] != 'E') throw ParseError("malformed rational '" + raw + "'");
        std::string ex = text.substr(i + 1);
        try {
            std::size_t used = 0;
            long e = std::stol(ex, &used);
            if (used != ex.size()) throw ParseError("malformed exponent in '" + raw + "'");
            scale += e;
        } catch (const std::logic_error&) {
            throw ParseError("malformed exponent in '" + raw + "'");
        }
    }
    Rational r{Integer(digits, 10)};
    r *= pow10(scale);
    if (neg) r = -r;
    return r;
}

std::string to_string(const Rational& r)
{
    return r.get_str();
}

std::string to_decimal(const Rational& r, int digits)
{
    if (digits < 0) digits = 0;
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational a = abs(r) * scale;
    Integer n = a.get_num(), d = a.get_den();
    Integer q = n / d;
    Integer rem = n - q * d;
    if (2 * rem >= d) q += 1;
    std::string s = q.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
    }
    if (sgn(r) < 0 && q != 0) s.insert(0, "-");
    return s;
}

Rational rational_pow(const Rational& base, long e)
{
    Rational result = 1;
    Rational b = base;
    if (e < 0) {
        if (b == 0) throw DivisionByZero("0 to a negative power");
        b = 1 / b;
        e = -e;
    }
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

Multiparam parse_multiparam(const std::string& text)
{
    Multiparam q;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) q.push_back(parse_rational(item));
    if (q.empty()) throw ParseError("empty parameter list");
    for (const auto& x : q)
        if (sgn(x) <= 0) throw InvalidArgument("parameters must be positive, got " + x.get_str());
    return q;
}

Multiparam inverse(const Multiparam& q)
{
    Multiparam r;
    r.reserve(q.size());
    for (const auto& x : q) {
        if (x == 0) throw DivisionByZero("inverse of zero parameter");
        r.push_back(1 / x);
    }
    return r;
}

}  // namespace coxl2
