#pragma once

#include <coxl2/rational.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace coxl2 {

using Exponents = std::vector<unsigned>;

/** Graded lexicographic order: total degree first, then the exponent of the
 *  first variable, then the second, ... Ascending in this order is the
 *  serialization order; the greatest term is the leading term. */
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/**
 * Sparse polynomial over Q in a fixed number of variables t_0..t_{n-1}.
 * Binary operations between polynomials with different variable counts pad
 * the smaller one with unused trailing variables.
 */
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
    Polynomial(std::size_t nvars, const Rational& c);

    static Polynomial variable(std::size_t nvars, std::size_t index);
    static Polynomial monomial(const Exponents& e, const Rational& c = 1);
    /** Dense univariate polynomial from coefficients c_0, c_1, ... */
    static Polynomial univariate(const std::vector<Rational>& coeffs);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(const Exponents& e) const;
    unsigned total_degree() const;
    unsigned degree_in(std::size_t var) const;
    const Exponents& leading_exponents() const;
    const Rational& leading_coefficient() const;

    Polynomial with_nvars(std::size_t n) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial pow(unsigned k) const;

    Rational evaluate(const std::vector<Rational>& point) const;
    /** Composition: t_i -> images[i]. */
    Polynomial compose(const std::vector<Polynomial>& images) const;

    /** Coefficients in `var`, each coefficient free of `var`. */
    std::vector<Polynomial> coefficients_in(std::size_t var) const;
    static Polynomial from_coefficients_in(std::size_t var, const std::vector<Polynomial>& cs,
                                           std::size_t nvars);

    /** Coefficient list c_0..c_d of a polynomial in at most one variable. */
    std::vector<Rational> dense_univariate() const;

    /** Canonical text: ascending grlex terms, explicit rational coefficients,
     *  e.g. "1 - 8*t + t^2" or "1 - t1*t2". Variable names default to t
     *  (one variable) or t1, t2, ... */
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void add_term(const Exponents& e, const Rational& c);
    void pad(std::size_t n);

    std::size_t nvars_ = 0;
    TermMap terms_;
};

/** Exact quotient a/b; throws DivisionByZero or InvalidArgument if b does not divide a. */
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/** Greatest common divisor, normalized to an integer-primitive polynomial with
 *  positive leading coefficient (1 for coprime inputs). gcd(0,0) = 0. */
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/** Rational c such that c*p has coprime integer coefficients and positive leading coefficient. */
Rational normalizing_factor(const Polynomial& p);

std::vector<std::string> default_variable_names(std::size_t nvars);

}  // namespace coxl2
