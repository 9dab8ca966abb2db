#pragma once

#include <coxl2/polynomial.hpp>

#include <map>
#include <optional>

namespace coxl2 {

/**
 * Reduced quotient of polynomials. The denominator is kept integer-primitive
 * with positive leading coefficient, so equal functions have identical
 * representations.
 */
class RationalFunction {
public:
    RationalFunction() : num_(0), den_(0, 1) {}
    RationalFunction(const Polynomial& p);  // NOLINT: polynomials embed
    RationalFunction(std::size_t nvars, const Rational& c) : num_(nvars, c), den_(nvars, 1) {}
    RationalFunction(const Polynomial& num, const Polynomial& den);

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }
    std::size_t nvars() const { return std::max(num_.nvars(), den_.nvars()); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b);
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction pow(int k) const;

    /** Exact value at a point; PoleError if the denominator vanishes there. */
    Rational evaluate(const std::vector<Rational>& point) const;
    /** Composition t_i -> images[i]. DivisionByZero if the result's denominator vanishes identically. */
    RationalFunction compose(const std::vector<RationalFunction>& images) const;
    /** t_i -> 1/t_i in every variable. */
    RationalFunction invert_variables() const;

    /** Taylor coefficients at 0 of all monomials of total degree <= order. */
    std::map<Exponents, Rational, GrlexLess> series_coefficients(unsigned order) const;
    /** Univariate convenience: c_0..c_order. */
    std::vector<Rational> series_coefficients_1d(unsigned order) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void reduce();
    Polynomial num_, den_;
};

/** Variable t_i in n variables as a rational function. */
RationalFunction rf_variable(std::size_t nvars, std::size_t i);

}  // namespace coxl2
