#pragma once

#include <coxl2/polynomial.hpp>
#include <coxl2/rational_function.hpp>

#include <initializer_list>
#include <vector>

namespace coxl2::testing {

inline Rational rat(long n, long d = 1)
{
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline Polynomial upoly(std::initializer_list<long> coeffs)
{
    std::vector<Rational> c;
    for (long x : coeffs) c.emplace_back(x);
    return Polynomial::univariate(c);
}

inline RationalFunction urf(std::initializer_list<long> num, std::initializer_list<long> den)
{
    return RationalFunction(upoly(num), upoly(den));
}

/** 1 + t + ... + t^(d-1) */
inline Polynomial q_integer(unsigned d)
{
    std::vector<Rational> c(d, Rational(1));
    return Polynomial::univariate(c);
}

inline Rational pow(const Rational& x, int k)
{
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
}

}  // namespace coxl2::testing
