#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace coxl2 {

using Rational = mpq_class;
using Integer = mpz_class;

/** Parses "3", "-2/5", "0.125" or "1e-3" into an exact rational. */
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

/** Decimal rendering with `digits` digits after the point, truncated toward
 *  the nearest value (round half away from zero). Display only. */
std::string to_decimal(const Rational& r, int digits);

Rational rational_pow(const Rational& base, long exponent);

/** A multiparameter: one positive rational per parameter class. */
using Multiparam = std::vector<Rational>;

Multiparam parse_multiparam(const std::string& text);
Multiparam inverse(const Multiparam& q);

}  // namespace coxl2
