#pragma once

#include <coxl2/polynomial.hpp>

#include <string>
#include <vector>

namespace coxl2 {

/** Dense univariate coefficients c_0..c_d. */
using UniCoeffs = std::vector<Rational>;

namespace uni {
UniCoeffs trimmed(UniCoeffs p);
int degree(const UniCoeffs& p);  // -1 for zero
Rational eval(const UniCoeffs& p, const Rational& x);
int sign_at(const UniCoeffs& p, const Rational& x);
UniCoeffs derivative(const UniCoeffs& p);
UniCoeffs mul(const UniCoeffs& a, const UniCoeffs& b);
void divmod(const UniCoeffs& a, const UniCoeffs& b, UniCoeffs& q, UniCoeffs& r);
UniCoeffs monic_gcd(UniCoeffs a, UniCoeffs b);
/** Yun decomposition: factors[i] is the squarefree product of irreducibles of multiplicity i+1. */
std::vector<UniCoeffs> squarefree_decomposition(const UniCoeffs& p);
std::vector<UniCoeffs> sturm_sequence(const UniCoeffs& squarefree);
int sign_changes(const std::vector<UniCoeffs>& seq, const Rational& x);
/** Distinct roots of a squarefree polynomial in the open interval (a,b); a and b must not be roots. */
int count_roots(const std::vector<UniCoeffs>& seq, const Rational& a, const Rational& b);
Rational cauchy_bound(const UniCoeffs& p);
std::string to_string(const UniCoeffs& p, const std::string& var = "t");
}  // namespace uni

/**
 * A real algebraic number given by a squarefree polynomial and an isolating
 * interval. Either lo == hi and the number is that rational, or lo < hi, the
 * polynomial is nonzero at both endpoints and has exactly one root in (lo,hi).
 */
class AlgebraicNumber {
public:
    AlgebraicNumber() = default;
    explicit AlgebraicNumber(const Rational& r);
    AlgebraicNumber(UniCoeffs squarefree, Rational lo, Rational hi);

    bool is_rational() const { return lo_ == hi_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    const UniCoeffs& polynomial() const { return poly_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }

    /** Bisect until width <= eps (or exact). */
    void refine(const Rational& eps);
    void bisect();

    std::string decimal(int digits) const;
    std::string to_string() const;

private:
    UniCoeffs poly_;
    Rational lo_, hi_;
};

int compare(const AlgebraicNumber& x, const Rational& r);
int compare(const AlgebraicNumber& x, const AlgebraicNumber& y);
inline bool operator==(const AlgebraicNumber& x, const AlgebraicNumber& y) { return compare(x, y) == 0; }
inline bool operator<(const AlgebraicNumber& x, const AlgebraicNumber& y) { return compare(x, y) < 0; }

struct IsolatedRoot {
    AlgebraicNumber value;
    unsigned multiplicity = 1;
};

/** All distinct positive real roots, ascending, with multiplicities. Throws on the zero polynomial. */
std::vector<IsolatedRoot> isolate_positive_roots(const UniCoeffs& p);
std::vector<IsolatedRoot> isolate_positive_roots(const Polynomial& p);

/** True iff p has a root in (0, 1]. */
bool has_root_in_unit_interval(const UniCoeffs& p);

}  // namespace coxl2
