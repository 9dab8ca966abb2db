#pragma once

#include <coxl2/complex.hpp>
#include <coxl2/rational_function.hpp>
#include <coxl2/roots.hpp>

#include <string>
#include <vector>

namespace coxl2 {

/**
 * Function of a single q > 0 given by rational functions on the open
 * intervals between sorted breakpoints. Values at a breakpoint are the
 * common limit of the neighbouring pieces, which must agree.
 */
class PiecewiseRational {
public:
    PiecewiseRational();  // zero
    PiecewiseRational(const RationalFunction& f);  // NOLINT: constant piece
    PiecewiseRational(std::vector<AlgebraicNumber> breakpoints, std::vector<RationalFunction> pieces);
    static PiecewiseRational step(const AlgebraicNumber& at, const RationalFunction& below, const RationalFunction& above);

    const std::vector<AlgebraicNumber>& breakpoints() const { return breaks_; }
    const std::vector<RationalFunction>& pieces() const { return pieces_; }

    Rational evaluate(const Rational& q) const;
    /** Drops breakpoints between equal pieces. */
    PiecewiseRational simplified() const;
    /** The pieces agree at every breakpoint. */
    bool continuous() const;

    friend PiecewiseRational operator+(const PiecewiseRational& a, const PiecewiseRational& b);
    friend PiecewiseRational operator-(const PiecewiseRational& a, const PiecewiseRational& b);
    friend PiecewiseRational operator*(const PiecewiseRational& a, const PiecewiseRational& b);
    /** Equal as functions on (0, inf). */
    friend bool operator==(const PiecewiseRational& a, const PiecewiseRational& b);

    std::string to_string() const;

private:
    std::vector<AlgebraicNumber> breaks_;
    std::vector<RationalFunction> pieces_;
};

/** True iff the univariate polynomial p vanishes at x. */
bool vanishes_at(const Polynomial& p, const AlgebraicNumber& x);

using BettiTable = std::vector<PiecewiseRational>;  // by degree

PiecewiseRational alternating_sum(const BettiTable& b);

struct CalculusResult {
    SimplicialComplex complex;
    BettiTable betti;
};

CalculusResult calculus_point();
CalculusResult calculus_empty();
CalculusResult calculus_points(int k);
CalculusResult calculus_join(const CalculusResult& a, const CalculusResult& b);
CalculusResult calculus_cone(const CalculusResult& a);
CalculusResult calculus_suspension(const CalculusResult& a);
CalculusResult calculus_octahedron(int n);
CalculusResult calculus_disjoint_union(const CalculusResult& a, const CalculusResult& b);

/**
 * Parses and evaluates expressions such as
 *   join(P3, cone(O2))      susp(point)     union(P2, P4)
 * Leaves: point, empty, P<k> (k points), O<n> (n-octahedron).
 * Operations: join, cone, susp, union.
 */
CalculusResult betti_calculus(const std::string& expr);

}  // namespace coxl2
