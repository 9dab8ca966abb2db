#pragma once

#include <coxl2/coxeter.hpp>
#include <coxl2/rational_function.hpp>
#include <coxl2/roots.hpp>

#include <map>
#include <memory>
#include <optional>

namespace coxl2 {

enum class RegionTag { interior_R, boundary_R, interior_Rinv, boundary_Rinv, intermediate, all };

std::string to_string(RegionTag tag);

struct RegionClass {
    RegionTag tag = RegionTag::intermediate;
    bool closure_R = false;     // q in the closure of R
    bool closure_Rinv = false;  // q^{-1} in the closure of R
    // smallest positive root lambda of numerator(1/W(lambda q)), and the same for q^{-1}
    std::optional<AlgebraicNumber> lambda_q, lambda_qinv;
    std::string witness() const;
};

/**
 * Growth series data of a Coxeter system: the spherical polynomials W_T(t),
 * 1/W(t) and the ratios W^T(t)/W(t). Everything is computed in the
 * constructor, after which the object is immutable.
 */
class GrowthData {
public:
    explicit GrowthData(const CoxeterSystem& w);

    const CoxeterSystem& system() const { return w_; }
    const SphericalPoset& poset() const { return poset_; }
    std::size_t nvars() const { return w_.num_classes(); }

    /** W_T(t) for spherical T. */
    const Polynomial& spherical_growth_poly(Subset t) const;
    /** Monomial t_{w_T} of the longest element of W_T. */
    const Exponents& longest_monomial(Subset t) const;

    const RationalFunction& inverse_series() const { return inverse_; }
    RationalFunction growth_series() const;
    /** X_T(t) = W(t)/W_T(t) for any T (W_T may be infinite). */
    RationalFunction cofactor_series(Subset t) const;
    /** W^T(t)/W(t) by the alternating sum over spherical U containing T. */
    RationalFunction wT_over_W(Subset t) const;
    /** The same ratio from the alternating sum of 1/W_{S-T'} over T' in T. */
    RationalFunction wT_over_W_crosscheck(Subset t) const;
    Rational wT_over_W_at(Subset t, const Multiparam& q) const;

    Rational inverse_at(const Multiparam& q) const;

    /** Smallest positive root of the numerator of 1/W(t); nullopt means infinity (finite W). */
    std::optional<AlgebraicNumber> radius_of_convergence() const;
    RegionClass classify_region(const Multiparam& q) const;

private:
    CoxeterSystem w_;
    SphericalPoset poset_;
    std::map<Subset, Polynomial> polys_;
    std::map<Subset, Exponents> longest_;
    RationalFunction inverse_;
    bool finite_ = false;
};

/** Sum of c_i / d_i with identical denominators merged first. */
RationalFunction sum_fractions(const std::vector<std::pair<Polynomial, Polynomial>>& terms, std::size_t nvars);

/** 1/W(t) for W_T with T arbitrary, via the subsystem. */
RationalFunction inverse_series_of_subset(const CoxeterSystem& w, Subset t);

}  // namespace coxl2
