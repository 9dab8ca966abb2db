#pragma once

#include <coxl2/complex.hpp>
#include <coxl2/finite_group.hpp>
#include <coxl2/growth.hpp>
#include <coxl2/linalg.hpp>

#include <string>
#include <vector>

namespace coxl2 {

enum class BettiMethod { formula_R, formula_Rinv, direct_finite };
std::string to_string(BettiMethod m);

struct BettiReport {
    std::vector<Rational> degrees;  // b^0 .. b^dim
    RegionClass region;
    BettiMethod method = BettiMethod::formula_R;
    Rational euler;  // chi_q
    Rational alternating_sum() const;
};

/** c^i_q = sum over i-cells sigma of Z of 1/W_{S(sigma)}(q). */
std::vector<Rational> cochain_dims(const MirroredComplex& z, const GrowthData& g, const Multiparam& q);
/** sum (-1)^i c^i_q */
Rational euler_characteristic(const MirroredComplex& z, const GrowthData& g, const Multiparam& q);
/** sum over spherical T of (chi(Z_T) - chi(dZ_T)) / W_T(q) */
Rational euler_characteristic_by_types(const MirroredComplex& z, const GrowthData& g, const Multiparam& q);

/**
 * Betti numbers from the relative cohomology of (Z, Z^T) weighted by
 * W^T/W. Throws NotComputable in the intermediate region.
 */
BettiReport betti_formula(const MirroredComplex& z, const GrowthData& g, const Multiparam& q);
/** The R-side sum, evaluated regardless of region. */
std::vector<Rational> betti_formula_R(const MirroredComplex& z, const GrowthData& g, const Multiparam& q);
/** The R^{-1}-side sum, evaluated regardless of region. */
std::vector<Rational> betti_formula_Rinv(const MirroredComplex& z, const GrowthData& g, const Multiparam& q);

/**
 * The finite complex U(W,Z) for finite W. Cells of degree i are pairs
 * (u, c) with c an i-face of Z and u a minimal representative of
 * u W_{S(c)}; their weight is q_u.
 */
class WeightedCochainComplex {
public:
    WeightedCochainComplex(const MirroredComplex& z, const FiniteGroup& group, const Multiparam& q);

    int top_degree() const { return static_cast<int>(cells_.size()) - 1; }
    std::size_t num_cells(int i) const { return cells_[i].size(); }
    /** (group element index, face index within Z's faces(i)) */
    const std::vector<std::pair<int, int>>& cells(int i) const { return cells_[i]; }
    const Vector& weights(int i) const { return weights_[i]; }
    /** delta^i : C^i -> C^{i+1}, as a num_cells(i+1) x num_cells(i) matrix. */
    const Matrix& coboundary(int i) const { return delta_[i]; }
    /** Unweighted boundary C^{i+1} -> C^i (transpose of delta). */
    Matrix boundary(int i) const { return delta_[i].transpose(); }
    /** Weighted boundary, the adjoint of delta^i: M_i^{-1} delta^T M_{i+1}. */
    Matrix boundary_q(int i) const;
    /** Multiplication by 1/mu in degree i; intertwines the plain and weighted boundaries. */
    Matrix theta(int i) const;

    /** <delta x, y> = <x, d^q y> for every pair of unit vectors. */
    bool check_adjointness() const;
    /** theta ∘ d = d^q ∘ theta in every degree. */
    bool check_theta() const;

    /** z^i: von Neumann dimension of ker delta^i. */
    Rational cocycle_dim(int i) const;
    std::vector<Rational> cochain_dims() const;
    std::vector<Rational> betti() const;

private:
    std::vector<std::vector<std::pair<int, int>>> cells_;
    std::vector<Vector> weights_;
    std::vector<Matrix> delta_;
    std::vector<std::vector<Rational>> orbit_factor_;  // 1/W_{S(c)}(q) for each face c, per degree
    std::vector<std::vector<int>> identity_cell_;      // cell index of (1, c) for each face c
};

BettiReport direct_betti_finite(const MirroredComplex& z, const GrowthData& g, const Multiparam& q);

struct RuinReport {
    std::vector<Rational> dims;  // von Neumann dims of L^2 H_k, k = 0..|U|
    Rational expected;           // W_U^T(q)/W_U(q)
    int concentrated_in = -1;    // the single nonzero degree, -1 if none or several
};

/** L^2_q homology of the (U,T)-ruin of the Coxeter cell complex of W_U. */
RuinReport ruin_homology_finite(const CoxeterSystem& w, Subset u, Subset t, const Multiparam& q);

}  // namespace coxl2
