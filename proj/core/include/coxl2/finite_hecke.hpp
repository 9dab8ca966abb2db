#pragma once

#include <coxl2/finite_group.hpp>
#include <coxl2/hecke.hpp>
#include <coxl2/linalg.hpp>

#include <string>
#include <vector>

namespace coxl2 {

/**
 * L^2_q of a finite Coxeter group: coordinates in the basis e_w (indexed as
 * in FiniteGroup) with the diagonal inner product <e_w, e_w> = q_w.
 */
class WeightedSpace {
public:
    WeightedSpace(const CoxeterSystem& w, Multiparam q);

    const FiniteGroup& group() const { return group_; }
    const Multiparam& q() const { return q_; }
    std::size_t dim() const { return group_.size(); }
    const Vector& weights() const { return weights_; }

    Vector unit(int i) const;
    Vector from_element(const HeckeElement<Rational>& x) const;
    HeckeElement<Rational> to_element(const Vector& v) const;

    /** e_s x */
    Vector left_gen(int s, const Vector& x) const;
    /** x e_s */
    Vector right_gen(const Vector& x, int s) const;
    /** Hecke product x y. */
    Vector multiply(const Vector& x, const Vector& y) const;
    Rational inner(const Vector& x, const Vector& y) const { return weighted_dot(x, y, weights_); }

    /** Basis of L^2_q y = span{e_w y}. */
    Matrix right_image(const Vector& y) const;

    Vector a(Subset t) const;
    Vector h(Subset t) const;

private:
    FiniteGroup group_;
    Multiparam q_;
    Vector weights_;
    HeckeAlgebra<Rational> algebra_;
};

struct Subspace {
    std::string label;
    Matrix basis;  // columns
    std::size_t rank() const { return basis.cols(); }
};

Subspace subspace_A(const WeightedSpace& l2, Subset t);
Subspace subspace_H(const WeightedSpace& l2, Subset t);
/** D_V = A_{S-V} ∩ (sum_{U ⊊ V} A_{S-U})^⊥ */
Subspace subspace_D(const WeightedSpace& l2, Subset v);
/** G_V = H_V ∩ (sum_{U ⊋ V} H_U)^⊥ */
Subspace subspace_G(const WeightedSpace& l2, Subset v);
/** Closure of the span of right translates, L^2_q y. */
Subspace right_ideal_image(const WeightedSpace& l2, const Vector& y, std::string label);

bool is_left_invariant(const WeightedSpace& l2, const Subspace& v);
bool same_subspace(const Subspace& a, const Subspace& b);
/** <e_1 p_V, e_1>_q; throws CheckFailed if V is not left-invariant. */
Rational von_neumann_dim(const WeightedSpace& l2, const Subspace& v);

/** sum of q_w over w with descent set exactly T, divided by W(q). */
Rational descent_class_ratio(const WeightedSpace& l2, Subset t);

struct SolomonEntry {
    Subset t = 0;
    Rational dim_D;          // von Neumann dim of L^2 h_T a_{S-T}
    Rational dim_G;          // von Neumann dim of L^2 a_{S-T} h_T
    Rational expected;       // W^T(q)/W(q)
    bool matches_D = false;  // L^2 h_T a_{S-T} = D_T
    bool matches_G = false;  // L^2 a_{S-T} h_T = G_T
};

struct SolomonReport {
    std::vector<SolomonEntry> entries;
    bool direct_D = false;  // sum over T of L^2 h_T a_{S-T} is direct and exhausts L^2_q
    bool direct_G = false;
    bool ok() const;
    /** First violated identity, empty when ok. */
    std::string failure;
};

SolomonReport verify_solomon(const WeightedSpace& l2);

}  // namespace coxl2
