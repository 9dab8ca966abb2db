#pragma once

#include <coxl2/coxeter.hpp>
#include <coxl2/rational_function.hpp>

#include <map>
#include <type_traits>
#include <vector>

namespace coxl2 {

inline bool is_zero(const Rational& c) { return c == 0; }
inline bool is_zero(const RationalFunction& c) { return c.is_zero(); }

/** Finitely supported combination of basis elements e_w. */
template <class C>
using HeckeElement = std::map<Element, C>;

/**
 * Hecke algebra of (W,S) with parameters q (one per class), coefficients
 * either exact rationals (numeric q) or rational functions (symbolic q).
 * Products follow e_s e_w = e_{sw} if l(sw) > l(w), and
 * e_s e_w = q_s e_{sw} + (q_s - 1) e_w otherwise.
 */
template <class C>
class HeckeAlgebra {
public:
    using Elem = HeckeElement<C>;

    HeckeAlgebra(const CoxeterSystem& w, std::vector<C> q);

    const CoxeterSystem& system() const { return w_; }
    const std::vector<C>& q() const { return q_; }
    C zero() const { return q_[0] - q_[0]; }
    C one() const { return q_[0] / q_[0]; }
    C q_of(int s) const { return q_[w_.class_of(s)]; }
    C q_w(const Element& w) const;

    Elem basis(const Element& w) const { return Elem{{w, one()}}; }
    Elem unit() const { return basis(w_.identity()); }

    Elem left_generator(int s, const Elem& x) const;
    Elem right_generator(const Elem& x, int s) const;
    Elem multiply(const Elem& x, const Elem& y) const;

    /** (sum a_w e_w)* = sum a_{w^{-1}} e_w */
    Elem star(const Elem& x) const;
    /** j(e_w) = eps_w q_w e_w, landing in the algebra with parameters q^{-1}. */
    Elem j(const Elem& x) const;
    HeckeAlgebra inverse_parameters() const;

    /** <sum a_w e_w, sum b_w e_w> = sum a_w b_w q_w */
    C inner(const Elem& x, const Elem& y) const;

    /** a_T = (1/W_T(q)) sum_{w in W_T} e_w */
    Elem idempotent_a(Subset t) const;
    /** h_T = (1/W_T(q^{-1})) sum_{w in W_T} eps_w q_w^{-1} e_w */
    Elem idempotent_h(Subset t) const;

private:
    CoxeterSystem w_;
    std::vector<C> q_;
};

template <class C>
void add_to(HeckeElement<C>& x, const Element& w, const std::type_identity_t<C>& c)
{
    if (is_zero(c)) return;
    auto [it, inserted] = x.emplace(w, c);
    if (!inserted) {
        it->second = it->second + c;
        if (is_zero(it->second)) x.erase(it);
    }
}

template <class C>
HeckeElement<C> add(const HeckeElement<C>& x, const HeckeElement<C>& y)
{
    HeckeElement<C> r = x;
    for (const auto& [w, c] : y) add_to(r, w, c);
    return r;
}

template <class C>
HeckeElement<C> scale(const HeckeElement<C>& x, const std::type_identity_t<C>& c)
{
    HeckeElement<C> r;
    for (const auto& [w, a] : x) add_to(r, w, a * c);
    return r;
}

template <class C>
HeckeElement<C> subtract(const HeckeElement<C>& x, const HeckeElement<C>& y)
{
    HeckeElement<C> r = x;
    for (const auto& [w, c] : y) add_to(r, w, -c);
    return r;
}

std::string format_element(const CoxeterSystem& w, const HeckeElement<Rational>& x);
std::string format_element(const CoxeterSystem& w, const HeckeElement<RationalFunction>& x);

/** Symbolic parameters q_i = t_i. */
HeckeAlgebra<RationalFunction> symbolic_hecke(const CoxeterSystem& w);

extern template class HeckeAlgebra<Rational>;
extern template class HeckeAlgebra<RationalFunction>;

}  // namespace coxl2
