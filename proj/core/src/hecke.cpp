#include <coxl2/hecke.hpp>

#include <sstream>

namespace coxl2 {

template <class C>
HeckeAlgebra<C>::HeckeAlgebra(const CoxeterSystem& w, std::vector<C> q) : w_(w), q_(std::move(q))
{
    if (q_.size() != w_.num_classes())
        throw InvalidArgument("expected " + std::to_string(w_.num_classes()) + " parameters, got " +
                              std::to_string(q_.size()));
}

template <class C>
C HeckeAlgebra<C>::q_w(const Element& w) const
{
    C r = one();
    for (int s : w.word) r = r * q_of(s);
    return r;
}

template <class C>
typename HeckeAlgebra<C>::Elem HeckeAlgebra<C>::left_generator(int s, const Elem& x) const
{
    Elem r;
    C qs = q_of(s);
    C qs1 = qs - one();
    for (const auto& [w, a] : x) {
        Element sw = w_.left_multiply(s, w);
        if (sw.length() > w.length()) {
            add_to(r, sw, a);
        } else {
            add_to(r, sw, qs * a);
            add_to(r, w, qs1 * a);
        }
    }
    return r;
}

template <class C>
typename HeckeAlgebra<C>::Elem HeckeAlgebra<C>::right_generator(const Elem& x, int s) const
{
    Elem r;
    C qs = q_of(s);
    C qs1 = qs - one();
    for (const auto& [w, a] : x) {
        Element ws = w_.right_multiply(w, s);
        if (ws.length() > w.length()) {
            add_to(r, ws, a);
        } else {
            add_to(r, ws, qs * a);
            add_to(r, w, qs1 * a);
        }
    }
    return r;
}

template <class C>
typename HeckeAlgebra<C>::Elem HeckeAlgebra<C>::multiply(const Elem& x, const Elem& y) const
{
    Elem r;
    for (const auto& [u, a] : x) {
        Elem v = y;
        for (auto it = u.word.rbegin(); it != u.word.rend(); ++it) v = left_generator(*it, v);
        for (const auto& [w, b] : v) add_to(r, w, a * b);
    }
    return r;
}

template <class C>
typename HeckeAlgebra<C>::Elem HeckeAlgebra<C>::star(const Elem& x) const
{
    Elem r;
    for (const auto& [w, a] : x) add_to(r, w_.inverse(w), a);
    return r;
}

template <class C>
typename HeckeAlgebra<C>::Elem HeckeAlgebra<C>::j(const Elem& x) const
{
    Elem r;
    for (const auto& [w, a] : x) {
        C c = q_w(w) * a;
        add_to(r, w, w.length() % 2 ? -c : c);
    }
    return r;
}

template <class C>
HeckeAlgebra<C> HeckeAlgebra<C>::inverse_parameters() const
{
    std::vector<C> qi;
    for (const auto& x : q_) qi.push_back(one() / x);
    return HeckeAlgebra(w_, qi);
}

template <class C>
C HeckeAlgebra<C>::inner(const Elem& x, const Elem& y) const
{
    C s = zero();
    for (const auto& [w, a] : x) {
        auto it = y.find(w);
        if (it != y.end()) s = s + a * it->second * q_w(w);
    }
    return s;
}

template <class C>
typename HeckeAlgebra<C>::Elem HeckeAlgebra<C>::idempotent_a(Subset t) const
{
    auto elems = w_.enumerate_finite_subgroup(t);
    C total = zero();
    for (const auto& w : elems) total = total + q_w(w);
    C f = one() / total;
    Elem r;
    for (const auto& w : elems) add_to(r, w, f);
    return r;
}

template <class C>
typename HeckeAlgebra<C>::Elem HeckeAlgebra<C>::idempotent_h(Subset t) const
{
    auto elems = w_.enumerate_finite_subgroup(t);
    C total = zero();
    for (const auto& w : elems) total = total + one() / q_w(w);
    C f = one() / total;
    Elem r;
    for (const auto& w : elems) {
        C c = f / q_w(w);
        add_to(r, w, w.length() % 2 ? -c : c);
    }
    return r;
}

template class HeckeAlgebra<Rational>;
template class HeckeAlgebra<RationalFunction>;

namespace {

template <class C>
std::string format_impl(const CoxeterSystem& w, const HeckeElement<C>& x, auto&& coeff)
{
    if (x.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : x) {
        if (!first) os << " + ";
        first = false;
        os << "(" << coeff(c) << ")*e[" << w.format(e) << "]";
    }
    return os.str();
}

}  // namespace

std::string format_element(const CoxeterSystem& w, const HeckeElement<Rational>& x)
{
    return format_impl(w, x, [](const Rational& c) { return c.get_str(); });
}

std::string format_element(const CoxeterSystem& w, const HeckeElement<RationalFunction>& x)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < w.num_classes(); ++i)
        names.push_back(w.num_classes() == 1 ? "q" : "q" + std::to_string(i + 1));
    return format_impl(w, x, [&](const RationalFunction& c) { return c.to_string(names); });
}

HeckeAlgebra<RationalFunction> symbolic_hecke(const CoxeterSystem& w)
{
    std::vector<RationalFunction> q;
    for (std::size_t i = 0; i < w.num_classes(); ++i) q.push_back(rf_variable(w.num_classes(), i));
    return HeckeAlgebra<RationalFunction>(w, q);
}

}  // namespace coxl2
