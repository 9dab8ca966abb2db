#include <coxl2/finite_group.hpp>

namespace coxl2 {

FiniteGroup::FiniteGroup(const CoxeterSystem& w) : w_(w)
{
    if (!w_.is_finite()) throw Unsupported("the group is infinite; finite realization unavailable");
    elements_ = w_.enumerate_ball(~0u);
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i].word, static_cast<int>(i));
    std::size_t n = elements_.size();
    right_.assign(w_.rank(), std::vector<int>(n));
    left_.assign(w_.rank(), std::vector<int>(n));
    inverse_.resize(n);
    descents_.resize(n);
    left_descents_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        inverse_[i] = index_of(w_.inverse(elements_[i]));
        descents_[i] = w_.descent_set(elements_[i]);
        for (std::size_t s = 0; s < w_.rank(); ++s)
            right_[s][i] = index_of(w_.right_multiply(elements_[i], static_cast<int>(s)));
    }
    for (std::size_t i = 0; i < n; ++i) {
        left_descents_[i] = descents_[inverse_[i]];
        for (std::size_t s = 0; s < w_.rank(); ++s) left_[s][i] = inverse_[right_[s][inverse_[i]]];
    }
}

int FiniteGroup::index_of(const Element& e) const
{
    auto it = index_.find(e.word);
    if (it == index_.end()) throw InvalidArgument("element not in the group table");
    return it->second;
}

std::vector<int> FiniteGroup::subgroup(Subset t) const
{
    std::vector<int> out;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        bool inside = true;
        for (int s : elements_[i].word)
            if (!contains(t, s)) {
                inside = false;
                break;
            }
        if (inside) out.push_back(static_cast<int>(i));
    }
    return out;
}

int FiniteGroup::min_coset_rep(int i, Subset t) const
{
    while (Subset d = descents_[i] & t) i = right_[__builtin_ctzll(d)][i];
    return i;
}

Vector FiniteGroup::weights(const Multiparam& q) const
{
    Vector v;
    v.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) v.push_back(weight(static_cast<int>(i), q));
    return v;
}

}  // namespace coxl2
