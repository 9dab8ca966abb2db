#pragma once

#include <coxl2/coxeter.hpp>
#include <coxl2/linalg.hpp>

#include <unordered_map>

namespace coxl2 {

/**
 * A finite Coxeter group with elements indexed 0..|W|-1 in shortlex order
 * (index 0 is the identity) and multiplication tables by generators.
 */
class FiniteGroup {
public:
    explicit FiniteGroup(const CoxeterSystem& w);

    const CoxeterSystem& system() const { return w_; }
    std::size_t size() const { return elements_.size(); }
    const Element& element(int i) const { return elements_[i]; }
    const std::vector<Element>& elements() const { return elements_; }
    int index_of(const Element& e) const;
    int length(int i) const { return static_cast<int>(elements_[i].length()); }
    int right(int i, int s) const { return right_[s][i]; }  // w_i s
    int left(int s, int i) const { return left_[s][i]; }    // s w_i
    int inverse(int i) const { return inverse_[i]; }
    Subset descents(int i) const { return descents_[i]; }
    Subset left_descents(int i) const { return left_descents_[i]; }
    /** Element indices of W_T. */
    std::vector<int> subgroup(Subset t) const;
    /** Shortest element of the coset w_i W_T. */
    int min_coset_rep(int i, Subset t) const;
    Rational weight(int i, const Multiparam& q) const { return w_.weight(elements_[i], q); }
    Vector weights(const Multiparam& q) const;

private:
    CoxeterSystem w_;
    std::vector<Element> elements_;
    std::unordered_map<Word, int, ElementHash> index_;
    std::vector<std::vector<int>> right_, left_;
    std::vector<int> inverse_;
    std::vector<Subset> descents_, left_descents_;
};

}  // namespace coxl2
