#pragma once

#include <coxl2/error.hpp>
#include <coxl2/polynomial.hpp>

#include <chrono>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace coxl2 {

/** Entry of the Coxeter matrix meaning m_st = infinity. */
constexpr unsigned kInf = 0;

using Word = std::vector<int>;
/** Subsets of S as bitmasks over generator indices (at most 64 generators). */
using Subset = std::uint64_t;

inline bool contains(Subset set, int s) { return (set >> s) & 1u; }
inline Subset singleton(int s) { return Subset{1} << s; }
inline bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }
int cardinality(Subset s);
std::vector<int> members(Subset s);

struct Element {
    Word word;  // canonical reduced word
    std::size_t length() const { return word.size(); }
    friend bool operator==(const Element& a, const Element& b) { return a.word == b.word; }
    friend bool operator!=(const Element& a, const Element& b) { return a.word != b.word; }
    /** Shortlex order, the order used for deterministic listings. */
    friend bool operator<(const Element& a, const Element& b)
    {
        if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
        return a.word < b.word;
    }
};

struct ElementHash {
    std::size_t operator()(const Element& e) const;
    std::size_t operator()(const Word& w) const;
};

struct Budget {
    std::size_t max_elements = 5'000'000;
    double max_seconds = 0;  // 0: no wall-clock limit
};

/** Thrown when an enumeration exceeds its budget; carries what was finished. */
class BudgetExceeded : public Error {
public:
    BudgetExceeded(std::vector<Element> partial, int completed_length)
        : Error("budget_exceeded", "enumeration budget exceeded after completing length " +
                                       std::to_string(completed_length)),
          partial_(std::move(partial)),
          completed_(completed_length)
    {
    }
    const std::vector<Element>& partial() const { return partial_; }
    int completed_length() const { return completed_; }

private:
    std::vector<Element> partial_;
    int completed_;
};

struct SphericalPoset {
    std::vector<Subset> subsets;             // sorted by cardinality, then bitmask
    std::vector<std::vector<Subset>> strata; // strata[k] = spherical subsets of size k
    bool contains(Subset t) const;
    std::vector<Subset> at_least(Subset t) const;  // spherical U with t ⊆ U
};

/**
 * A Coxeter system (W,S) with a parameter-class map S -> {0..num_classes-1}.
 * Immutable; the word-problem memo behind it is internally synchronized, so a
 * system can be shared across threads.
 */
class CoxeterSystem {
public:
    CoxeterSystem(std::vector<std::string> labels, std::vector<std::vector<unsigned>> matrix,
                  std::vector<int> classes = {});

    std::size_t rank() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    unsigned m(int s, int t) const { return matrix_[s][t]; }
    const std::vector<std::vector<unsigned>>& matrix() const { return matrix_; }
    int class_of(int s) const { return classes_[s]; }
    const std::vector<int>& classes() const { return classes_; }
    std::size_t num_classes() const { return num_classes_; }
    bool is_right_angled() const { return right_angled_; }
    Subset all() const;

    int index_of(const std::string& label) const;
    Word parse_word(const std::string& text) const;
    std::string format(const Element& w) const;
    std::string format(Subset t) const;

    Element identity() const { return Element{}; }
    Element normal_form(const Word& word) const;
    Element right_multiply(const Element& w, int s) const;
    Element left_multiply(int s, const Element& w) const;
    Element multiply(const Element& u, const Element& v) const;
    Element inverse(const Element& w) const;
    /** In(w) = {s : l(ws) < l(w)}. */
    Subset descent_set(const Element& w) const;
    Subset left_descent_set(const Element& w) const;
    /** Exponent vector of the monomial t_w over the parameter classes. */
    Exponents class_exponents(const Element& w) const;
    /** q_w for a numeric multiparameter. */
    Rational weight(const Element& w, const std::vector<Rational>& q) const;

    /** Every element of length <= n exactly once, sorted shortlex. */
    std::vector<Element> enumerate_ball(unsigned n, const Budget& budget = {}) const;
    /** Elements of the special subgroup W_T of length <= n. */
    std::vector<Element> enumerate_subgroup(Subset t, unsigned n, const Budget& budget = {}) const;
    /** All of W_T for spherical T. */
    std::vector<Element> enumerate_finite_subgroup(Subset t) const;
    /** Longest element of W_T for spherical T. */
    Element longest_element(Subset t) const;

    bool is_spherical(Subset t) const;
    bool is_finite() const { return is_spherical(all()); }
    SphericalPoset spherical_poset() const;

    /** W_T as a system in its own right (generators in order, classes kept). */
    CoxeterSystem restrict_to(Subset t) const;
    CoxeterSystem with_single_class() const;

private:
    struct Memo;
    Element right_multiply_generic(const Element& w, int s) const;
    Element right_multiply_right_angled(const Element& w, int s) const;

    std::vector<std::string> labels_;
    std::vector<std::vector<unsigned>> matrix_;
    std::vector<int> classes_;
    std::size_t num_classes_ = 1;
    bool right_angled_ = false;
    std::shared_ptr<Memo> memo_;
};

/**
 * Text format:
 *   generators: s t u
 *   matrix:            (rows follow; "inf" for infinity)
 *   1 3 2
 *   ...
 *   classes: a a b     (optional, one label per generator)
 * Instead of a matrix, lines "m s t 5" set individual entries; unspecified
 * off-diagonal entries then default to 2.
 */
CoxeterSystem parse_system(const std::string& text);
std::string serialize_system(const CoxeterSystem& w);

}  // namespace coxl2
