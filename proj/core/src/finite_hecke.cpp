#include <coxl2/finite_hecke.hpp>

namespace coxl2 {

namespace {

std::vector<Rational> parameters(const CoxeterSystem& w, const Multiparam& q)
{
    if (q.size() != w.num_classes())
        throw InvalidArgument("expected " + std::to_string(w.num_classes()) + " parameters, got " +
                              std::to_string(q.size()));
    for (const auto& x : q)
        if (x <= 0) throw InvalidArgument("parameters must be positive");
    return q;
}

}  // namespace

WeightedSpace::WeightedSpace(const CoxeterSystem& w, Multiparam q)
    : group_(w), q_(parameters(w, q)), weights_(group_.weights(q_)), algebra_(w, q_)
{
}

Vector WeightedSpace::unit(int i) const
{
    Vector v(dim(), Rational(0));
    v[i] = 1;
    return v;
}

Vector WeightedSpace::from_element(const HeckeElement<Rational>& x) const
{
    Vector v(dim(), Rational(0));
    for (const auto& [w, c] : x) v[group_.index_of(w)] = c;
    return v;
}

HeckeElement<Rational> WeightedSpace::to_element(const Vector& v) const
{
    HeckeElement<Rational> x;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) x.emplace(group_.element(i), v[i]);
    return x;
}

Vector WeightedSpace::left_gen(int s, const Vector& x) const
{
    const Rational& qs = q_[group_.system().class_of(s)];
    Vector r(dim(), Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        int si = group_.left(s, i);
        if (group_.length(si) > group_.length(i)) {
            r[si] += x[i];
        } else {
            r[si] += qs * x[i];
            r[i] += (qs - 1) * x[i];
        }
    }
    return r;
}

Vector WeightedSpace::right_gen(const Vector& x, int s) const
{
    const Rational& qs = q_[group_.system().class_of(s)];
    Vector r(dim(), Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        int is = group_.right(i, s);
        if (group_.length(is) > group_.length(i)) {
            r[is] += x[i];
        } else {
            r[is] += qs * x[i];
            r[i] += (qs - 1) * x[i];
        }
    }
    return r;
}

Vector WeightedSpace::multiply(const Vector& x, const Vector& y) const
{
    // e_w y for every w, built along shortlex: e_w y = e_s (e_{sw} y)
    Vector r(dim(), Rational(0));
    std::vector<Vector> translates(dim());
    translates[0] = y;
    for (std::size_t i = 1; i < dim(); ++i) {
        int s = group_.element(i).word.front();
        translates[i] = left_gen(s, translates[group_.left(s, i)]);
    }
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t k = 0; k < dim(); ++k) r[k] += x[i] * translates[i][k];
    }
    return r;
}

Matrix WeightedSpace::right_image(const Vector& y) const
{
    std::vector<Vector> translates(dim());
    translates[0] = y;
    for (std::size_t i = 1; i < dim(); ++i) {
        int s = group_.element(i).word.front();
        translates[i] = left_gen(s, translates[group_.left(s, i)]);
    }
    return column_basis(Matrix::from_columns(translates, dim()));
}

Vector WeightedSpace::a(Subset t) const { return from_element(algebra_.idempotent_a(t)); }
Vector WeightedSpace::h(Subset t) const { return from_element(algebra_.idempotent_h(t)); }

Subspace right_ideal_image(const WeightedSpace& l2, const Vector& y, std::string label)
{
    return Subspace{std::move(label), l2.right_image(y)};
}

Subspace subspace_A(const WeightedSpace& l2, Subset t)
{
    return right_ideal_image(l2, l2.a(t), "A_" + l2.group().system().format(t));
}

Subspace subspace_H(const WeightedSpace& l2, Subset t)
{
    return right_ideal_image(l2, l2.h(t), "H_" + l2.group().system().format(t));
}

Subspace subspace_D(const WeightedSpace& l2, Subset v)
{
    Subset s = l2.group().system().all();
    Matrix sum(l2.dim(), 0);
    for (Subset u = v; u != 0; u = (u - 1) & v) {
        if (u == v) continue;
        sum = sum_spans(sum, subspace_A(l2, s & ~u).basis);
    }
    if (v != 0) sum = sum_spans(sum, subspace_A(l2, s).basis);  // U = ∅
    Matrix perp = weighted_complement(sum, l2.weights());
    return Subspace{"D_" + l2.group().system().format(v),
                    intersect_spans(subspace_A(l2, s & ~v).basis, perp)};
}

Subspace subspace_G(const WeightedSpace& l2, Subset v)
{
    Subset s = l2.group().system().all();
    Subset rest = s & ~v;
    Matrix sum(l2.dim(), 0);
    for (Subset extra = rest; extra != 0; extra = (extra - 1) & rest)
        sum = sum_spans(sum, subspace_H(l2, v | extra).basis);
    Matrix perp = weighted_complement(sum, l2.weights());
    return Subspace{"G_" + l2.group().system().format(v), intersect_spans(subspace_H(l2, v).basis, perp)};
}

bool is_left_invariant(const WeightedSpace& l2, const Subspace& v)
{
    std::vector<Vector> moved;
    for (std::size_t j = 0; j < v.basis.cols(); ++j) {
        Vector b = v.basis.column(j);
        for (std::size_t s = 0; s < l2.group().system().rank(); ++s) moved.push_back(l2.left_gen(s, b));
    }
    if (moved.empty()) return true;
    return span_contains(v.basis, Matrix::from_columns(moved, l2.dim()));
}

bool same_subspace(const Subspace& a, const Subspace& b)
{
    return a.rank() == b.rank() && span_contains(a.basis, b.basis);
}

Rational von_neumann_dim(const WeightedSpace& l2, const Subspace& v)
{
    if (!is_left_invariant(l2, v)) throw CheckFailed("subspace " + v.label + " is not left-invariant");
    if (v.rank() == 0) return 0;
    Vector p = weighted_projection(v.basis, l2.weights(), l2.unit(0));
    return p[0];
}

Rational descent_class_ratio(const WeightedSpace& l2, Subset t)
{
    Rational num = 0, total = 0;
    const auto& g = l2.group();
    for (std::size_t i = 0; i < g.size(); ++i) {
        total += l2.weights()[i];
        if (g.descents(i) == t) num += l2.weights()[i];
    }
    return num / total;
}

bool SolomonReport::ok() const
{
    if (!direct_D || !direct_G) return false;
    for (const auto& e : entries)
        if (!e.matches_D || !e.matches_G || e.dim_D != e.expected) return false;
    return true;
}

SolomonReport verify_solomon(const WeightedSpace& l2)
{
    const CoxeterSystem& w = l2.group().system();
    Subset s = w.all();
    SolomonReport report;
    Matrix all_D(l2.dim(), 0), all_G(l2.dim(), 0);
    std::size_t rank_D = 0, rank_G = 0;
    for (Subset t = 0;; ++t) {
        SolomonEntry e;
        e.t = t;
        Subspace x = right_ideal_image(l2, l2.multiply(l2.h(t), l2.a(s & ~t)), "L2 h_T a_{S-T}");
        Subspace y = right_ideal_image(l2, l2.multiply(l2.a(s & ~t), l2.h(t)), "L2 a_{S-T} h_T");
        e.dim_D = von_neumann_dim(l2, x);
        e.dim_G = von_neumann_dim(l2, y);
        e.expected = descent_class_ratio(l2, t);
        e.matches_D = same_subspace(x, subspace_D(l2, t));
        e.matches_G = same_subspace(y, subspace_G(l2, t));
        if (report.failure.empty()) {
            std::string name = w.format(t);
            if (!e.matches_D)
                report.failure = "L2 h_T a_{S-T} != D_T for T = " + name;
            else if (!e.matches_G)
                report.failure = "L2 a_{S-T} h_T != G_T for T = " + name;
            else if (e.dim_D != e.expected)
                report.failure = "dim D_T = " + e.dim_D.get_str() + " but W^T/W = " + e.expected.get_str() +
                                 " for T = " + name;
        }
        rank_D += x.rank();
        rank_G += y.rank();
        all_D = all_D.hcat(x.basis);
        all_G = all_G.hcat(y.basis);
        report.entries.push_back(std::move(e));
        if (t == s) break;
    }
    report.direct_D = rank_D == l2.dim() && rank(all_D) == l2.dim();
    report.direct_G = rank_G == l2.dim() && rank(all_G) == l2.dim();
    if (report.failure.empty() && !report.direct_D) report.failure = "sum of L2 h_T a_{S-T} is not direct and exhaustive";
    if (report.failure.empty() && !report.direct_G) report.failure = "sum of L2 a_{S-T} h_T is not direct and exhaustive";
    return report;
}

}  // namespace coxl2
