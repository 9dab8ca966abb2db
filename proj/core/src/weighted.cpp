#include <coxl2/weighted.hpp>

namespace coxl2 {

std::string to_string(BettiMethod m)
{
    switch (m) {
    case BettiMethod::formula_R: return "formula_R";
    case BettiMethod::formula_Rinv: return "formula_Rinv";
    case BettiMethod::direct_finite: return "direct_finite";
    }
    return "?";
}

Rational BettiReport::alternating_sum() const
{
    Rational s = 0;
    for (std::size_t i = 0; i < degrees.size(); ++i) s += i % 2 ? -degrees[i] : degrees[i];
    return s;
}

namespace {

void check_params(const GrowthData& g, const Multiparam& q)
{
    if (q.size() != g.nvars())
        throw InvalidArgument("expected " + std::to_string(g.nvars()) + " parameter values, got " +
                              std::to_string(q.size()));
    for (const auto& x : q)
        if (x <= 0) throw InvalidArgument("parameters must be positive");
}

Rational spherical_value(const GrowthData& g, Subset t, const Multiparam& q)
{
    return g.spherical_growth_poly(t).evaluate(q);
}

std::vector<Rational> weighted_sum(const MirroredComplex& z, const GrowthData& g, const Multiparam& q, bool inverse_side)
{
    const CoxeterSystem& w = g.system();
    z.validate(w);
    Subset s_all = w.all();
    Multiparam qq = inverse_side ? inverse(q) : q;
    std::vector<Rational> b(static_cast<std::size_t>(std::max(0, z.base().dimension() + 1)), Rational(0));
    for (Subset t : g.poset().subsets) {
        Rational factor = g.wT_over_W_at(t, qq);
        if (factor == 0) continue;
        auto rb = z.relative_betti(inverse_side ? (s_all & ~t) : t);
        for (std::size_t i = 0; i < rb.size(); ++i)
            if (rb[i]) b[i] += factor * rb[i];
    }
    return b;
}

}  // namespace

std::vector<Rational> cochain_dims(const MirroredComplex& z, const GrowthData& g, const Multiparam& q)
{
    check_params(g, q);
    z.validate(g.system());
    int dim = z.base().dimension();
    std::vector<Rational> c(static_cast<std::size_t>(std::max(0, dim + 1)), Rational(0));
    std::map<Subset, Rational> inv;
    for (int d = 0; d <= dim; ++d)
        for (const auto& f : z.base().faces(d)) {
            Subset t = z.type(f);
            auto it = inv.find(t);
            if (it == inv.end()) it = inv.emplace(t, 1 / spherical_value(g, t, q)).first;
            c[d] += it->second;
        }
    return c;
}

Rational euler_characteristic(const MirroredComplex& z, const GrowthData& g, const Multiparam& q)
{
    auto c = cochain_dims(z, g, q);
    Rational chi = 0;
    for (std::size_t i = 0; i < c.size(); ++i) chi += i % 2 ? -c[i] : c[i];
    return chi;
}

Rational euler_characteristic_by_types(const MirroredComplex& z, const GrowthData& g, const Multiparam& q)
{
    check_params(g, q);
    z.validate(g.system());
    Rational chi = 0;
    for (const auto& [t, n] : z.type_census()) chi += Rational(n) / spherical_value(g, t, q);
    return chi;
}

std::vector<Rational> betti_formula_R(const MirroredComplex& z, const GrowthData& g, const Multiparam& q)
{
    check_params(g, q);
    return weighted_sum(z, g, q, false);
}

std::vector<Rational> betti_formula_Rinv(const MirroredComplex& z, const GrowthData& g, const Multiparam& q)
{
    check_params(g, q);
    return weighted_sum(z, g, q, true);
}

BettiReport betti_formula(const MirroredComplex& z, const GrowthData& g, const Multiparam& q)
{
    BettiReport r;
    r.region = g.classify_region(q);
    r.euler = euler_characteristic(z, g, q);
    switch (r.region.tag) {
    case RegionTag::intermediate:
        throw NotComputable("q lies in the intermediate region (neither q nor q^-1 is in the closure of the "
                            "convergence region); no closed formula applies (" + r.region.witness() + ")");
    case RegionTag::interior_R:
    case RegionTag::boundary_R:
        r.method = BettiMethod::formula_R;
        r.degrees = betti_formula_R(z, g, q);
        break;
    case RegionTag::interior_Rinv:
    case RegionTag::boundary_Rinv:
        r.method = BettiMethod::formula_Rinv;
        r.degrees = betti_formula_Rinv(z, g, q);
        break;
    case RegionTag::all: {
        r.method = BettiMethod::formula_R;
        r.degrees = betti_formula_R(z, g, q);
        if (betti_formula_Rinv(z, g, q) != r.degrees)
            throw CheckFailed("the two closed formulas disagree for a finite group");
        break;
    }
    }
    return r;
}

WeightedCochainComplex::WeightedCochainComplex(const MirroredComplex& z, const FiniteGroup& group, const Multiparam& q)
{
    const CoxeterSystem& w = group.system();
    z.validate(w);
    const SimplicialComplex& base = z.base();
    int dim = base.dimension();
    Vector qw = group.weights(q);
    std::map<Subset, Rational> inv;
    auto inv_growth = [&](Subset t) {
        auto it = inv.find(t);
        if (it == inv.end()) {
            Rational total = 0;
            for (int i : group.subgroup(t)) total += qw[i];
            it = inv.emplace(t, 1 / total).first;
        }
        return it->second;
    };

    // cell_of[d][face] maps a group element index (a minimal rep) to a cell index
    std::vector<std::vector<std::map<int, int>>> cell_of(dim + 1);
    cells_.resize(dim + 1);
    weights_.resize(dim + 1);
    orbit_factor_.resize(dim + 1);
    identity_cell_.resize(dim + 1);
    for (int d = 0; d <= dim; ++d) {
        const auto& fs = base.faces(d);
        cell_of[d].resize(fs.size());
        for (std::size_t f = 0; f < fs.size(); ++f) {
            Subset t = z.type(fs[f]);
            orbit_factor_[d].push_back(inv_growth(t));
            for (std::size_t u = 0; u < group.size(); ++u) {
                if (group.descents(u) & t) continue;
                int idx = static_cast<int>(cells_[d].size());
                if (u == 0) identity_cell_[d].push_back(idx);
                cell_of[d][f].emplace(static_cast<int>(u), idx);
                cells_[d].emplace_back(static_cast<int>(u), static_cast<int>(f));
                weights_[d].push_back(qw[u]);
            }
        }
    }
    for (int d = 0; d < dim; ++d) {
        Matrix m(cells_[d + 1].size(), cells_[d].size());
        for (std::size_t k = 0; k < cells_[d + 1].size(); ++k) {
            auto [u, f] = cells_[d + 1][k];
            const Face& c = base.faces(d + 1)[f];
            for (std::size_t j = 0; j < c.size(); ++j) {
                Face face = c;
                face.erase(face.begin() + static_cast<long>(j));
                int fi = base.index_of(face);
                int rep = group.min_coset_rep(u, z.type(face));
                m(k, cell_of[d][fi].at(rep)) += j % 2 ? -1 : 1;
            }
        }
        delta_.push_back(std::move(m));
    }
}

Matrix WeightedCochainComplex::boundary_q(int i) const
{
    Matrix b = delta_[i].transpose();
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            if (b(r, c) != 0) b(r, c) = b(r, c) * weights_[i + 1][c] / weights_[i][r];
    return b;
}

Matrix WeightedCochainComplex::theta(int i) const
{
    Matrix t(num_cells(i), num_cells(i));
    for (std::size_t k = 0; k < num_cells(i); ++k) t(k, k) = 1 / weights_[i][k];
    return t;
}

bool WeightedCochainComplex::check_adjointness() const
{
    for (int i = 0; i < top_degree(); ++i) {
        const Matrix& d = delta_[i];
        Matrix bq = boundary_q(i);
        // <delta e_a, e_b>_{i+1} = d(b,a) mu_{i+1}(b);  <e_a, d^q e_b>_i = bq(a,b) mu_i(a)
        for (std::size_t a = 0; a < d.cols(); ++a)
            for (std::size_t b = 0; b < d.rows(); ++b)
                if (d(b, a) * weights_[i + 1][b] != bq(a, b) * weights_[i][a]) return false;
    }
    return true;
}

bool WeightedCochainComplex::check_theta() const
{
    for (int i = 0; i < top_degree(); ++i)
        if (!(theta(i) * boundary(i) == boundary_q(i) * theta(i + 1))) return false;
    return true;
}

Rational WeightedCochainComplex::cocycle_dim(int i) const
{
    const auto& faces_factor = orbit_factor_[i];
    Matrix ker = i < top_degree() ? kernel(delta_[i]) : Matrix::identity(num_cells(i));
    Rational z = 0;
    if (ker.cols() == 0) return z;
    for (std::size_t f = 0; f < faces_factor.size(); ++f) {
        int cell = identity_cell_[i][f];
        Vector e(num_cells(i), Rational(0));
        e[cell] = 1;
        Vector p = weighted_projection(ker, weights_[i], e);
        z += faces_factor[f] * p[cell];  // weight of an identity cell is 1
    }
    return z;
}

std::vector<Rational> WeightedCochainComplex::cochain_dims() const
{
    std::vector<Rational> c;
    for (const auto& fs : orbit_factor_) {
        Rational s = 0;
        for (const auto& x : fs) s += x;
        c.push_back(s);
    }
    return c;
}

std::vector<Rational> WeightedCochainComplex::betti() const
{
    auto c = cochain_dims();
    std::vector<Rational> z;
    for (int i = 0; i <= top_degree(); ++i) z.push_back(cocycle_dim(i));
    std::vector<Rational> b;
    for (int i = 0; i <= top_degree(); ++i) {
        Rational a = i == 0 ? Rational(0) : Rational(c[i - 1] - z[i - 1]);
        b.push_back(z[i] - a);
    }
    return b;
}

BettiReport direct_betti_finite(const MirroredComplex& z, const GrowthData& g, const Multiparam& q)
{
    check_params(g, q);
    FiniteGroup group(g.system());
    WeightedCochainComplex cx(z, group, q);
    BettiReport r;
    r.region = g.classify_region(q);
    r.method = BettiMethod::direct_finite;
    r.degrees = cx.betti();
    auto c = cx.cochain_dims();
    r.euler = 0;
    for (std::size_t i = 0; i < c.size(); ++i) r.euler += i % 2 ? -c[i] : c[i];
    return r;
}

RuinReport ruin_homology_finite(const CoxeterSystem& w, Subset u, Subset t, const Multiparam& q)
{
    if (!is_subset(t, u)) throw InvalidArgument("T = " + w.format(t) + " is not contained in U = " + w.format(u));
    if (!w.is_spherical(u)) throw Unsupported("ruin homology needs W_U finite");
    if (q.size() != w.num_classes()) throw InvalidArgument("wrong number of parameters");
    for (const auto& x : q)
        if (x <= 0) throw InvalidArgument("parameters must be positive");

    // work inside W_U with generators renumbered 0..|U|-1
    CoxeterSystem sub = w.restrict_to(u);
    std::vector<int> gens = members(u);
    Subset tt = 0;
    for (std::size_t k = 0; k < gens.size(); ++k)
        if (contains(t, gens[k])) tt |= singleton(static_cast<int>(k));
    Subset uu = sub.all();
    FiniteGroup group(sub);
    Vector qw = group.weights(q);
    int top = static_cast<int>(gens.size());

    struct Cell {
        Subset type;
        int u;
    };
    std::vector<std::vector<Cell>> cells(top + 1);
    std::vector<std::map<std::pair<Subset, int>, int>> index(top + 1);
    std::vector<Vector> mu(top + 1);
    std::vector<std::vector<std::pair<int, Rational>>> identity_cells(top + 1);  // (cell, 1/W_T'(q^-1))
    for (Subset tp = 0;; ++tp) {
        if (is_subset(tt, tp)) {
            int k = cardinality(tp);
            Rational winv = 0;
            for (int i : group.subgroup(tp)) winv += 1 / qw[i];
            for (std::size_t x = 0; x < group.size(); ++x) {
                if (group.descents(x) & tp) continue;
                int idx = static_cast<int>(cells[k].size());
                if (x == 0) identity_cells[k].emplace_back(idx, 1 / winv);
                index[k].emplace(std::make_pair(tp, static_cast<int>(x)), idx);
                cells[k].push_back({tp, static_cast<int>(x)});
                mu[k].push_back(qw[x]);
            }
        }
        if (tp == uu) break;
    }

    // weighted boundary d_k : C_k -> C_{k-1}
    std::vector<Matrix> d(top + 1);
    for (int k = 1; k <= top; ++k) {
        Matrix m(cells[k - 1].size(), cells[k].size());
        for (std::size_t c = 0; c < cells[k].size(); ++c) {
            auto [tp, x] = cells[k][c];
            auto ms = members(tp);
            for (std::size_t pos = 0; pos < ms.size(); ++pos) {
                Subset face = tp & ~singleton(ms[pos]);
                if (!is_subset(tt, face)) continue;  // lies in the boundary of the ruin
                int sign = pos % 2 ? -1 : 1;
                for (int v : group.subgroup(tp)) {
                    if (group.descents(v) & face) continue;
                    int xv = x;
                    for (int s : group.element(v).word) xv = group.right(xv, s);
                    int eps = group.length(v) % 2 ? -sign : sign;
                    m(index[k - 1].at({face, xv}), c) += Rational(eps) / qw[v];
                }
            }
        }
        d[k] = std::move(m);
    }

    auto cycle_dim = [&](int k) {
        Rational z = 0;
        if (cells[k].empty()) return z;
        Matrix ker = k > 0 && cells[k - 1].size() ? kernel(d[k]) : Matrix::identity(cells[k].size());
        if (ker.cols() == 0) return z;
        for (auto [cell, factor] : identity_cells[k]) {
            Vector e(cells[k].size(), Rational(0));
            e[cell] = 1;
            z += factor * weighted_projection(ker, mu[k], e)[cell];
        }
        return z;
    };
    auto chain_dim = [&](int k) {
        Rational c = 0;
        for (const auto& ic : identity_cells[k]) c += ic.second;
        return c;
    };

    RuinReport r;
    std::vector<Rational> z(top + 2, Rational(0)), c(top + 2, Rational(0));
    for (int k = 0; k <= top; ++k) {
        z[k] = cycle_dim(k);
        c[k] = chain_dim(k);
    }
    for (int k = 0; k <= top; ++k) r.dims.push_back(z[k] - (c[k + 1] - z[k + 1]));
    for (int k = 0; k <= top; ++k) {
        if (r.dims[k] == 0) continue;
        r.concentrated_in = r.concentrated_in == -1 ? k : -2;
    }
    if (r.concentrated_in < -1) r.concentrated_in = -1;

    Rational num = 0, total = 0;
    for (std::size_t x = 0; x < group.size(); ++x) {
        total += qw[x];
        if (group.descents(x) == tt) num += qw[x];
    }
    r.expected = num / total;
    return r;
}

}  // namespace coxl2
