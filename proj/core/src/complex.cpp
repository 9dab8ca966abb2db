#include <coxl2/complex.hpp>
#include <coxl2/linalg.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace coxl2 {

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, const std::vector<Face>& facets)
    : labels_(std::move(labels))
{
    std::set<Face> all;
    all.insert(Face{});
    for (Face f : facets) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw InvalidArgument("face with repeated vertex");
        for (int v : f)
            if (v < 0 || static_cast<std::size_t>(v) >= labels_.size()) throw InvalidArgument("face vertex out of range");
        if (all.count(f)) continue;
        std::size_t k = f.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
            Face g;
            for (std::size_t i = 0; i < k; ++i)
                if (mask >> i & 1) g.push_back(f[i]);
            all.insert(std::move(g));
        }
    }
    std::size_t maxd = 0;
    for (const auto& f : all) maxd = std::max(maxd, f.size());
    by_dim_.assign(maxd + 1, {});
    for (const auto& f : all) by_dim_[f.size()].push_back(f);
    index_.resize(by_dim_.size());
    for (std::size_t d = 0; d < by_dim_.size(); ++d)
        for (std::size_t i = 0; i < by_dim_[d].size(); ++i) index_[d].emplace(by_dim_[d][i], static_cast<int>(i));
}

const std::vector<Face>& SimplicialComplex::faces(int d) const
{
    static const std::vector<Face> none;
    if (d + 1 < 0 || static_cast<std::size_t>(d + 1) >= by_dim_.size()) return none;
    return by_dim_[d + 1];
}

std::vector<Face> SimplicialComplex::all_faces() const
{
    std::vector<Face> out;
    for (std::size_t d = 1; d < by_dim_.size(); ++d) out.insert(out.end(), by_dim_[d].begin(), by_dim_[d].end());
    return out;
}

bool SimplicialComplex::has_face(const Face& f) const
{
    return index_of(f) >= 0;
}

int SimplicialComplex::index_of(const Face& f) const
{
    if (f.size() >= index_.size()) return -1;
    auto it = index_[f.size()].find(f);
    return it == index_[f.size()].end() ? -1 : it->second;
}

std::vector<Face> SimplicialComplex::facets() const
{
    std::vector<Face> out;
    for (std::size_t d = by_dim_.size(); d-- > 0;) {
        for (const auto& f : by_dim_[d]) {
            bool maximal = true;
            for (const auto& g : out)
                if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                    maximal = false;
                    break;
                }
            if (maximal) out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long> SimplicialComplex::f_vector() const
{
    std::vector<long> f;
    for (const auto& d : by_dim_) f.push_back(static_cast<long>(d.size()));
    return f;
}

long SimplicialComplex::euler_characteristic() const
{
    long chi = 0;
    for (std::size_t d = 1; d < by_dim_.size(); ++d) chi += (d % 2 == 1 ? 1 : -1) * static_cast<long>(by_dim_[d].size());
    return chi;
}

SimplicialComplex SimplicialComplex::full_subcomplex(const std::vector<bool>& vertices) const
{
    std::vector<Face> kept;
    for (const auto& f : all_faces())
        if (std::all_of(f.begin(), f.end(), [&](int v) { return vertices[v]; })) kept.push_back(f);
    return SimplicialComplex(labels_, kept);
}

std::string SimplicialComplex::to_string() const
{
    std::ostringstream os;
    os << "vertices:";
    for (const auto& l : labels_) os << ' ' << l;
    os << "\nfacets:\n";
    for (const auto& f : facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) os << (i ? " " : "") << labels_[f[i]];
        os << '\n';
    }
    return os.str();
}

Polynomial f_polynomial(const SimplicialComplex& l)
{
    auto f = l.f_vector();
    std::vector<Rational> c;
    for (long x : f) c.push_back(Rational(x));
    return Polynomial::univariate(c);
}

Polynomial h_polynomial(const SimplicialComplex& l, int n)
{
    if (l.dimension() != n - 1)
        throw InvalidArgument("h-polynomial normalization needs dim L = n-1 (dim L = " + std::to_string(l.dimension()) +
                              ", n = " + std::to_string(n) + ")");
    auto f = l.f_vector();
    // sum_i f_{i-1} t^i (1-t)^{n-i}
    Polynomial t = Polynomial::variable(1, 0);
    Polynomial one_minus_t = Polynomial(1, 1) - t;
    Polynomial h(1);
    for (int i = 0; i <= n; ++i) {
        long fi = i < static_cast<int>(f.size()) ? f[i] : 0;
        h += Polynomial(1, Rational(fi)) * t.pow(i) * one_minus_t.pow(n - i);
    }
    return h;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b)
{
    std::vector<std::string> labels = a.labels();
    for (const auto& l : b.labels()) labels.push_back(l);
    int off = static_cast<int>(a.num_vertices());
    std::vector<Face> facets;
    for (const auto& fa : a.facets())
        for (const auto& fb : b.facets()) {
            Face f = fa;
            for (int v : fb) f.push_back(v + off);
            facets.push_back(f);
        }
    return SimplicialComplex(labels, facets);
}

SimplicialComplex cone(const SimplicialComplex& a)
{
    return join(a, points(1));
}

SimplicialComplex suspension(const SimplicialComplex& a)
{
    return join(a, points(2));
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b)
{
    std::vector<std::string> labels = a.labels();
    for (const auto& l : b.labels()) labels.push_back(l);
    int off = static_cast<int>(a.num_vertices());
    std::vector<Face> facets = a.facets();
    for (auto f : b.facets()) {
        for (int& v : f) v += off;
        facets.push_back(f);
    }
    return SimplicialComplex(labels, facets);
}

SimplicialComplex points(int k)
{
    std::vector<std::string> labels;
    std::vector<Face> facets;
    for (int i = 0; i < k; ++i) {
        labels.push_back("p" + std::to_string(i + 1));
        facets.push_back({i});
    }
    return SimplicialComplex(labels, facets);
}

SimplicialComplex polygon(int m)
{
    if (m < 3) throw InvalidArgument("a polygon needs at least 3 vertices");
    std::vector<std::string> labels;
    std::vector<Face> facets;
    for (int i = 0; i < m; ++i) {
        labels.push_back("v" + std::to_string(i + 1));
        facets.push_back({i, (i + 1) % m});
    }
    return SimplicialComplex(labels, facets);
}

SimplicialComplex path_complex(int l)
{
    if (l < 1) throw InvalidArgument("a path needs at least one vertex");
    std::vector<std::string> labels;
    std::vector<Face> facets;
    for (int i = 0; i < l; ++i) labels.push_back("v" + std::to_string(i + 1));
    if (l == 1) facets.push_back({0});
    for (int i = 0; i + 1 < l; ++i) facets.push_back({i, i + 1});
    return SimplicialComplex(labels, facets);
}

SimplicialComplex octahedron(int n)
{
    SimplicialComplex o = empty_complex();
    for (int i = 0; i < n; ++i) o = join(o, points(2));
    return o;
}

SimplicialComplex empty_complex()
{
    return SimplicialComplex({}, {});
}

std::vector<long> relative_betti(const SimplicialComplex& z, const std::function<bool(const Face&)>& in_a)
{
    int dim = z.dimension();
    std::vector<long> betti;
    if (dim < 0) return betti;
    // relative cells and their ranks
    std::vector<std::vector<int>> cell_index(dim + 1);
    std::vector<long> count(dim + 1, 0);
    for (int d = 0; d <= dim; ++d) {
        const auto& fs = z.faces(d);
        cell_index[d].assign(fs.size(), -1);
        for (std::size_t i = 0; i < fs.size(); ++i)
            if (!in_a(fs[i])) cell_index[d][i] = static_cast<int>(count[d]++);
    }
    // rank of delta^d : C^d -> C^{d+1}, rows indexed by (d+1)-cells
    std::vector<long> rk(dim + 1, 0);
    for (int d = 0; d < dim; ++d) {
        std::vector<std::map<std::size_t, Rational>> rows;
        const auto& up = z.faces(d + 1);
        for (std::size_t i = 0; i < up.size(); ++i) {
            if (cell_index[d + 1][i] < 0) continue;
            std::map<std::size_t, Rational> row;
            for (std::size_t j = 0; j < up[i].size(); ++j) {
                Face f = up[i];
                f.erase(f.begin() + static_cast<long>(j));
                int k = cell_index[d][z.index_of(f)];
                if (k >= 0) row.emplace(static_cast<std::size_t>(k), Rational(j % 2 ? -1 : 1));
            }
            rows.push_back(std::move(row));
        }
        rk[d] = static_cast<long>(sparse_rank(std::move(rows)));
    }
    for (int d = 0; d <= dim; ++d) betti.push_back(count[d] - rk[d] - (d > 0 ? rk[d - 1] : 0));
    return betti;
}

MirroredComplex::MirroredComplex(SimplicialComplex base, std::vector<std::vector<bool>> mirror_vertices)
    : base_(std::move(base)), mirrors_(std::move(mirror_vertices))
{
    for (auto& m : mirrors_) {
        if (m.size() != base_.num_vertices()) throw InvalidArgument("mirror vertex mask has the wrong size");
    }
}

Subset MirroredComplex::type(const Face& c) const
{
    Subset t = 0;
    for (std::size_t s = 0; s < mirrors_.size(); ++s)
        if (std::all_of(c.begin(), c.end(), [&](int v) { return mirrors_[s][v]; })) t |= singleton(static_cast<int>(s));
    return t;
}

void MirroredComplex::validate(const CoxeterSystem& w) const
{
    if (mirrors_.size() != w.rank())
        throw InvalidArgument("mirrored complex has " + std::to_string(mirrors_.size()) + " mirrors for " +
                              std::to_string(w.rank()) + " generators");
    for (const auto& v : base_.faces(0)) {
        Subset t = type(v);
        if (!w.is_spherical(t))
            throw InvalidArgument("vertex " + base_.labels()[v[0]] + " lies in the mirrors " + w.format(t) +
                                  ", which do not form a spherical subset");
    }
}

bool MirroredComplex::in_union(const Face& c, Subset u) const
{
    return (type(c) & u) != 0;
}

std::vector<long> MirroredComplex::relative_betti_direct(Subset u) const
{
    return coxl2::relative_betti(base_, [&](const Face& c) { return in_union(c, u); });
}

std::vector<long> MirroredComplex::relative_betti(Subset u) const
{
    if (!nerve_) return relative_betti_direct(u);
    // b^i(K, K^U) = reduced b^{i-1}(L_U), with L_{empty} contributing in degree 0
    std::vector<long> b(static_cast<std::size_t>(base_.dimension() + 1), 0);
    if (u == 0) {
        b[0] = 1;
        return b;
    }
    std::vector<bool> keep(nerve_->num_vertices(), false);
    for (int s : members(u)) keep[s] = true;
    auto lu = coxl2::relative_betti(nerve_->full_subcomplex(keep), [](const Face&) { return false; });
    if (!lu.empty()) lu[0] -= 1;
    for (std::size_t i = 0; i < lu.size(); ++i)
        if (lu[i]) b.at(i + 1) = lu[i];
    return b;
}

std::map<Subset, long> MirroredComplex::type_census() const
{
    std::map<Subset, long> census;
    for (int d = 0; d <= base_.dimension(); ++d)
        for (const auto& c : base_.faces(d)) census[type(c)] += d % 2 ? -1 : 1;
    return census;
}

SimplicialComplex nerve(const CoxeterSystem& w)
{
    std::vector<Face> facets;
    for (Subset t : w.spherical_poset().subsets)
        if (t) facets.push_back(members(t));
    return SimplicialComplex(w.labels(), facets);
}

MirroredComplex chamber(const CoxeterSystem& w)
{
    SphericalPoset p = w.spherical_poset();
    std::vector<std::string> labels;
    for (Subset t : p.subsets) labels.push_back(w.format(t));
    std::size_t n = p.subsets.size();
    std::vector<Face> chains;
    // maximal chains by depth-first extension
    std::function<void(Face&)> extend = [&](Face& chain) {
        bool extended = false;
        Subset top = p.subsets[chain.back()];
        for (std::size_t j = chain.back() + 1; j < n; ++j) {
            Subset u = p.subsets[j];
            if (u != top && is_subset(top, u) && cardinality(u) == cardinality(top) + 1) {
                chain.push_back(static_cast<int>(j));
                extend(chain);
                chain.pop_back();
                extended = true;
            }
        }
        if (!extended) chains.push_back(chain);
    };
    Face start{0};
    extend(start);
    SimplicialComplex k(labels, chains);
    std::vector<std::vector<bool>> mirrors(w.rank(), std::vector<bool>(n, false));
    for (std::size_t s = 0; s < w.rank(); ++s)
        for (std::size_t j = 0; j < n; ++j) mirrors[s][j] = contains(p.subsets[j], static_cast<int>(s));
    MirroredComplex z(k, mirrors);
    z.nerve_ = nerve(w);
    return z;
}

namespace {

std::string trim(const std::string& s)
{
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s)
{
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace

MirroredComplex parse_mirrored_complex(const std::string& text, const CoxeterSystem& w)
{
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> facet_tokens;
    std::vector<std::pair<std::string, std::vector<std::string>>> mirror_tokens;
    bool in_facets = false;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto colon = line.find(':');
        std::string key = colon == std::string::npos ? "" : trim(line.substr(0, colon));
        if (key == "vertices") {
            labels = split_ws(line.substr(colon + 1));
            in_facets = false;
        } else if (key == "facets") {
            in_facets = true;
        } else if (key.rfind("mirror ", 0) == 0) {
            mirror_tokens.emplace_back(trim(key.substr(7)), split_ws(line.substr(colon + 1)));
            in_facets = false;
        } else if (!key.empty()) {
            throw ParseError("unknown key '" + key + "'");
        } else if (in_facets) {
            facet_tokens.push_back(split_ws(line));
        } else {
            throw ParseError("unexpected line '" + line + "'");
        }
    }
    if (labels.empty()) throw ParseError("missing 'vertices:' line");
    auto vindex = [&](const std::string& l) {
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == l) return static_cast<int>(i);
        throw ParseError("unknown vertex '" + l + "'");
    };
    std::vector<Face> facets;
    for (const auto& toks : facet_tokens) {
        Face f;
        for (const auto& t : toks) f.push_back(vindex(t));
        facets.push_back(f);
    }
    for (std::size_t i = 0; i < labels.size(); ++i) facets.push_back({static_cast<int>(i)});
    SimplicialComplex z(labels, facets);
    std::vector<std::vector<bool>> mirrors(w.rank(), std::vector<bool>(labels.size(), false));
    for (const auto& [gen, verts] : mirror_tokens) {
        int s = w.index_of(gen);
        for (const auto& v : verts) mirrors[s][vindex(v)] = true;
    }
    MirroredComplex mc(z, mirrors);
    mc.validate(w);
    return mc;
}

}  // namespace coxl2
