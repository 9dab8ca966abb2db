#include <coxl2/right_angled.hpp>

#include <coxl2/growth.hpp>

#include <algorithm>
#include <set>

namespace coxl2 {

Graph::Graph(std::vector<std::string> labels)
    : labels_(std::move(labels)), adj_(labels_.size(), std::vector<bool>(labels_.size(), false))
{
}

Graph::Graph(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges) : Graph(std::move(labels))
{
    for (auto [a, b] : edges) add_edge(a, b);
}

void Graph::add_edge(int a, int b)
{
    int n = static_cast<int>(size());
    if (a < 0 || b < 0 || a >= n || b >= n) throw InvalidArgument("edge endpoint out of range");
    if (a == b) throw InvalidArgument("loops are not allowed in a simple graph");
    adj_[a][b] = adj_[b][a] = true;
}

std::size_t Graph::num_edges() const
{
    std::size_t e = 0;
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = a + 1; b < size(); ++b) e += adj_[a][b];
    return e;
}

std::vector<Face> Graph::cliques() const
{
    std::vector<Face> out{Face{}};
    // extend each clique only by vertices above its last one
    for (std::size_t i = 0; i < out.size(); ++i) {
        int start = out[i].empty() ? 0 : out[i].back() + 1;
        for (int v = start; v < static_cast<int>(size()); ++v) {
            bool ok = std::all_of(out[i].begin(), out[i].end(), [&](int u) { return adj_[u][v]; });
            if (!ok) continue;
            Face f = out[i];
            f.push_back(v);
            out.push_back(std::move(f));
        }
    }
    return out;
}

Graph one_skeleton(const SimplicialComplex& l)
{
    Graph g(l.labels());
    if (l.dimension() >= 1)
        for (const auto& e : l.faces(1)) g.add_edge(e[0], e[1]);
    return g;
}

SimplicialComplex flag_complex(const Graph& g)
{
    std::vector<Face> faces;
    for (auto& c : g.cliques())
        if (!c.empty()) faces.push_back(std::move(c));
    return SimplicialComplex(g.labels(), faces);
}

bool is_flag(const SimplicialComplex& l)
{
    for (const auto& c : one_skeleton(l).cliques())
        if (!l.has_face(c)) return false;
    return true;
}

Graph cycle_graph(int m)
{
    if (m < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i) labels.push_back("v" + std::to_string(i + 1));
    Graph g(labels);
    for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
    return g;
}

Graph icosahedron_graph()
{
    // apex 0, upper ring 1..5, lower ring 6..10, apex 11
    std::vector<std::string> labels;
    for (int i = 0; i < 12; ++i) labels.push_back("v" + std::to_string(i + 1));
    Graph g(labels);
    for (int i = 0; i < 5; ++i) {
        int u = 1 + i, u2 = 1 + (i + 1) % 5;
        int d = 6 + i, d2 = 6 + (i + 1) % 5;
        g.add_edge(0, u);
        g.add_edge(u, u2);
        g.add_edge(u, d);
        g.add_edge(u2, d);
        g.add_edge(d, d2);
        g.add_edge(11, d);
    }
    return g;
}

Graph octahedron_graph(int n)
{
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        labels.push_back("a" + std::to_string(i + 1));
        labels.push_back("b" + std::to_string(i + 1));
    }
    Graph g(labels);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = i + 1; j < 2 * n; ++j)
            if (j / 2 != i / 2) g.add_edge(i, j);
    return g;
}

CoxeterSystem racg_from_graph(const Graph& g)
{
    std::size_t n = g.size();
    std::vector<std::string> labels = g.labels();
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != n)
        for (std::size_t i = 0; i < n; ++i) labels[i] = "s" + std::to_string(i + 1);
    std::vector<std::vector<unsigned>> m(n, std::vector<unsigned>(n, kInf));
    for (std::size_t a = 0; a < n; ++a) {
        m[a][a] = 1;
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && g.adjacent(static_cast<int>(a), static_cast<int>(b))) m[a][b] = 2;
    }
    return CoxeterSystem(labels, m, std::vector<int>(n, 0));
}

CoxeterSystem racg_from_complex(const SimplicialComplex& l)
{
    if (!is_flag(l)) throw InvalidArgument("the complex is not flag, so it is not the nerve of a right-angled system");
    return racg_from_graph(one_skeleton(l));
}

namespace {

Polynomial q_poly() { return Polynomial::variable(1, 0); }
Polynomial one_plus_q() { return Polynomial(1, 1) + q_poly(); }

// sum_k f_{k-1} (-q)^k (1+q)^{d-k} over (1+q)^d
RationalFunction chi_from_f(const std::vector<long>& f)
{
    int d = static_cast<int>(f.size()) - 1;
    Polynomial num(1);
    for (int k = 0; k <= d; ++k)
        num += Rational(f[k] * (k % 2 ? -1 : 1)) * q_poly().pow(k) * one_plus_q().pow(d - k);
    return RationalFunction(num, one_plus_q().pow(d));
}

}  // namespace

RationalFunction chi_q(const SimplicialComplex& l)
{
    if (!is_flag(l)) throw InvalidArgument("chi_q needs a flag complex");
    return chi_from_f(l.f_vector());
}

HpolyCheck verify_hpoly_identity(const SimplicialComplex& l, int n)
{
    HpolyCheck r;
    CoxeterSystem w = racg_from_complex(l);
    r.inverse_growth = GrowthData(w).inverse_series();
    Polynomial h = h_polynomial(l, n);
    r.h = h.dense_univariate();
    Polynomial h_neg = h.compose({-q_poly()});
    r.from_h = RationalFunction(h_neg, one_plus_q().pow(n));
    r.equal = r.inverse_growth == r.from_h;
    return r;
}

namespace {

// Link of a valence-4 vertex as a cycle a0 a1 a2 a3.
std::vector<int> square_link(const SimplicialComplex& l, int s)
{
    std::vector<int> link;
    for (const auto& e : l.faces(1))
        if (e[0] == s || e[1] == s) link.push_back(e[0] == s ? e[1] : e[0]);
    if (link.size() != 4) throw InvalidArgument("vertex " + l.labels()[s] + " does not have valence 4");
    auto edge = [&](int a, int b) { return l.has_face(a < b ? Face{a, b} : Face{b, a}); };
    std::vector<int> cycle{link[0]};
    std::vector<bool> used(4, false);
    used[0] = true;
    for (int step = 1; step < 4; ++step) {
        int next = -1;
        for (int i = 0; i < 4 && next < 0; ++i)
            if (!used[i] && edge(cycle.back(), link[i])) next = i;
        if (next < 0) throw InvalidArgument("link of " + l.labels()[s] + " is not a 4-cycle");
        used[next] = true;
        cycle.push_back(link[next]);
    }
    if (!edge(cycle.back(), cycle.front()) || edge(cycle[0], cycle[2]) || edge(cycle[1], cycle[3]))
        throw InvalidArgument("link of " + l.labels()[s] + " is not an empty 4-cycle");
    return cycle;
}

}  // namespace

SimplicialComplex square_sum(const SimplicialComplex& l1, int s1, const SimplicialComplex& l2, int s2)
{
    if (l1.dimension() != 2 || l2.dimension() != 2) throw InvalidArgument("square_sum expects 2-spheres");
    std::vector<int> c1 = square_link(l1, s1), c2 = square_link(l2, s2);
    std::vector<std::string> labels;
    std::vector<int> map1(l1.num_vertices(), -1), map2(l2.num_vertices(), -1);
    for (std::size_t v = 0; v < l1.num_vertices(); ++v)
        if (static_cast<int>(v) != s1) {
            map1[v] = static_cast<int>(labels.size());
            labels.push_back(l1.labels()[v]);
        }
    for (int i = 0; i < 4; ++i) map2[c2[i]] = map1[c1[i]];
    for (std::size_t v = 0; v < l2.num_vertices(); ++v)
        if (static_cast<int>(v) != s2 && map2[v] < 0) {
            map2[v] = static_cast<int>(labels.size());
            labels.push_back(l2.labels()[v] + "'");
        }
    std::vector<Face> facets;
    auto take = [&](const SimplicialComplex& l, int s, const std::vector<int>& map) {
        for (const auto& f : l.facets()) {
            if (std::find(f.begin(), f.end(), s) != f.end()) continue;
            Face g;
            for (int v : f) g.push_back(map[v]);
            std::sort(g.begin(), g.end());
            facets.push_back(g);
        }
    };
    take(l1, s1, map1);
    take(l2, s2, map2);
    return SimplicialComplex(labels, facets);
}

SimplicialComplex staircase_annulus(int k, int m)
{
    if (k < 3 || m < 3) throw InvalidArgument("annulus boundary polygons need at least 3 vertices");
    // inner x_0..x_{k-1}, outer y_0..y_{m-1}; x_i sees y_j for b_i <= j <= b_{i+1}
    std::vector<std::string> labels;
    for (int i = 0; i < k; ++i) labels.push_back("x" + std::to_string(i));
    for (int j = 0; j < m; ++j) labels.push_back("y" + std::to_string(j));
    auto y = [&](int j) { return k + (j % m); };
    auto b = [&](int i) { return i * m / k; };
    std::vector<Face> tris;
    for (int i = 0; i < k; ++i) {
        for (int j = b(i); j < b(i + 1); ++j) tris.push_back({i, y(j), y(j + 1)});
        tris.push_back({i, (i + 1) % k, y(b(i + 1))});
    }
    for (auto& t : tris) std::sort(t.begin(), t.end());
    return SimplicialComplex(labels, tris);
}

ExistenceComplexes existence_complexes(int m)
{
    if (m < 5) throw InvalidArgument("the construction needs m >= 5");
    const int k = 4;
    // vertex numbering of A: x0..x3, y0..y_{m-1}, n, s, z1, z2
    SimplicialComplex ann = staircase_annulus(k, m);
    int nv = k + m;
    int north = nv, south = nv + 1, z1 = nv + 2, z2 = nv + 3;
    std::vector<std::string> labels = ann.labels();
    for (const char* l : {"n", "s", "z1", "z2"}) labels.push_back(l);
    std::vector<Face> facets;
    for (const auto& t : ann.faces(2)) {
        for (int apex : {north, south}) {
            Face f = t;
            f.push_back(apex);
            facets.push_back(f);
        }
    }
    // I_4 * P_m with I_4 = n - z1 - z2 - s
    std::vector<std::pair<int, int>> path{{north, z1}, {z1, z2}, {z2, south}};
    for (int j = 0; j < m; ++j)
        for (auto [a, c] : path) {
            Face f{k + j, k + (j + 1) % m, a, c};
            std::sort(f.begin(), f.end());
            facets.push_back(f);
        }
    for (auto& f : facets) std::sort(f.begin(), f.end());
    ExistenceComplexes out{SimplicialComplex(labels, facets), {}, {}, {}};

    // M = S P_4 on n, s, x0..x3
    std::vector<int> m_verts{0, 1, 2, 3, north, south};
    std::vector<bool> in_m(labels.size(), false);
    for (int v : m_verts) in_m[v] = true;
    std::vector<Face> m_tris;
    for (const auto& t : out.a.faces(2))
        if (std::all_of(t.begin(), t.end(), [&](int v) { return in_m[v]; })) m_tris.push_back(t);

    // A-hat: cone on M
    {
        std::vector<std::string> lab = labels;
        lab.push_back("c");
        int apex = static_cast<int>(labels.size());
        std::vector<Face> fs = facets;
        for (auto t : m_tris) {
            t.push_back(apex);
            fs.push_back(t);
        }
        out.a_hat = SimplicialComplex(lab, fs);
    }
    // L: second copy of A with the vertices outside M renamed
    {
        std::vector<std::string> lab = labels;
        std::vector<int> copy(labels.size());
        for (std::size_t v = 0; v < labels.size(); ++v) {
            if (in_m[v]) {
                copy[v] = static_cast<int>(v);
            } else {
                copy[v] = static_cast<int>(lab.size());
                lab.push_back(labels[v] + "'");
            }
        }
        std::vector<Face> fs = facets;
        for (const auto& f : facets) {
            Face g;
            for (int v : f) g.push_back(copy[v]);
            std::sort(g.begin(), g.end());
            fs.push_back(g);
        }
        out.l = SimplicialComplex(lab, fs);
        out.m_vertices.assign(lab.size(), false);
        for (int v : m_verts) out.m_vertices[v] = true;
    }
    return out;
}

ExistenceReport example_existence(int m)
{
    if (m < 5) throw InvalidArgument("example_existence needs m >= 5, got " + std::to_string(m));
    ExistenceReport r;
    r.m = m;
    const int k = r.k;
    SimplicialComplex ann = staircase_annulus(k, m);
    r.f_annulus = ann.f_vector();
    r.chi_annulus = chi_q(ann);
    RationalFunction s0 = chi_q(points(2));
    RationalFunction pm = chi_q(polygon(m));
    RationalFunction i4 = chi_q(path_complex(4));
    RationalFunction oct = chi_q(octahedron(3));
    r.chi_suspended_annulus = s0 * r.chi_annulus;
    r.chi_filling = i4 * pm;
    r.chi_suspended_polygon = s0 * pm;
    r.chi_a = r.chi_suspended_annulus + r.chi_filling - r.chi_suspended_polygon;
    Polynomial q = Polynomial::variable(1, 0);
    RationalFunction cone_factor(q, Polynomial(1, 1) + q);
    r.chi_a_hat = r.chi_a - cone_factor * oct;
    r.chi_l = RationalFunction(1, 2) * r.chi_a - oct;

    ExistenceComplexes cx = existence_complexes(m);
    r.flag_l = is_flag(cx.l);
    r.flag_a_hat = is_flag(cx.a_hat);
    r.chi_a_built = chi_from_f(cx.a.f_vector());
    r.chi_a_hat_built = chi_from_f(cx.a_hat.f_vector());
    r.chi_l_built = chi_from_f(cx.l.f_vector());
    r.roots_a_hat = isolate_positive_roots(r.chi_a_hat.numerator());
    r.roots_l = isolate_positive_roots(r.chi_l.numerator());
    return r;
}

}  // namespace coxl2
