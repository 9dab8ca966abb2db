#include <coxl2/builtins.hpp>

#include <coxl2/right_angled.hpp>

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>

namespace coxl2 {

namespace {

std::vector<std::string> default_labels(int n)
{
    if (n <= 3) {
        std::vector<std::string> l{"s", "t", "u"};
        l.resize(n);
        return l;
    }
    std::vector<std::string> l;
    for (int i = 0; i < n; ++i) l.push_back("s" + std::to_string(i + 1));
    return l;
}

std::vector<std::vector<unsigned>> commuting(int n)
{
    std::vector<std::vector<unsigned>> m(n, std::vector<unsigned>(n, 2));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

void set_m(std::vector<std::vector<unsigned>>& m, int a, int b, unsigned v) { m[a][b] = m[b][a] = v; }

int to_int(const std::string& s) { return std::stoi(s); }

}  // namespace

CoxeterSystem finite_type_system(char family, int rank, unsigned m)
{
    family = static_cast<char>(std::tolower(family));
    auto bad = [&]() {
        return InvalidArgument(std::string("no finite type ") + family + std::to_string(rank));
    };
    if (rank < 1) throw bad();
    auto mat = commuting(rank);
    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) set_m(mat, i, i + 1, 3);
    };
    switch (family) {
    case 'a': chain(rank); break;
    case 'b':
        if (rank < 2) throw bad();
        chain(rank);
        set_m(mat, rank - 2, rank - 1, 4);
        break;
    case 'd':
        if (rank < 4) throw bad();
        chain(rank - 1);
        set_m(mat, rank - 3, rank - 1, 3);
        break;
    case 'e':
        if (rank < 6 || rank > 8) throw bad();
        // s1 - s3 - s4 - ... - s_n, with s2 attached to s4
        set_m(mat, 0, 2, 3);
        for (int i = 2; i + 1 < rank; ++i) set_m(mat, i, i + 1, 3);
        set_m(mat, 1, 3, 3);
        break;
    case 'f':
        if (rank != 4) throw bad();
        chain(4);
        set_m(mat, 1, 2, 4);
        break;
    case 'h':
        if (rank != 3 && rank != 4) throw bad();
        chain(rank);
        set_m(mat, 0, 1, 5);
        break;
    case 'i':
        if (rank != 2 || m < 2) throw bad();
        set_m(mat, 0, 1, m);
        break;
    default: throw bad();
    }
    return CoxeterSystem(default_labels(rank), mat, std::vector<int>(rank, 0));
}

CoxeterSystem product_system(const CoxeterSystem& a, const CoxeterSystem& b)
{
    std::size_t n = a.rank() + b.rank();
    std::vector<std::string> labels = a.labels();
    for (const auto& l : b.labels()) labels.push_back(l);
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != n)
        for (std::size_t i = 0; i < n; ++i) labels[i] = "s" + std::to_string(i + 1);
    auto mat = commuting(static_cast<int>(n));
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.rank(); ++j) mat[i][j] = a.m(i, j);
    for (std::size_t i = 0; i < b.rank(); ++i)
        for (std::size_t j = 0; j < b.rank(); ++j) mat[a.rank() + i][a.rank() + j] = b.m(i, j);
    std::vector<int> classes = a.classes();
    for (int c : b.classes()) classes.push_back(c + static_cast<int>(a.num_classes()));
    return CoxeterSystem(labels, mat, classes);
}

CoxeterSystem builtin_system(const std::string& raw)
{
    std::string name = raw;
    std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::tolower(c); });
    std::smatch mt;
    static const std::regex finite_re(R"(([abdefh])(\d+))");
    static const std::regex dihedral_re(R"(i2[-(](\d+)\)?)");
    static const std::regex prod_dihedral_re(R"(product-dihedral-(\d+))");
    static const std::regex points_re(R"(k-points-(\d+))");
    static const std::regex polygon_re(R"(polygon-(\d+))");
    static const std::regex triangle_re(R"(triangle-\(?(\d+)[-,](\d+)[-,](\d+)\)?)");
    static const std::regex existence_re(R"(example-existence-m(\d+))");

    if (name.find('x') != std::string::npos && name.find('-') == std::string::npos) {
        std::size_t pos = name.find('x');
        return product_system(builtin_system(name.substr(0, pos)), builtin_system(name.substr(pos + 1)));
    }
    if (std::regex_match(name, mt, finite_re)) return finite_type_system(mt[1].str()[0], to_int(mt[2]));
    if (std::regex_match(name, mt, dihedral_re)) return finite_type_system('i', 2, to_int(mt[1]));
    if (name == "dihedral-infinite")
        return CoxeterSystem({"s", "t"}, {{1, kInf}, {kInf, 1}}, {0, 1});
    if (std::regex_match(name, mt, prod_dihedral_re)) {
        int n = to_int(mt[1]);
        if (n < 1) throw InvalidArgument("product-dihedral needs n >= 1");
        return racg_from_graph(octahedron_graph(n));
    }
    if (name == "octahedral") return racg_from_graph(octahedron_graph(3));
    if (std::regex_match(name, mt, points_re)) {
        int k = to_int(mt[1]);
        if (k < 1) throw InvalidArgument("k-points needs k >= 1");
        return racg_from_complex(points(k));
    }
    if (name == "pentagon") return racg_from_graph(cycle_graph(5));
    if (std::regex_match(name, mt, polygon_re)) return racg_from_graph(cycle_graph(to_int(mt[1])));
    if (name == "dodecahedral") return racg_from_graph(icosahedron_graph());
    if (std::regex_match(name, mt, triangle_re)) {
        unsigned p = to_int(mt[1]), q = to_int(mt[2]), r = to_int(mt[3]);
        if (p < 2 || q < 2 || r < 2) throw InvalidArgument("triangle group labels must be >= 2");
        return CoxeterSystem({"s", "t", "u"}, {{1, p, r}, {p, 1, q}, {r, q, 1}}, {0, 0, 0});
    }
    if (std::regex_match(name, mt, existence_re))
        return racg_from_complex(existence_complexes(to_int(mt[1])).l);
    throw InvalidArgument("unknown builtin system '" + raw + "'");
}

std::vector<CatalogEntry> builtin_catalog()
{
    return {
        {"a1", "A1, order 2"},
        {"a2", "A2, the symmetric group S3"},
        {"b2", "B2, dihedral of order 8"},
        {"b3", "B3, order 48"},
        {"h3", "H3, order 120"},
        {"a1xa1", "A1 x A1 with one parameter per factor"},
        {"dihedral-infinite", "infinite dihedral group, two parameters"},
        {"product-dihedral-2", "(D_inf)^2, right-angled on the 4-cycle"},
        {"k-points-3", "free product of three involutions"},
        {"pentagon", "right-angled hyperbolic pentagon group"},
        {"dodecahedral", "right-angled dodecahedral reflection group"},
        {"triangle-(3,3,3)", "affine A2"},
        {"octahedral", "(D_inf)^3, right-angled on the octahedron"},
        {"example-existence-m10", "right-angled group of a flag 3-sphere with 30 vertices"},
    };
}

MirroredComplex circle_complex(const CoxeterSystem& w)
{
    if (w.rank() != 2 || w.m(0, 1) != 2) throw InvalidArgument("the circle complex needs A1 x A1");
    SimplicialComplex path({"z0", "z1", "z2"}, {{0, 1}, {1, 2}});
    return MirroredComplex(path, {{true, false, false}, {false, false, true}});
}

}  // namespace coxl2
