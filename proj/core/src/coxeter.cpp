#include <coxl2/classification.hpp>
#include <coxl2/coxeter.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace coxl2 {

int cardinality(Subset s)
{
    return __builtin_popcountll(s);
}

std::vector<int> members(Subset s)
{
    std::vector<int> out;
    while (s) {
        out.push_back(__builtin_ctzll(s));
        s &= s - 1;
    }
    return out;
}

std::size_t ElementHash::operator()(const Word& w) const
{
    std::size_t h = 1469598103934665603ull;
    for (int x : w) {
        h ^= static_cast<std::size_t>(x + 1);
        h *= 1099511628211ull;
    }
    return h;
}

std::size_t ElementHash::operator()(const Element& e) const
{
    return (*this)(e.word);
}

bool SphericalPoset::contains(Subset t) const
{
    return std::binary_search(subsets.begin(), subsets.end(), t, [](Subset a, Subset b) {
        int ca = cardinality(a), cb = cardinality(b);
        return ca != cb ? ca < cb : a < b;
    });
}

std::vector<Subset> SphericalPoset::at_least(Subset t) const
{
    std::vector<Subset> out;
    for (Subset u : subsets)
        if (is_subset(t, u)) out.push_back(u);
    return out;
}

// Cached right products per canonical word.
struct ElementInfo {
    std::vector<std::optional<Word>> right;
};

struct CoxeterSystem::Memo {
    std::shared_mutex mu;
    std::unordered_map<Word, ElementInfo, ElementHash> table;
    std::map<Subset, bool> spherical;
    std::vector<long double> form;  // B(a_s, a_t) = -cos(pi/m_st), row-major
};

CoxeterSystem::CoxeterSystem(std::vector<std::string> labels, std::vector<std::vector<unsigned>> matrix,
                             std::vector<int> classes)
    : labels_(std::move(labels)), matrix_(std::move(matrix)), classes_(std::move(classes)),
      memo_(std::make_shared<Memo>())
{
    std::size_t n = labels_.size();
    if (n == 0) throw InvalidArgument("a Coxeter system needs at least one generator");
    if (n > 64) throw InvalidArgument("at most 64 generators are supported");
    if (matrix_.size() != n) throw InvalidArgument("Coxeter matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix_[i].size() != n) throw InvalidArgument("Coxeter matrix row " + std::to_string(i + 1) + " has wrong length");
        for (std::size_t j = i + 1; j < n; ++j)
            if (labels_[i] == labels_[j]) throw InvalidArgument("duplicate generator label '" + labels_[i] + "'");
    }
    right_angled_ = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (matrix_[i][i] != 1) throw InvalidArgument("m(" + labels_[i] + "," + labels_[i] + ") must be 1");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (matrix_[i][j] != matrix_[j][i])
                throw InvalidArgument("Coxeter matrix is not symmetric at (" + labels_[i] + "," + labels_[j] + ")");
            if (matrix_[i][j] == 1)
                throw InvalidArgument("m(" + labels_[i] + "," + labels_[j] + ") must be at least 2");
            if (matrix_[i][j] != 2 && matrix_[i][j] != kInf) right_angled_ = false;
        }
    }
    if (classes_.empty()) classes_.assign(n, 0);
    if (classes_.size() != n) throw InvalidArgument("class map must assign every generator");
    int maxc = 0;
    for (int c : classes_) {
        if (c < 0) throw InvalidArgument("class indices must be nonnegative");
        maxc = std::max(maxc, c);
    }
    std::vector<bool> used(maxc + 1, false);
    for (int c : classes_) used[c] = true;
    for (int c = 0; c <= maxc; ++c)
        if (!used[c]) throw InvalidArgument("class indices must be contiguous from 0");
    num_classes_ = static_cast<std::size_t>(maxc + 1);
    memo_->form.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            unsigned m = matrix_[i][j];
            memo_->form[i * n + j] = m == kInf ? -1.0L : -std::cos(std::acos(-1.0L) / m);
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            unsigned m = matrix_[i][j];
            if (m != kInf && m % 2 == 1 && classes_[i] != classes_[j])
                throw InvalidArgument("generators " + labels_[i] + " and " + labels_[j] +
                                      " are conjugate (m = " + std::to_string(m) +
                                      " is odd) but lie in different parameter classes");
        }
}

Subset CoxeterSystem::all() const
{
    return rank() == 64 ? ~Subset{0} : (Subset{1} << rank()) - 1;
}

int CoxeterSystem::index_of(const std::string& label) const
{
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    throw InvalidArgument("unknown generator '" + label + "'");
}

Word CoxeterSystem::parse_word(const std::string& text) const
{
    Word w;
    std::string tok;
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == ',' || c == '[' || c == ']') c = ' ';
    std::istringstream is(cleaned);
    while (is >> tok) w.push_back(index_of(tok));
    return w;
}

std::string CoxeterSystem::format(const Element& w) const
{
    std::string out;
    for (std::size_t i = 0; i < w.word.size(); ++i) {
        if (i) out += ' ';
        out += labels_[w.word[i]];
    }
    return out;
}

std::string CoxeterSystem::format(Subset t) const
{
    std::string out = "{";
    bool first = true;
    for (int s : members(t)) {
        if (!first) out += ",";
        out += labels_[s];
        first = false;
    }
    return out + "}";
}

namespace {

// Columns x^{-1}(a_t) of the inverse of the element spelled by `word`, in the
// geometric representation. Roots are either positive or negative, and every
// root has a coefficient of absolute value at least 1, which makes the sign
// test robust in floating point.
using Columns = std::vector<std::vector<long double>>;

void reflect(const std::vector<long double>& form, std::size_t n, int s, std::vector<long double>& v)
{
    long double b = 0;
    for (std::size_t j = 0; j < n; ++j) b += form[s * n + j] * v[j];
    v[s] -= 2 * b;
}

Columns inverse_columns(const std::vector<long double>& form, std::size_t n, const Word& word)
{
    Columns cols(n, std::vector<long double>(n, 0));
    for (std::size_t t = 0; t < n; ++t) cols[t][t] = 1;
    for (int s : word)
        for (auto& c : cols) reflect(form, n, s, c);
    return cols;
}

bool is_negative_root(const std::vector<long double>& v)
{
    long double big = 0;
    for (long double x : v)
        if (std::fabs(x) > std::fabs(big)) big = x;
    if (std::fabs(big) < 0.5L) throw Error("internal", "lost precision in the geometric representation");
    return big < 0;
}

// Shortlex normal form of an arbitrary word: strip the least left descent repeatedly.
Word shortlex_normal_form(const std::vector<long double>& form, std::size_t n, const Word& word)
{
    Columns cols = inverse_columns(form, n, word);
    Word out;
    for (;;) {
        int t = -1;
        for (std::size_t j = 0; j < n && t < 0; ++j)
            if (is_negative_root(cols[j])) t = static_cast<int>(j);
        if (t < 0) break;
        if (out.size() > word.size()) throw Error("internal", "normal form longer than its input");
        out.push_back(t);
        // x -> t x, so x^{-1} -> x^{-1} t and column j becomes c_j - 2 B(t,j) c_t
        std::vector<long double> ct = cols[t];
        for (std::size_t j = 0; j < n; ++j) {
            long double b = form[t * n + j];
            if (b == 0) continue;
            for (std::size_t i = 0; i < n; ++i) cols[j][i] -= 2 * b * ct[i];
        }
    }
    return out;
}

}  // namespace

Element CoxeterSystem::right_multiply_right_angled(const Element& w, int s) const
{
    Word v = w.word;
    bool cancelled = false;
    for (std::size_t j = v.size(); j-- > 0;) {
        if (v[j] == s) {
            v.erase(v.begin() + static_cast<long>(j));
            cancelled = true;
            break;
        }
        if (matrix_[v[j]][s] != 2) break;
    }
    if (!cancelled) v.push_back(s);
    // lexicographically least linear extension of the heap of v
    Word out;
    out.reserve(v.size());
    std::vector<bool> used(v.size(), false);
    for (std::size_t step = 0; step < v.size(); ++step) {
        int best = -1;
        std::size_t best_pos = 0;
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (used[k]) continue;
            bool available = true;
            for (std::size_t j = 0; j < k; ++j)
                if (!used[j] && (v[j] == v[k] || matrix_[v[j]][v[k]] != 2)) {
                    available = false;
                    break;
                }
            if (available && (best < 0 || v[k] < best)) {
                best = v[k];
                best_pos = k;
            }
        }
        used[best_pos] = true;
        out.push_back(best);
    }
    return Element{out};
}

Element CoxeterSystem::right_multiply_generic(const Element& w, int s) const
{
    {
        std::shared_lock lock(memo_->mu);
        auto it = memo_->table.find(w.word);
        if (it != memo_->table.end() && !it->second.right.empty() && it->second.right[s]) return Element{*it->second.right[s]};
    }
    Word ext = w.word;
    ext.push_back(s);
    Word result = shortlex_normal_form(memo_->form, rank(), ext);
    std::unique_lock lock(memo_->mu);
    auto& info = memo_->table[w.word];
    if (info.right.empty()) info.right.resize(rank());
    info.right[s] = result;
    return Element{result};
}

Element CoxeterSystem::right_multiply(const Element& w, int s) const
{
    if (s < 0 || static_cast<std::size_t>(s) >= rank()) throw InvalidArgument("generator index out of range");
    if (right_angled_) return right_multiply_right_angled(w, s);
    return right_multiply_generic(w, s);
}

Element CoxeterSystem::normal_form(const Word& word) const
{
    if (!right_angled_) {
        for (int s : word)
            if (s < 0 || static_cast<std::size_t>(s) >= rank()) throw InvalidArgument("generator index out of range");
        return Element{shortlex_normal_form(memo_->form, rank(), word)};
    }
    Element e;
    for (int s : word) e = right_multiply(e, s);
    return e;
}

Element CoxeterSystem::multiply(const Element& u, const Element& v) const
{
    Element e = u;
    for (int s : v.word) e = right_multiply(e, s);
    return e;
}

Element CoxeterSystem::inverse(const Element& w) const
{
    Word r(w.word.rbegin(), w.word.rend());
    return normal_form(r);
}

Element CoxeterSystem::left_multiply(int s, const Element& w) const
{
    // sw = (w^{-1} s)^{-1}
    return inverse(right_multiply(inverse(w), s));
}

Subset CoxeterSystem::descent_set(const Element& w) const
{
    if (w.word.empty()) return 0;
    if (right_angled_) {
        Subset d = 0;
        for (std::size_t k = 0; k < w.word.size(); ++k) {
            int s = w.word[k];
            bool last = true;
            for (std::size_t j = k + 1; j < w.word.size(); ++j)
                if (w.word[j] == s || matrix_[w.word[j]][s] != 2) {
                    last = false;
                    break;
                }
            if (last) d |= singleton(s);
        }
        return d;
    }
    Word rev(w.word.rbegin(), w.word.rend());
    Columns cols = inverse_columns(memo_->form, rank(), rev);
    Subset d = 0;
    for (std::size_t s = 0; s < rank(); ++s)
        if (is_negative_root(cols[s])) d |= singleton(static_cast<int>(s));
    return d;
}

Subset CoxeterSystem::left_descent_set(const Element& w) const
{
    return descent_set(inverse(w));
}

Exponents CoxeterSystem::class_exponents(const Element& w) const
{
    Exponents e(num_classes_, 0);
    for (int s : w.word) ++e[classes_[s]];
    return e;
}

Rational CoxeterSystem::weight(const Element& w, const std::vector<Rational>& q) const
{
    if (q.size() != num_classes_)
        throw InvalidArgument("expected " + std::to_string(num_classes_) + " parameter values, got " +
                              std::to_string(q.size()));
    Rational r = 1;
    for (int s : w.word) r *= q[classes_[s]];
    return r;
}

std::vector<Element> CoxeterSystem::enumerate_subgroup(Subset t, unsigned n, const Budget& budget) const
{
    auto start = std::chrono::steady_clock::now();
    std::vector<Element> all{identity()};
    std::vector<Element> level{identity()};
    std::vector<int> gens = members(t & this->all());
    for (unsigned len = 1; len <= n; ++len) {
        std::unordered_set<Word, ElementHash> seen;
        std::vector<Element> next;
        for (const auto& w : level) {
            Subset d = descent_set(w);
            for (int s : gens) {
                if (contains(d, s)) continue;
                Element ws = right_multiply(w, s);
                if (seen.insert(ws.word).second) next.push_back(std::move(ws));
            }
            if (all.size() + next.size() > budget.max_elements ||
                (budget.max_seconds > 0 &&
                 std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > budget.max_seconds)) {
                std::sort(all.begin(), all.end());
                throw BudgetExceeded(all, static_cast<int>(len) - 1);
            }
        }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        all.insert(all.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return all;
}

std::vector<Element> CoxeterSystem::enumerate_ball(unsigned n, const Budget& budget) const
{
    return enumerate_subgroup(all(), n, budget);
}

std::vector<Element> CoxeterSystem::enumerate_finite_subgroup(Subset t) const
{
    if (!is_spherical(t)) throw InvalidArgument("W_T is infinite for T = " + format(t));
    return enumerate_subgroup(t, ~0u);
}

Element CoxeterSystem::longest_element(Subset t) const
{
    auto elems = enumerate_finite_subgroup(t);
    return elems.back();
}

bool CoxeterSystem::is_spherical(Subset t) const
{
    {
        std::shared_lock lock(memo_->mu);
        auto it = memo_->spherical.find(t);
        if (it != memo_->spherical.end()) return it->second;
    }
    bool r = classify_finite(*this, t).has_value();
    std::unique_lock lock(memo_->mu);
    memo_->spherical[t] = r;
    return r;
}

SphericalPoset CoxeterSystem::spherical_poset() const
{
    SphericalPoset p;
    std::vector<Subset> current{0};
    while (!current.empty()) {
        p.strata.push_back(current);
        p.subsets.insert(p.subsets.end(), current.begin(), current.end());
        std::vector<Subset> next;
        for (Subset t : current)
        {
            int top = t ? 63 - __builtin_clzll(t) : -1;
            for (int s = top + 1; s < static_cast<int>(rank()); ++s) {
                Subset u = t | singleton(s);
                if (is_spherical(u)) next.push_back(u);
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        current = std::move(next);
    }
    return p;
}

CoxeterSystem CoxeterSystem::restrict_to(Subset t) const
{
    std::vector<int> gens = members(t & all());
    if (gens.empty()) throw InvalidArgument("cannot restrict to the empty subset");
    std::vector<std::string> labels;
    std::vector<std::vector<unsigned>> m;
    std::vector<int> cls;
    for (int s : gens) {
        labels.push_back(labels_[s]);
        cls.push_back(classes_[s]);
        std::vector<unsigned> row;
        for (int u : gens) row.push_back(matrix_[s][u]);
        m.push_back(row);
    }
    // keep class indices aligned with the parent; contiguity is not required here
    CoxeterSystem sub(labels, m, std::vector<int>(gens.size(), 0));
    sub.classes_ = cls;
    sub.num_classes_ = num_classes_;
    return sub;
}

CoxeterSystem CoxeterSystem::with_single_class() const
{
    return CoxeterSystem(labels_, matrix_, std::vector<int>(rank(), 0));
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

unsigned parse_entry(const std::string& tok)
{
    if (tok == "inf" || tok == "oo" || tok == "infinity") return kInf;
    try {
        std::size_t used = 0;
        long v = std::stol(tok, &used);
        if (used != tok.size() || v < 1) throw ParseError("bad Coxeter matrix entry '" + tok + "'");
        return static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
        throw ParseError("bad Coxeter matrix entry '" + tok + "'");
    }
}

}  // namespace

CoxeterSystem parse_system(const std::string& text)
{
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> labels;
    std::vector<std::vector<unsigned>> matrix;
    std::vector<std::string> class_labels;
    std::vector<std::tuple<std::string, std::string, unsigned>> entries;
    bool in_matrix = false;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto colon = line.find(':');
        std::string key = colon == std::string::npos ? "" : trim(line.substr(0, colon));
        if (key == "generators") {
            labels = split_ws(line.substr(colon + 1));
            in_matrix = false;
        } else if (key == "matrix") {
            in_matrix = true;
            auto rest = split_ws(line.substr(colon + 1));
            if (!rest.empty()) throw ParseError("matrix rows go on the lines after 'matrix:'");
        } else if (key == "classes") {
            class_labels = split_ws(line.substr(colon + 1));
            in_matrix = false;
        } else if (!key.empty()) {
            throw ParseError("unknown key '" + key + "'");
        } else if (line.rfind("m ", 0) == 0) {
            auto toks = split_ws(line);
            if (toks.size() != 4) throw ParseError("expected 'm <s> <t> <value>', got '" + line + "'");
            entries.emplace_back(toks[1], toks[2], parse_entry(toks[3]));
            in_matrix = false;
        } else if (in_matrix) {
            std::vector<unsigned> row;
            for (const auto& tok : split_ws(line)) row.push_back(parse_entry(tok));
            matrix.push_back(row);
        } else {
            throw ParseError("unexpected line '" + line + "'");
        }
    }
    if (labels.empty()) throw ParseError("missing 'generators:' line");
    std::size_t n = labels.size();
    if (matrix.empty()) {
        matrix.assign(n, std::vector<unsigned>(n, 2));
        for (std::size_t i = 0; i < n; ++i) matrix[i][i] = 1;
    } else if (matrix.size() != n) {
        throw ParseError("matrix has " + std::to_string(matrix.size()) + " rows for " + std::to_string(n) + " generators");
    }
    auto find = [&](const std::string& l) {
        for (std::size_t i = 0; i < n; ++i)
            if (labels[i] == l) return i;
        throw ParseError("unknown generator '" + l + "'");
    };
    for (const auto& [a, b, v] : entries) {
        std::size_t i = find(a), j = find(b);
        matrix[i][j] = matrix[j][i] = v;
    }
    std::vector<int> classes;
    if (!class_labels.empty()) {
        if (class_labels.size() != n) throw ParseError("'classes:' needs one label per generator");
        std::vector<std::string> seen;
        for (const auto& c : class_labels) {
            auto it = std::find(seen.begin(), seen.end(), c);
            if (it == seen.end()) {
                seen.push_back(c);
                classes.push_back(static_cast<int>(seen.size() - 1));
            } else {
                classes.push_back(static_cast<int>(it - seen.begin()));
            }
        }
    }
    return CoxeterSystem(labels, matrix, classes);
}

std::string serialize_system(const CoxeterSystem& w)
{
    std::ostringstream os;
    os << "generators:";
    for (const auto& l : w.labels()) os << ' ' << l;
    os << "\nmatrix:\n";
    for (std::size_t i = 0; i < w.rank(); ++i) {
        for (std::size_t j = 0; j < w.rank(); ++j) {
            if (j) os << ' ';
            unsigned m = w.m(static_cast<int>(i), static_cast<int>(j));
            if (m == kInf)
                os << "inf";
            else
                os << m;
        }
        os << '\n';
    }
    os << "classes:";
    for (int c : w.classes()) os << ' ' << c + 1;
    os << '\n';
    return os.str();
}

}  // namespace coxl2
