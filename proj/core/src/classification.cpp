#include <coxl2/classification.hpp>

#include <algorithm>
#include <map>

namespace coxl2 {

std::string FiniteType::name() const
{
    if (family == 'I') return "I2(" + std::to_string(m) + ")";
    return std::string(1, family) + std::to_string(rank);
}

Integer FiniteType::order() const
{
    Integer f = 1;
    auto fact = [](unsigned n) {
        Integer r = 1;
        for (unsigned i = 2; i <= n; ++i) r *= i;
        return r;
    };
    switch (family) {
    case 'A': return fact(rank + 1);
    case 'B': {
        Integer p = 1;
        p <<= rank;
        return p * fact(rank);
    }
    case 'D': {
        Integer p = 1;
        p <<= (rank - 1);
        return p * fact(rank);
    }
    case 'E':
        if (rank == 6) return 51840;
        if (rank == 7) return 2903040;
        return 696729600;
    case 'F': return 1152;
    case 'H': return rank == 3 ? 120 : 14400;
    case 'I': return 2 * m;
    }
    return f;
}

std::vector<Subset> diagram_components(const CoxeterSystem& w, Subset t)
{
    std::vector<Subset> comps;
    Subset left = t;
    while (left) {
        int start = __builtin_ctzll(left);
        Subset comp = singleton(start), frontier = comp;
        while (frontier) {
            int s = __builtin_ctzll(frontier);
            frontier &= frontier - 1;
            for (int u : members(t & ~comp)) {
                if (w.m(s, u) != 2) {
                    comp |= singleton(u);
                    frontier |= singleton(u);
                }
            }
        }
        comps.push_back(comp);
        left &= ~comp;
    }
    return comps;
}

namespace {

std::optional<FiniteType> classify_component(const CoxeterSystem& w, Subset comp)
{
    std::vector<int> v = members(comp);
    unsigned n = static_cast<unsigned>(v.size());
    if (n == 1) return FiniteType{'A', 1};
    std::map<int, std::vector<int>> adj;
    std::vector<std::pair<std::pair<int, int>, unsigned>> edges;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            unsigned m = w.m(v[i], v[j]);
            if (m == 2) continue;
            if (m == kInf) return std::nullopt;
            adj[v[i]].push_back(v[j]);
            adj[v[j]].push_back(v[i]);
            edges.push_back({{v[i], v[j]}, m});
        }
    if (n == 2) return FiniteType{'I', 2, edges[0].second};
    if (edges.size() != n - 1) return std::nullopt;  // connected with a cycle

    std::vector<std::pair<std::pair<int, int>, unsigned>> heavy;
    for (const auto& e : edges)
        if (e.second > 3) heavy.push_back(e);
    int branch = -1, branches = 0;
    for (int s : v) {
        if (adj[s].size() > 3) return std::nullopt;
        if (adj[s].size() == 3) {
            branch = s;
            ++branches;
        }
    }
    auto degree = [&](int s) { return adj[s].size(); };

    if (heavy.empty()) {
        if (branches == 0) return FiniteType{'A', n};
        if (branches > 1) return std::nullopt;
        // arm lengths from the branch vertex
        std::vector<unsigned> arms;
        for (int nb : adj[branch]) {
            unsigned len = 1;
            int prev = branch, cur = nb;
            while (degree(cur) == 2) {
                int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = next;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) return FiniteType{'D', n};
        if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return FiniteType{'E', n};
        return std::nullopt;
    }
    if (heavy.size() > 1 || branches > 0) return std::nullopt;
    // a path with exactly one heavy edge
    unsigned m = heavy[0].second;
    int a = heavy[0].first.first, b = heavy[0].first.second;
    bool at_end = degree(a) == 1 || degree(b) == 1;
    if (m == 4) {
        if (at_end) return FiniteType{'B', n};
        if (n == 4) return FiniteType{'F', 4};
        return std::nullopt;
    }
    if (m == 5 && at_end && (n == 3 || n == 4)) return FiniteType{'H', n};
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<FiniteType>> classify_finite(const CoxeterSystem& w, Subset t)
{
    std::vector<FiniteType> types;
    for (Subset c : diagram_components(w, t)) {
        auto ft = classify_component(w, c);
        if (!ft) return std::nullopt;
        types.push_back(*ft);
    }
    return types;
}

Integer finite_order(const std::vector<FiniteType>& types)
{
    Integer o = 1;
    for (const auto& t : types) o *= t.order();
    return o;
}

}  // namespace coxl2
