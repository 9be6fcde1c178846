#include "dp1/root_system.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dp1 {

namespace {

int family_order(char f) { return f == 'E' ? 0 : f == 'D' ? 1 : 2; }

// Classify a connected tree of simple roots (vertex count n) by its arms.
std::optional<DynkinComponent> classify_component(const std::vector<std::vector<int>>& adj,
                                                  const std::vector<int>& verts) {
    const int n = static_cast<int>(verts.size());
    std::size_t edges = 0;
    std::vector<int> branch;
    for (int v : verts) {
        edges += adj[v].size();
        if (adj[v].size() > 3) return std::nullopt;
        if (adj[v].size() == 3) branch.push_back(v);
    }
    edges /= 2;
    if (edges + 1 != static_cast<std::size_t>(n)) return std::nullopt;  // not a tree
    if (branch.empty()) return DynkinComponent{'A', n};
    if (branch.size() > 1) return std::nullopt;
    // lengths of the three arms leaving the branch vertex
    std::vector<int> arms;
    for (int start : adj[branch[0]]) {
        int prev = branch[0], cur = start, len = 1;
        for (;;) {
            if (adj[cur].size() == 3) return std::nullopt;
            int next = -1;
            for (int w : adj[cur])
                if (w != prev) next = w;
            if (next < 0) break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return DynkinComponent{'D', n};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return DynkinComponent{'E', n};
    return std::nullopt;
}

// Positive roots that are not a sum of two positive roots.
std::vector<PicClass> indecomposable(std::vector<PicClass> pos) {
    std::sort(pos.begin(), pos.end());
    std::set<PicClass> sums;
    for (std::size_t i = 0; i < pos.size(); ++i)
        for (std::size_t j = i + 1; j < pos.size(); ++j) sums.insert(pos[i] + pos[j]);
    std::vector<PicClass> out;
    for (const auto& p : pos)
        if (!sums.count(p)) out.push_back(p);
    return out;
}

}  // namespace

Int DynkinComponent::root_count() const {
    const Int n = rank;
    switch (family) {
        case 'A': return n * (n + 1);
        case 'D': return 2 * n * (n - 1);
        case 'E': return n == 6 ? 72 : n == 7 ? 126 : n == 8 ? 240 : 0;
        default: return 0;
    }
}

std::string RootSystemType::label() const {
    if (!known) return "unknown";
    if (components.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < components.size();) {
        std::size_t j = i;
        while (j < components.size() && components[j] == components[i]) ++j;
        if (!out.empty()) out += '+';
        if (j - i > 1) out += std::to_string(j - i);
        out += components[i].label();
        i = j;
    }
    return out;
}

int RootSystemType::rank() const {
    int r = 0;
    for (const auto& c : components) r += c.rank;
    return r;
}

Int RootSystemType::root_count() const {
    Int r = 0;
    for (const auto& c : components) r += c.root_count();
    return r;
}

bool is_lex_positive(const PicClass& v) {
    for (std::size_t i = 0; i < PicClass::kSize; ++i)
        if (v[i] != 0) return v[i] > 0;
    return false;
}

std::vector<PicClass> simple_roots(const std::vector<PicClass>& roots) {
    std::vector<PicClass> pos;
    for (const auto& r : roots)
        if (is_lex_positive(r)) pos.push_back(r);
    return indecomposable(std::move(pos));
}

std::vector<PicClass> simple_roots(const std::vector<PicClass>& roots, const std::array<Int, PicClass::kSize>& f) {
    std::vector<PicClass> pos;
    for (const auto& r : roots) {
        Int v = 0;
        for (std::size_t i = 0; i < PicClass::kSize; ++i) v += f[i] * r[i];
        if (v == 0) return {};
        if (v > 0) pos.push_back(r);
    }
    return indecomposable(std::move(pos));
}

RootSystemType classify_simple_system(const IntMatrix& gram) {
    const int n = static_cast<int>(gram.size());
    RootSystemType t;
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(gram[i].size()) != n || gram[i][i] != -2) {
            t.known = false;
            return t;
        }
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (gram[i][j] == 1) {
                adj[i].push_back(j);
            } else if (gram[i][j] != 0) {
                t.known = false;
                return t;
            }
        }
    }
    std::vector<int> comp(n, -1);
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> verts{s};
        comp[s] = s;
        for (std::size_t k = 0; k < verts.size(); ++k)
            for (int w : adj[verts[k]])
                if (comp[w] < 0) {
                    comp[w] = s;
                    verts.push_back(w);
                }
        auto c = classify_component(adj, verts);
        if (!c) {
            t.known = false;
            t.components.clear();
            return t;
        }
        t.components.push_back(*c);
    }
    std::sort(t.components.begin(), t.components.end(), [](const DynkinComponent& a, const DynkinComponent& b) {
        if (a.family != b.family) return family_order(a.family) < family_order(b.family);
        return a.rank > b.rank;
    });
    return t;
}

RootSystemType root_system_type_of_roots(const std::vector<PicClass>& roots) {
    const auto simple = simple_roots(roots);
    IntMatrix g(simple.size(), std::vector<Int>(simple.size()));
    for (std::size_t i = 0; i < simple.size(); ++i)
        for (std::size_t j = 0; j < simple.size(); ++j) g[i][j] = intersect(simple[i], simple[j]);
    RootSystemType t = classify_simple_system(g);
    if (t.known && t.root_count() != static_cast<Int>(roots.size())) {
        t.known = false;
        t.components.clear();
    }
    return t;
}

RootSystemType root_system_type(const Sublattice& lattice) {
    if (lattice.rank() == 0) return {};
    return root_system_type_of_roots(enumerate_vectors(lattice, -2));
}

}  // namespace dp1
