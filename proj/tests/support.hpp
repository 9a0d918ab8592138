#pragma once

// Brute-force reference implementations used as test oracles. They share no
// code with the library: plain adjacency matrices, bitmasks, exhaustive loops.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "nichrom/graph.hpp"

namespace ref {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix(const nichrom::Graph& g) {
    const int n = g.order();
    Matrix m(n, std::vector<bool>(n, false));
    for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
    return m;
}

// All-pairs distances by Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> distances(const Matrix& m) {
    const int n = static_cast<int>(m.size());
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int u = 0; u < n; ++u) {
        d[u][u] = 0;
        for (int v = 0; v < n; ++v)
            if (m[u][v]) d[u][v] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) d[u][v] = std::min(d[u][v], d[u][k] + d[k][v]);
    for (auto& row : d)
        for (auto& x : row)
            if (x >= inf) x = -1;
    return d;
}

inline int diameter(const Matrix& m) {
    int best = 0;
    for (const auto& row : distances(m))
        for (int x : row) best = std::max(best, x);
    return best;
}

// Does the vertex subset `mask` induce a connected subgraph?
inline bool connected_subset(const Matrix& m, std::uint32_t mask) {
    if (mask == 0) return false;
    const int n = static_cast<int>(m.size());
    std::uint32_t seen = mask & (~mask + 1);
    for (bool grew = true; grew;) {
        grew = false;
        for (int u = 0; u < n; ++u) {
            if (!(seen >> u & 1)) continue;
            for (int v = 0; v < n; ++v) {
                if ((mask >> v & 1) && !(seen >> v & 1) && m[u][v]) {
                    seen |= 1u << v;
                    grew = true;
                }
            }
        }
    }
    return seen == mask;
}

// Minimum connected vertex cover size by scanning all subsets.
inline int min_cvc(const Matrix& m) {
    const int n = static_cast<int>(m.size());
    int best = n + 1;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        if (size >= best) continue;
        bool covers = true;
        for (int u = 0; u < n && covers; ++u)
            for (int v = u + 1; v < n && covers; ++v)
                if (m[u][v] && !(mask >> u & 1) && !(mask >> v & 1)) covers = false;
        if (covers && connected_subset(m, mask)) best = size;
    }
    return best;
}

// Palette sizes of a colouring, computed with colour bitmasks.
inline bool valid(const Matrix& m, const std::vector<int>& colors, int i) {
    const int n = static_cast<int>(m.size());
    for (int v = 0; v < n; ++v) {
        std::uint64_t seen = 0;
        for (int u = 0; u < n; ++u)
            if (m[v][u]) seen |= 1ull << colors[u];
        if (std::popcount(seen) > i) return false;
    }
    return true;
}

// t_i by enumerating every set partition (restricted-growth strings).
inline int brute_ti(const nichrom::Graph& g, int i) {
    const Matrix m = matrix(g);
    const int n = g.order();
    std::vector<int> a(n, 0);
    int best = 0;
    std::function<void(int, int)> rec = [&](int pos, int used) {
        if (pos == n) {
            if (used > best && valid(m, a, i)) best = used;
            return;
        }
        for (int c = 0; c <= used; ++c) {
            a[pos] = c;
            rec(pos + 1, std::max(used, c + 1));
        }
    };
    rec(0, 0);
    return best;
}

// Every simple cycle as a set of edges (u<v), found by extending paths from
// their smallest vertex.
inline std::vector<std::set<std::pair<int, int>>> simple_cycles(const Matrix& m) {
    const int n = static_cast<int>(m.size());
    std::set<std::set<std::pair<int, int>>> found;
    std::vector<int> path;
    std::vector<bool> on(n, false);
    auto edge = [](int u, int v) { return std::make_pair(std::min(u, v), std::max(u, v)); };
    std::function<void(int, int)> dfs = [&](int start, int u) {
        for (int v = start; v < n; ++v) {
            if (!m[u][v]) continue;
            if (v == start && path.size() >= 3) {
                std::set<std::pair<int, int>> c;
                for (std::size_t k = 0; k + 1 < path.size(); ++k) c.insert(edge(path[k], path[k + 1]));
                c.insert(edge(path.back(), start));
                found.insert(c);
            } else if (!on[v] && v > start) {
                on[v] = true;
                path.push_back(v);
                dfs(start, v);
                path.pop_back();
                on[v] = false;
            }
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        on.assign(n, false);
        on[s] = true;
        dfs(s, s);
    }
    return {found.begin(), found.end()};
}

inline bool brute_is_cactus(const nichrom::Graph& g) {
    const Matrix m = matrix(g);
    if (g.order() == 0) return false;
    for (const auto& row : distances(m))
        for (int x : row)
            if (x < 0) return false;
    std::set<std::pair<int, int>> used;
    for (const auto& c : simple_cycles(m)) {
        for (const auto& e : c)
            if (!used.insert(e).second) return false;
    }
    return true;
}

}  // namespace ref

namespace ref {

// Largest number of non-tree edges a simple graph on n vertices can take.
inline int room(int n) { return n < 2 ? 0 : n * (n - 1) / 2 - (n - 1); }

}  // namespace ref
