#include "nichrom/treecactus.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "nichrom/errors.hpp"

namespace nichrom {

namespace {

void require_tree(const Graph& t, const char* op, int min_order) {
    if (t.order() < min_order) {
        throw PreconditionError(std::string(op) + ": need n >= " + std::to_string(min_order));
    }
    if (!is_tree(t)) throw PreconditionError(std::string(op) + ": input is not a tree");
}

void require_cactus(const Graph& g, const char* op) {
    if (g.order() < 3) throw PreconditionError(std::string(op) + ": need n >= 3");
    if (!is_cactus(g)) throw PreconditionError(std::string(op) + ": input is not a cactus");
}

// Colours on the neighbours of x that are currently present.
ColorSet live_palette(const Graph& g, const std::vector<char>& alive, const std::vector<Color>& color,
                      Vertex x) {
    ColorSet out;
    for (Vertex y : g.neighbors(x)) {
        if (alive[y]) out.push_back(color[y]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Full N_i check on the subgraph induced by the present vertices.
bool live_valid(const Graph& g, const std::vector<char>& alive, const std::vector<Color>& color, int i) {
    for (Vertex x = 0; x < g.order(); ++x) {
        if (alive[x] && live_palette(g, alive, color, x).size() > static_cast<std::size_t>(i)) return false;
    }
    return true;
}

bool connected_without(const Graph& g, const std::vector<char>& alive, Vertex removed) {
    Vertex start = -1;
    int live = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (alive[v] && v != removed) {
            ++live;
            if (start < 0) start = v;
        }
    }
    if (live == 0) return true;
    std::vector<char> seen(g.order(), 0);
    std::vector<Vertex> stack{start};
    seen[start] = 1;
    int reached = 0;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        ++reached;
        for (Vertex y : g.neighbors(x)) {
            if (alive[y] && y != removed && !seen[y]) {
                seen[y] = 1;
                stack.push_back(y);
            }
        }
    }
    return reached == live;
}

Construction finish(const Graph& g, std::vector<Color> colors, int i, const char* op) {
    Coloring f(std::move(colors));
    if (!verify(g, f, i).valid) throw std::logic_error(std::string(op) + " produced an invalid coloring");
    return {f, static_cast<int>(color_count(f))};
}

}  // namespace

TreeStats tree_stats(const Graph& t) {
    TreeStats s;
    s.n = t.order();
    for (Vertex v = 0; v < t.order(); ++v) ++s.degree_count[t.degree(v)];
    s.leaves = s.count_of_degree(1);
    return s;
}

CactusStats cactus_stats(const Graph& g) {
    CactusStats s;
    s.n = g.order();
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 1) ++s.leaves;
        if (g.degree(v) == 2) ++s.degree_two;
    }
    for (const auto& cycle : cactus_cycles(g)) {
        ++s.cycles;
        if (std::any_of(cycle.begin(), cycle.end(), [&](Vertex v) { return g.degree(v) == 2; })) {
            ++s.cycles_with_degree_two;
        }
    }
    return s;
}

int tree_t2_closed(const Graph& t) {
    require_tree(t, "tree_t2_closed", 2);
    auto s = tree_stats(t);
    return s.n - s.leaves + 2;
}

int tree_t3_closed(const Graph& t) {
    require_tree(t, "tree_t3_closed", 2);
    auto s = tree_stats(t);
    return 2 * s.n - 2 * s.leaves + 2 - s.count_of_degree(2);
}

int tree_ti_closed(const Graph& t, int i) {
    if (i < 3) throw PreconditionError("tree_ti_closed: i < 3, use tree_t2_closed");
    require_tree(t, "tree_ti_closed", 2);
    auto s = tree_stats(t);
    int low_degree = 0;
    for (int k = 2; k <= i - 1; ++k) low_degree += s.count_of_degree(k);
    return 2 * s.n - 2 * s.leaves + 2 - low_degree;
}

int cactus_t3_closed(const Graph& g) {
    require_cactus(g, "cactus_t3_closed");
    auto s = cactus_stats(g);
    return 2 * s.n - 2 * s.leaves - 2 * s.cycles_with_degree_two + 2 - s.degree_two;
}

Construction tree_inductive(const Graph& t, int i, TreePolicy policy) {
    if (i < 2) throw PreconditionError("tree_inductive: need i >= 2");
    require_tree(t, "tree_inductive", 1);
    const int n = t.order();

    std::vector<int> deg(n);
    std::vector<char> alive(n, 1);
    std::priority_queue<Vertex> leaves;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) leaves.push(v);
    }
    std::vector<std::pair<Vertex, Vertex>> peeled;  // (leaf, its parent)
    int remaining = n;
    while (remaining > 2) {
        Vertex u = leaves.top();
        leaves.pop();
        Vertex w = -1;
        for (Vertex x : t.neighbors(u)) {
            if (alive[x]) w = x;
        }
        alive[u] = 0;
        --remaining;
        peeled.emplace_back(u, w);
        if (--deg[w] == 1) leaves.push(w);
    }

    std::vector<Color> color(n, 0);
    Color next = 1;
    for (Vertex v = 0; v < n; ++v) {
        if (alive[v]) color[v] = next++;
    }
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        auto [u, w] = *it;
        ColorSet around = live_palette(t, alive, color, w);
        int attached = 0;
        for (Vertex x : t.neighbors(w)) attached += alive[x];
        const bool fresh = policy == TreePolicy::DegreeRule ? attached <= i - 1
                                                            : static_cast<int>(around.size()) <= i - 1;
        color[u] = fresh ? next++ : around.front();
        alive[u] = 1;
    }
    return finish(t, std::move(color), i, "tree_inductive");
}

Construction cactus_inductive(const Graph& g) {
    require_cactus(g, "cactus_inductive");
    constexpr int i = 3;
    const int n = g.order();

    std::vector<char> alive(n, 1);
    std::vector<Vertex> peeled;
    for (int remaining = n; remaining > 3; --remaining) {
        Vertex pick = -1;
        int pick_deg = n + 1;
        for (Vertex v = n - 1; v >= 0; --v) {
            if (!alive[v]) continue;
            int d = 0;
            for (Vertex x : g.neighbors(v)) d += alive[x];
            if (d < pick_deg && connected_without(g, alive, v)) {
                pick = v;
                pick_deg = d;
            }
        }
        alive[pick] = 0;
        peeled.push_back(pick);
    }

    std::vector<Color> color(n, 0);
    Color next = 1;
    for (Vertex v = 0; v < n; ++v) {
        if (alive[v]) color[v] = next++;
    }
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        const Vertex u = *it;
        alive[u] = 1;
        color[u] = next;
        if (live_valid(g, alive, color, i)) {
            ++next;
            continue;
        }
        ColorSet candidates;
        for (Vertex w : g.neighbors(u)) {
            if (w == u || !alive[w]) continue;
            for (Vertex x : g.neighbors(w)) {
                if (x != u && alive[x]) candidates.push_back(color[x]);
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        bool placed = false;
        for (Color c : candidates) {
            color[u] = c;
            if (live_valid(g, alive, color, i)) {
                placed = true;
                break;
            }
        }
        if (!placed) {
            std::string msg = "cactus_inductive: no valid colour for vertex " + std::to_string(u) +
                              "; partial colours:";
            for (Vertex v = 0; v < n; ++v) msg += " " + std::to_string(alive[v] && v != u ? color[v] : 0);
            throw ConstructionGap(msg);
        }
    }
    return finish(g, std::move(color), i, "cactus_inductive");
}

std::pair<Color, Color> layer_range(int m, int i) {
    if (m < 1 || i < 3) throw PreconditionError("layer_range: need m >= 1 and i >= 3");
    const int c = (i - 1 + 1) / 2;  // ceil((i-1)/2)
    switch (m % 3) {
        case 1: {
            const int k = (m + 2) / 3;
            return {2 + (k - 1) * i, k * i - c};
        }
        case 2: {
            const int k = (m + 1) / 3;
            return {k * i - c + 1, k * i};
        }
        default: {
            const int k = m / 3;
            return {k * i + 1, k * i + 1};
        }
    }
}

Construction layered_coloring(const Graph& g, int i) {
    if (i < 3) throw PreconditionError("layered_coloring: need i >= 3");
    if (g.order() < 1 || !is_connected(g)) throw PreconditionError("layered_coloring: graph must be connected");
    auto layers = bfs_layers(g, peripheral_vertex(g));
    std::vector<Color> color(g.order(), 0);
    color[layers[0].front()] = 1;
    for (int m = 1; m < static_cast<int>(layers.size()); ++m) {
        auto [lo, hi] = layer_range(m, i);
        const int width = hi - lo + 1;
        for (std::size_t j = 0; j < layers[m].size(); ++j) {
            color[layers[m][j]] = lo + static_cast<int>(j % width);
        }
    }
    return finish(g, std::move(color), i, "layered_coloring");
}

}  // namespace nichrom
