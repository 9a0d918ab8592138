#include "nichrom/corpus.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

#include "nichrom/errors.hpp"

namespace nichrom {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw PreconditionError("Rng::below: zero bound");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

namespace {

struct FamilyName {
    Family family;
    const char* name;
    const char* params;
};

constexpr FamilyName kFamilies[] = {
    {Family::VcExtremal, "vc_extremal", "alpha"},
    {Family::MaxdegExtremal, "maxdeg_extremal", "n,k"},
    {Family::SeqJoinComplete, "seq_join_complete", "a_1,...,a_{d+1}"},
    {Family::Star, "star", "n (order)"},
    {Family::DoubleStar, "double_star", "a,b (leaves per centre)"},
    {Family::Path, "path", "n"},
    {Family::Cycle, "cycle", "n"},
    {Family::Complete, "complete", "n"},
    {Family::RandomTree, "random_tree", "n"},
    {Family::RandomCactus, "random_cactus", "n"},
    {Family::RandomConnected, "random_connected", "n[,extra_edges]"},
};

void need(const FamilySpec& spec, std::size_t count) {
    if (spec.params.size() != count) {
        throw PreconditionError(family_name(spec.family) + ": expected " + std::to_string(count) +
                                " parameter(s), got " + std::to_string(spec.params.size()));
    }
}

}  // namespace

FamilySpec parse_family(const std::string& text) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    FamilySpec spec{};
    bool found = false;
    for (const auto& f : kFamilies) {
        if (name == f.name) {
            spec.family = f.family;
            found = true;
        }
    }
    if (!found) throw PreconditionError("unknown family '" + name + "'");
    if (colon != std::string::npos) {
        std::stringstream ss(text.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                std::size_t used = 0;
                spec.params.push_back(std::stoi(item, &used));
                if (used != item.size()) throw std::invalid_argument(item);
            } catch (const std::exception&) {
                throw PreconditionError("bad family parameter '" + item + "'");
            }
        }
    }
    return spec;
}

std::string family_name(Family f) {
    for (const auto& entry : kFamilies) {
        if (entry.family == f) return entry.name;
    }
    return "?";
}

std::string family_usage() {
    std::string out;
    for (const auto& f : kFamilies) out += std::string("  ") + f.name + ":" + f.params + "\n";
    return out;
}

Graph generate(const FamilySpec& spec, std::uint64_t seed) {
    const auto& p = spec.params;
    switch (spec.family) {
        case Family::VcExtremal: need(spec, 1); return gen_vc_extremal(p[0]);
        case Family::MaxdegExtremal: need(spec, 2); return gen_maxdeg_extremal(p[0], p[1]);
        case Family::SeqJoinComplete: return gen_seq_join_complete(p);
        case Family::Star:
            need(spec, 1);
            if (p[0] < 2) throw PreconditionError("star: order must be >= 2");
            return star_graph(p[0] - 1);
        case Family::DoubleStar: need(spec, 2); return double_star(p[0], p[1]);
        case Family::Path:
            need(spec, 1);
            if (p[0] < 1) throw PreconditionError("path: order must be >= 1");
            return path_graph(p[0]);
        case Family::Cycle: need(spec, 1); return cycle_graph(p[0]);
        case Family::Complete:
            need(spec, 1);
            if (p[0] < 1) throw PreconditionError("complete: order must be >= 1");
            return complete_graph(p[0]);
        case Family::RandomTree: need(spec, 1); return random_tree(p[0], seed);
        case Family::RandomCactus: need(spec, 1); return random_cactus(p[0], seed);
        case Family::RandomConnected:
            if (p.size() == 1) {
                // Extra-edge count drawn from the seed, as in the standard corpus.
                const long long room = static_cast<long long>(p[0]) * (p[0] - 1) / 2 - (p[0] - 1);
                Rng pick(seed);
                return random_connected(p[0], room > 0 ? static_cast<int>(pick.below(room + 1)) : 0, seed);
            }
            need(spec, 2);
            return random_connected(p[0], p[1], seed);
    }
    throw PreconditionError("unknown family");
}

Graph gen_vc_extremal(int alpha) {
    if (alpha < 1) throw PreconditionError("gen_vc_extremal: alpha must be >= 1");
    if (alpha == 1) return star_graph(4);
    // Centres are 0..alpha-1, leaves follow in centre order.
    std::vector<int> leaves(alpha, 2);
    leaves[0] = 3;
    if (alpha == 2) leaves = {3, 3};
    if (alpha == 3) leaves = {3, 2, 3};
    std::vector<Edge> edges;
    for (int w = 0; w + 1 < alpha; ++w) edges.emplace_back(w, w + 1);
    int next = alpha;
    for (int w = 0; w < alpha; ++w) {
        for (int k = 0; k < leaves[w]; ++k) edges.emplace_back(w, next++);
    }
    return Graph::build(next, edges);
}

Graph gen_maxdeg_extremal(int n, int k) {
    if (k < 1 || k > n - 1) throw PreconditionError("gen_maxdeg_extremal: need 1 <= k <= n-1");
    const int cycle_rest = n - k - 1;
    if (cycle_rest < 2) {
        throw PreconditionError("gen_maxdeg_extremal: n-k-1 = " + std::to_string(cycle_rest) +
                                " would make the w-cycle a loop or multi-edge; need n-k-1 >= 2");
    }
    // v = 0, u_j = j, w_j = k + j.
    std::vector<Edge> edges;
    for (int j = 1; j <= k; ++j) edges.emplace_back(0, j);
    edges.emplace_back(k, k + 1);
    for (int j = 1; j < cycle_rest; ++j) edges.emplace_back(k + j, k + j + 1);
    edges.emplace_back(k + cycle_rest, k);
    return Graph::build(n, edges);
}

Graph gen_seq_join_complete(const std::vector<int>& sizes) {
    if (sizes.size() < 2) throw PreconditionError("gen_seq_join_complete: need at least two parts");
    std::vector<Graph> parts;
    for (int a : sizes) {
        if (a < 1) throw PreconditionError("gen_seq_join_complete: part sizes must be >= 1");
        parts.push_back(complete_graph(a));
    }
    return sequential_join(parts);
}

Graph double_star(int a, int b) {
    if (a < 0 || b < 0) throw PreconditionError("double_star: negative leaf count");
    std::vector<Edge> edges{{0, 1}};
    int next = 2;
    for (int k = 0; k < a; ++k) edges.emplace_back(0, next++);
    for (int k = 0; k < b; ++k) edges.emplace_back(1, next++);
    return Graph::build(next, edges);
}

Graph tree_from_pruefer(int n, const std::vector<int>& sequence) {
    if (n < 2 || static_cast<int>(sequence.size()) != n - 2) {
        throw PreconditionError("tree_from_pruefer: sequence length must be n-2 with n >= 2");
    }
    std::vector<int> degree(n, 1);
    for (int x : sequence) {
        if (x < 0 || x >= n) throw PreconditionError("tree_from_pruefer: entry out of range");
        ++degree[x];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v) {
        if (degree[v] == 1) leaves.push(v);
    }
    std::vector<Edge> edges;
    for (int x : sequence) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
        if (--degree[x] == 1) leaves.push(x);
    }
    int a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
    return Graph::build(n, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("random_tree: need n >= 1");
    if (n == 1) return Graph::build(1, {});
    Rng rng(seed);
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = static_cast<int>(rng.below(n));
    return tree_from_pruefer(n, seq);
}

Graph random_cactus(int n, std::uint64_t seed) {
    if (n < 3) throw PreconditionError("random_cactus: need n >= 3");
    Rng rng(seed);
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = static_cast<int>(rng.below(n));
    const Graph tree = tree_from_pruefer(n, seq);

    // Root the tree at 0 to walk paths.
    std::vector<int> parent(n, -1), depth(n, 0);
    std::vector<int> order{0};
    parent[0] = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
        for (Vertex y : tree.neighbors(order[k])) {
            if (parent[y] < 0) {
                parent[y] = order[k];
                depth[y] = depth[order[k]] + 1;
                order.push_back(y);
            }
        }
    }
    parent[0] = -1;
    std::vector<char> on_cycle(n, 0);  // tree edge (v, parent[v]) keyed by v
    auto path_edges = [&](Vertex u, Vertex v) {
        std::vector<Vertex> keys;
        while (u != v) {
            if (depth[u] < depth[v]) std::swap(u, v);
            keys.push_back(u);
            u = parent[u];
        }
        return keys;
    };

    std::vector<Edge> edges = tree.edges();
    auto try_chord = [&](Vertex u, Vertex v) {
        if (u == v || tree.has_edge(u, v)) return false;
        auto keys = path_edges(u, v);
        if (std::any_of(keys.begin(), keys.end(), [&](Vertex k) { return on_cycle[k]; })) return false;
        for (Vertex k : keys) on_cycle[k] = 1;
        edges.emplace_back(std::min(u, v), std::max(u, v));
        return true;
    };

    const int target = rng.between(1, std::max(1, (n - 1) / 2));
    int made = 0;
    for (int attempt = 0; attempt < 20 * target && made < target; ++attempt) {
        Vertex u = static_cast<Vertex>(rng.below(n));
        Vertex v = static_cast<Vertex>(rng.below(n));
        if (try_chord(u, v)) ++made;
    }
    for (Vertex u = 0; u < n && made == 0; ++u) {
        for (Vertex v = u + 1; v < n && made == 0; ++v) {
            if (try_chord(u, v)) ++made;
        }
    }
    return Graph::build(n, edges);
}

Graph random_connected(int n, int extra_edges, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("random_connected: need n >= 1");
    const long long room = static_cast<long long>(n) * (n - 1) / 2 - (n - 1);
    if (extra_edges < 0 || extra_edges > room) {
        throw PreconditionError("random_connected: " + std::to_string(extra_edges) +
                                " extra edges exceed the " + std::to_string(room) + " available");
    }
    const Graph tree = random_tree(n, seed);
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<Edge> candidates;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!tree.has_edge(u, v)) candidates.emplace_back(u, v);
    std::vector<Edge> edges = tree.edges();
    for (int k = 0; k < extra_edges; ++k) {
        auto j = k + static_cast<std::size_t>(rng.below(candidates.size() - k));
        std::swap(candidates[k], candidates[j]);
        edges.push_back(candidates[k]);
    }
    return Graph::build(n, edges);
}

std::vector<CorpusEntry> standard_corpus(int lo, int hi, int per_order, std::uint64_t seed) {
    std::vector<CorpusEntry> out;
    auto add = [&](std::string name, Graph g) { out.push_back({std::move(name), std::move(g)}); };
    for (int n = std::max(lo, 1); n <= hi; ++n) {
        const std::string sn = std::to_string(n);
        add("path:" + sn, path_graph(n));
        if (n >= 2) add("star:" + sn, star_graph(n - 1));
        if (n >= 3) add("cycle:" + sn, cycle_graph(n));
        add("complete:" + sn, complete_graph(n));
        if (n >= 4) add("double_star:" + std::to_string((n - 2) / 2) + "," + std::to_string(n - 2 - (n - 2) / 2),
                        double_star((n - 2) / 2, n - 2 - (n - 2) / 2));
        if (n >= 4) add("maxdeg_extremal:" + sn + "," + std::to_string(n - 3), gen_maxdeg_extremal(n, n - 3));
        const long long room = static_cast<long long>(n) * (n - 1) / 2 - (n - 1);
        for (int k = 0; k < per_order; ++k) {
            const std::uint64_t s = seed * 1000003ULL + static_cast<std::uint64_t>(n) * 1009ULL + k;
            Rng pick(s);
            const int extra = room > 0 ? static_cast<int>(pick.below(room + 1)) : 0;
            add("random_connected:" + sn + "," + std::to_string(extra) + "@" + std::to_string(s),
                random_connected(n, extra, s));
        }
    }
    return out;
}

}  // namespace nichrom
