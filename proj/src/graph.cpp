#include "nichrom/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "nichrom/errors.hpp"

namespace nichrom {

namespace {

std::string edge_text(const Edge& e) {
    std::ostringstream os;
    os << "(" << e.first << "," << e.second << ")";
    return os.str();
}

void require_nonempty(const Graph& g, const char* op) {
    if (g.order() == 0) throw PreconditionError(std::string(op) + ": empty graph");
}

std::vector<int> bfs_distances(const Graph& g, Vertex src) {
    std::vector<int> dist(g.order(), -1);
    std::queue<Vertex> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop();
        for (Vertex y : g.neighbors(x)) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push(y);
            }
        }
    }
    return dist;
}

void require_connected(const Graph& g, const char* op) {
    require_nonempty(g, op);
    auto dist = bfs_distances(g, 0);
    std::ostringstream unreached;
    bool any = false;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (dist[v] < 0) {
            unreached << (any ? "," : "") << v;
            any = true;
        }
    }
    if (any) {
        throw PreconditionError(std::string(op) +
                                ": graph is disconnected; unreached from 0: " + unreached.str());
    }
}

// DFS tree plus back edges. For a cactus every tree edge lies on at most one
// fundamental cycle; `cycles` receives those cycles. Returns false as soon as
// a tree edge is claimed twice.
bool dfs_cycle_scan(const Graph& g, std::vector<std::vector<Vertex>>* cycles) {
    const int n = g.order();
    std::vector<int> parent(n, -1), depth(n, -1);
    std::vector<char> edge_used(n, 0);  // tree edge (v, parent[v]) keyed by v
    std::vector<std::size_t> next(n, 0);
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < n; ++root) {
        if (depth[root] >= 0) continue;
        depth[root] = 0;
        stack.push_back(root);
        while (!stack.empty()) {
            Vertex v = stack.back();
            auto nbrs = g.neighbors(v);
            if (next[v] == nbrs.size()) {
                stack.pop_back();
                continue;
            }
            Vertex w = nbrs[next[v]++];
            if (depth[w] < 0) {
                parent[w] = v;
                depth[w] = depth[v] + 1;
                stack.push_back(w);
            } else if (w != parent[v] && depth[w] < depth[v]) {
                std::vector<Vertex> cycle{v};
                for (Vertex x = v; x != w; x = parent[x]) {
                    if (edge_used[x]) return false;
                    edge_used[x] = 1;
                    cycle.push_back(parent[x]);
                }
                if (cycles) cycles->push_back(std::move(cycle));
            }
        }
    }
    return true;
}

}  // namespace

Graph Graph::build(int n, std::span<const Edge> edges) {
    if (n < 0) throw GraphError("negative vertex count");
    Graph g;
    g.adjacency_.assign(n, {});
    for (const Edge& e : edges) {
        auto [u, v] = e;
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw GraphError("edge " + edge_text(e) + " has an id outside [0, " +
                             std::to_string(n) + ")");
        }
        if (u == v) throw GraphError("loop edge " + edge_text(e));
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& adj = g.adjacency_[v];
        std::sort(adj.begin(), adj.end());
        auto dup = std::adjacent_find(adj.begin(), adj.end());
        if (dup != adj.end()) {
            throw GraphError("duplicate edge " + edge_text({std::min(v, *dup), std::max(v, *dup)}));
        }
    }
    g.edge_count_ = edges.size();
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

int max_degree(const Graph& g) {
    require_nonempty(g, "max_degree");
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
    return best;
}

std::vector<VertexSet> bfs_layers(const Graph& g, Vertex v) {
    require_nonempty(g, "bfs_layers");
    if (!g.valid_vertex(v)) throw PreconditionError("bfs_layers: invalid vertex " + std::to_string(v));
    auto dist = bfs_distances(g, v);
    std::vector<VertexSet> layers;
    std::ostringstream unreached;
    bool any = false;
    for (Vertex u = 0; u < g.order(); ++u) {
        if (dist[u] < 0) {
            unreached << (any ? "," : "") << u;
            any = true;
            continue;
        }
        if (static_cast<int>(layers.size()) <= dist[u]) layers.resize(dist[u] + 1);
        layers[dist[u]].push_back(u);
    }
    if (any) throw PreconditionError("bfs_layers: graph is disconnected; unreached: " + unreached.str());
    return layers;
}

int eccentricity(const Graph& g, Vertex v) {
    return static_cast<int>(bfs_layers(g, v).size()) - 1;
}

int diameter(const Graph& g) {
    require_connected(g, "diameter");
    int d = 0;
    for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, eccentricity(g, v));
    return d;
}

Vertex peripheral_vertex(const Graph& g) {
    const int d = diameter(g);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (eccentricity(g, v) == d) return v;
    }
    return 0;  // unreachable
}

bool is_connected(const Graph& g) {
    require_nonempty(g, "is_connected");
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<VertexSet> components(const Graph& g) {
    require_nonempty(g, "components");
    VertexSet all(g.order());
    std::iota(all.begin(), all.end(), 0);
    return induced_components(g, all);
}

std::vector<VertexSet> induced_components(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw PreconditionError("induced_components: empty vertex set");
    std::vector<char> in_s(g.order(), 0), seen(g.order(), 0);
    for (Vertex v : s) {
        if (!g.valid_vertex(v)) throw PreconditionError("induced_components: invalid vertex " + std::to_string(v));
        in_s[v] = 1;
    }
    std::vector<VertexSet> out;
    for (Vertex root : s) {
        if (seen[root]) continue;
        VertexSet comp;
        std::vector<Vertex> stack{root};
        seen[root] = 1;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (Vertex y : g.neighbors(x)) {
                if (in_s[y] && !seen[y]) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    return out;
}

bool induces_connected(const Graph& g, const VertexSet& s) {
    return induced_components(g, s).size() == 1;
}

bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() + 1 == static_cast<std::size_t>(g.order());
}

bool is_cactus(const Graph& g) {
    return is_connected(g) && dfs_cycle_scan(g, nullptr);
}

std::vector<std::vector<Vertex>> cactus_cycles(const Graph& g) {
    std::vector<std::vector<Vertex>> cycles;
    if (!is_connected(g) || !dfs_cycle_scan(g, &cycles)) {
        throw PreconditionError("cactus_cycles: graph is not a cactus");
    }
    return cycles;
}

Graph sequential_join(std::span<const Graph> parts) {
    if (parts.empty()) throw PreconditionError("sequential_join: no parts");
    std::vector<int> offset;
    int n = 0;
    for (const Graph& p : parts) {
        if (p.order() == 0) throw PreconditionError("sequential_join: empty part");
        offset.push_back(n);
        n += p.order();
    }
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < parts.size(); ++k) {
        for (auto [u, v] : parts[k].edges()) edges.emplace_back(u + offset[k], v + offset[k]);
        if (k + 1 < parts.size()) {
            for (Vertex u = 0; u < parts[k].order(); ++u) {
                for (Vertex v = 0; v < parts[k + 1].order(); ++v) {
                    edges.emplace_back(u + offset[k], v + offset[k + 1]);
                }
            }
        }
    }
    return Graph::build(n, edges);
}

Graph disjoint_union(std::span<const Graph> parts) {
    std::vector<Edge> edges;
    int n = 0;
    for (const Graph& p : parts) {
        for (auto [u, v] : p.edges()) edges.emplace_back(u + n, v + n);
        n += p.order();
    }
    return Graph::build(n, edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw PreconditionError("relabel: permutation size mismatch");
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph::build(g.order(), edges);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::build(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("cycle_graph: need n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::build(n, edges);
}

Graph star_graph(int leaves) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph::build(leaves + 1, edges);
}

std::vector<int> recognize_clique_chain(const Graph& g) {
    const int n = g.order();
    if (n < 3 || !is_connected(g)) return {};
    // Closed neighbourhoods; twins share one.
    std::map<std::vector<Vertex>, int> class_of_nbhd;
    std::vector<int> cls(n);
    std::vector<VertexSet> members;
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> closed(g.neighbors(v).begin(), g.neighbors(v).end());
        closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
        auto [it, inserted] = class_of_nbhd.emplace(closed, static_cast<int>(members.size()));
        if (inserted) members.emplace_back();
        cls[v] = it->second;
        members[it->second].push_back(v);
    }
    const int k = static_cast<int>(members.size());
    if (k < 3) return {};
    std::vector<std::vector<int>> qadj(k);
    for (auto [u, v] : g.edges()) {
        int a = cls[u], b = cls[v];
        if (a == b) continue;
        if (std::find(qadj[a].begin(), qadj[a].end(), b) == qadj[a].end()) {
            qadj[a].push_back(b);
            qadj[b].push_back(a);
        }
    }
    std::vector<int> ends;
    for (int c = 0; c < k; ++c) {
        if (qadj[c].size() > 2 || qadj[c].empty()) return {};
        if (qadj[c].size() == 1) ends.push_back(c);
    }
    if (ends.size() != 2) return {};
    // Start from the end holding the smaller id; class ids follow first
    // appearance, so that is the smaller class id.
    std::vector<int> sizes;
    int prev = -1, cur = std::min(ends[0], ends[1]);
    while (true) {
        sizes.push_back(static_cast<int>(members[cur].size()));
        int nxt = -1;
        for (int c : qadj[cur]) {
            if (c != prev) nxt = c;
        }
        if (nxt < 0) break;
        prev = cur;
        cur = nxt;
    }
    if (static_cast<int>(sizes.size()) != k) return {};
    return sizes;
}

std::string describe(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.order() << " m=" << g.edge_count();
    return os.str();
}

}  // namespace nichrom
