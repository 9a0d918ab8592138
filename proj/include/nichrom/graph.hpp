#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nichrom {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Ascending, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbour lists are sorted ascending, so every traversal in this library
/// has a canonical order. There is no mutation API; derived graphs are built
/// through the free functions below or through Graph::build.
class Graph {
public:
    Graph() = default;

    /// Validates and builds. Throws GraphError naming the offending edge on a
    /// loop, a duplicate edge (in either orientation) or an id >= n.
    static Graph build(int n, std::span<const Edge> edges);
    static Graph build(int n, std::initializer_list<Edge> edges) {
        return build(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edge_count_; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    bool has_edge(Vertex u, Vertex v) const;
    bool valid_vertex(Vertex v) const { return v >= 0 && v < order(); }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

int max_degree(const Graph& g);

/// BFS distance layers from v; layers[k] holds the vertices at distance k.
/// Throws PreconditionError listing unreached vertices if g is disconnected.
std::vector<VertexSet> bfs_layers(const Graph& g, Vertex v);

int eccentricity(const Graph& g, Vertex v);
int diameter(const Graph& g);
/// Smallest id whose eccentricity equals the diameter.
Vertex peripheral_vertex(const Graph& g);

bool is_connected(const Graph& g);
/// Connected components, each ascending, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
/// Components of the induced subgraph g[s].
std::vector<VertexSet> induced_components(const Graph& g, const VertexSet& s);
bool induces_connected(const Graph& g, const VertexSet& s);

bool is_tree(const Graph& g);
bool is_cactus(const Graph& g);
/// Each cycle of a cactus once, as a vertex sequence whose last vertex is
/// adjacent to its first. Throws PreconditionError on non-cacti.
std::vector<std::vector<Vertex>> cactus_cycles(const Graph& g);

/// Disjoint union of the parts with every vertex of part k joined to every
/// vertex of part k+1. Ids are assigned block-wise in part order.
Graph sequential_join(std::span<const Graph> parts);

/// Disjoint union, ids assigned block-wise.
Graph disjoint_union(std::span<const Graph> parts);

/// Relabels vertex v to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// K_{1,leaves}; the centre is vertex 0.
Graph star_graph(int leaves);

/// Parts of a sequential join of complete graphs, recovered from the
/// closed-neighbourhood twin classes, or empty when g has no such shape.
/// Needs at least three parts; the two-part case is a complete graph and
/// the decomposition is not unique.
std::vector<int> recognize_clique_chain(const Graph& g);

std::string describe(const Graph& g);

}  // namespace nichrom
