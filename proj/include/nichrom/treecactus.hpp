#pragma once

#include <map>
#include <utility>

#include "nichrom/graph.hpp"
#include "nichrom/palette.hpp"

namespace nichrom {

struct TreeStats {
    int n = 0;
    int leaves = 0;
    std::map<int, int> degree_count;  // degree -> number of vertices

    int count_of_degree(int k) const {
        auto it = degree_count.find(k);
        return it == degree_count.end() ? 0 : it->second;
    }
};

struct CactusStats {
    int n = 0;
    int leaves = 0;
    int degree_two = 0;
    int cycles = 0;
    int cycles_with_degree_two = 0;
};

TreeStats tree_stats(const Graph& t);
CactusStats cactus_stats(const Graph& g);

/// n - l + 2
int tree_t2_closed(const Graph& t);
/// 2n - 2l + 2 - n_2
int tree_t3_closed(const Graph& t);
/// 2n - 2l + 2 - (n_2 + ... + n_{i-1}); i >= 3.
int tree_ti_closed(const Graph& t, int i);
/// 2n - 2l - 2r + 2 - n_2, r = cycles holding a degree-2 vertex.
int cactus_t3_closed(const Graph& g);

struct Construction {
    Coloring coloring;
    int count = 0;
};

enum class TreePolicy {
    /// New colour for leaf u on w iff deg(w) <= i-1 before attaching u.
    DegreeRule,
    /// New colour iff w currently sees at most i-1 colours.
    PaletteGreedy,
};

/// Leaf-peeling construction. Leaves are removed highest id first down to a
/// single vertex or edge, then re-attached in reverse; a re-attached leaf
/// either takes a fresh colour or the smallest colour already around its
/// parent.
Construction tree_inductive(const Graph& t, int i, TreePolicy policy);

/// Same scheme on a cactus with i = 3. The peeled vertex is a non-cut vertex
/// of minimum degree (ties: highest id); each re-attached vertex takes a
/// fresh colour when that stays valid, otherwise the smallest colour from
/// its neighbours' palettes that does. Throws ConstructionGap when neither
/// exists.
Construction cactus_inductive(const Graph& g);

/// BFS-layer colouring from the peripheral vertex: layer 0 gets colour 1 and
/// each block of three layers k gets the ranges
///   [2+(k-1)i, ki-c], [ki-c+1, ki], {ki+1}   with c = ceil((i-1)/2),
/// round-robin by vertex id inside a layer. Every vertex sees at most i
/// colours.
Construction layered_coloring(const Graph& g, int i);

/// The colour range allotted to BFS layer m >= 1 by layered_coloring.
std::pair<Color, Color> layer_range(int m, int i);

}  // namespace nichrom
