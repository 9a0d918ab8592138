#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "nichrom/graph.hpp"

namespace nichrom {

using Color = int;

/// Sorted, duplicate-free set of colours.
using ColorSet = std::vector<Color>;

/// Total assignment of positive colours; colors()[v] is the colour of v.
class Coloring {
public:
    Coloring() = default;
    /// Throws PreconditionError if any entry is < 1.
    explicit Coloring(std::vector<Color> colors);
    Coloring(std::initializer_list<Color> colors) : Coloring(std::vector<Color>(colors)) {}

    std::size_t size() const { return colors_.size(); }
    Color operator[](Vertex v) const { return colors_[v]; }
    const std::vector<Color>& colors() const { return colors_; }

    bool operator==(const Coloring&) const = default;

private:
    std::vector<Color> colors_;
};

struct Violation {
    Vertex vertex;
    std::size_t palette_size;
    bool operator==(const Violation&) const = default;
};

struct Verdict {
    bool valid = true;
    std::vector<Violation> violations;  // ascending by vertex
};

ColorSet neighborhood_palette(const Graph& g, const Coloring& f, Vertex v);

/// Every vertex whose open neighbourhood carries more than i colours.
Verdict verify(const Graph& g, const Coloring& f, int i);

std::size_t color_count(const Coloring& f);

/// Restricted-growth relabelling: colours renumbered 1, 2, ... in order of
/// first appearance.
Coloring normalize(const Coloring& f);

/// Colours on the open neighbourhood of s (union of N(v) over v in s).
ColorSet psi(const Graph& g, const Coloring& f, const VertexSet& s);

/// |psi(S)| against the component-wise bound
///   i*|S_small| + (i-1)*|S_large| + (i-1)*(#large components)
/// where small components of g[S] have at most two vertices.
struct PsiBound {
    std::size_t lhs = 0;
    std::size_t rhs = 0;
    bool holds = false;
    std::size_t small_vertices = 0;
    std::size_t large_vertices = 0;
    std::size_t large_components = 0;
};

/// Throws PreconditionError unless f is a valid N_i coloring and s is non-empty.
PsiBound psi_bound(const Graph& g, const Coloring& f, int i, const VertexSet& s);

}  // namespace nichrom
