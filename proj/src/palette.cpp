#include "nichrom/palette.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "nichrom/errors.hpp"

namespace nichrom {

namespace {

void require_matching(const Graph& g, const Coloring& f, const char* op) {
    if (static_cast<int>(f.size()) != g.order()) {
        throw PreconditionError(std::string(op) + ": coloring has " + std::to_string(f.size()) +
                                " entries for a graph of order " + std::to_string(g.order()));
    }
}

void sort_unique(ColorSet& c) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
}

}  // namespace

Coloring::Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {
    for (std::size_t v = 0; v < colors_.size(); ++v) {
        if (colors_[v] < 1) {
            throw PreconditionError("colour of vertex " + std::to_string(v) + " is " +
                                    std::to_string(colors_[v]) + "; colours must be >= 1");
        }
    }
}

ColorSet neighborhood_palette(const Graph& g, const Coloring& f, Vertex v) {
    require_matching(g, f, "neighborhood_palette");
    ColorSet out;
    for (Vertex x : g.neighbors(v)) out.push_back(f[x]);
    sort_unique(out);
    return out;
}

Verdict verify(const Graph& g, const Coloring& f, int i) {
    if (i < 1) throw PreconditionError("verify: i must be >= 1");
    require_matching(g, f, "verify");
    Verdict verdict;
    for (Vertex v = 0; v < g.order(); ++v) {
        std::size_t k = neighborhood_palette(g, f, v).size();
        if (k > static_cast<std::size_t>(i)) verdict.violations.push_back({v, k});
    }
    verdict.valid = verdict.violations.empty();
    return verdict;
}

std::size_t color_count(const Coloring& f) {
    ColorSet c = f.colors();
    sort_unique(c);
    return c.size();
}

Coloring normalize(const Coloring& f) {
    std::unordered_map<Color, Color> relabel;
    std::vector<Color> out;
    out.reserve(f.size());
    for (Color c : f.colors()) {
        auto [it, inserted] = relabel.emplace(c, static_cast<Color>(relabel.size() + 1));
        out.push_back(it->second);
    }
    return Coloring(std::move(out));
}

ColorSet psi(const Graph& g, const Coloring& f, const VertexSet& s) {
    if (s.empty()) throw PreconditionError("psi: empty vertex set");
    require_matching(g, f, "psi");
    ColorSet out;
    for (Vertex v : s) {
        for (Vertex x : g.neighbors(v)) out.push_back(f[x]);
    }
    sort_unique(out);
    return out;
}

PsiBound psi_bound(const Graph& g, const Coloring& f, int i, const VertexSet& s) {
    if (s.empty()) throw PreconditionError("psi_bound: empty vertex set");
    if (!verify(g, f, i).valid) throw PreconditionError("psi_bound: coloring is not a valid N_i coloring");
    PsiBound b;
    for (const VertexSet& comp : induced_components(g, s)) {
        if (comp.size() <= 2) {
            b.small_vertices += comp.size();
        } else {
            b.large_vertices += comp.size();
            ++b.large_components;
        }
    }
    const auto ii = static_cast<std::size_t>(i);
    b.lhs = psi(g, f, s).size();
    b.rhs = ii * b.small_vertices + (ii - 1) * b.large_vertices + (ii - 1) * b.large_components;
    b.holds = b.lhs <= b.rhs;
    return b;
}

}  // namespace nichrom
