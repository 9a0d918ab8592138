#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "nichrom/corpus.hpp"
#include "nichrom/errors.hpp"
#include "nichrom/exact.hpp"
#include "nichrom/palette.hpp"
#include "support.hpp"

using namespace nichrom;

namespace {

// Random colouring with at most `k` labels drawn from a scrambled range.
Coloring random_coloring(int n, int k, Rng& rng) {
    std::vector<Color> c(n);
    for (auto& x : c) x = 1 + static_cast<Color>(rng.below(k));
    return Coloring(c);
}

// Random colouring that is N_i-valid: start all-ones and recolour vertices
// one at a time whenever the result stays valid.
Coloring random_valid_coloring(const Graph& g, int i, Rng& rng) {
    const int n = g.order();
    std::vector<Color> c(n, 1);
    for (int round = 0; round < 3 * n; ++round) {
        const Vertex v = static_cast<Vertex>(rng.below(n));
        const Color old = c[v];
        c[v] = 1 + static_cast<Color>(rng.below(n + 1));
        if (!verify(g, Coloring(c), i).valid) c[v] = old;
    }
    return Coloring(c);
}

}  // namespace

TEST_CASE("neighborhood_palette") {
    Graph p3 = path_graph(3);
    CHECK(neighborhood_palette(p3, {1, 2, 3}, 1) == ColorSet{1, 3});
    Graph iso = Graph::build(2, {});
    CHECK(neighborhood_palette(iso, {1, 1}, 0).empty());
    Graph k14 = star_graph(4);
    CHECK(neighborhood_palette(k14, {4, 1, 2, 3, 1}, 0) == ColorSet{1, 2, 3});
    CHECK_THROWS_AS(neighborhood_palette(p3, {1, 2}, 0), PreconditionError);
}

TEST_CASE("verify") {
    Graph k14 = star_graph(4);
    auto bad = verify(k14, {5, 1, 2, 3, 4}, 3);
    CHECK_FALSE(bad.valid);
    CHECK(bad.violations == std::vector<Violation>{{0, 4}});

    Rng rng(9);
    for (int k = 0; k < 20; ++k) CHECK(verify(path_graph(7), random_coloring(7, 7, rng), 2).valid);

    Coloring star_coloring{4, 1, 2, 3, 1};
    CHECK(verify(k14, star_coloring, 3).valid);
    CHECK(color_count(star_coloring) == 4);

    CHECK_THROWS_AS(verify(k14, star_coloring, 0), PreconditionError);
    CHECK_THROWS_AS(verify(k14, {1, 2}, 3), PreconditionError);
    CHECK_THROWS_AS(Coloring({1, 0, 2}), PreconditionError);
}

TEST_CASE("verify lists every violation in vertex order") {
    // Two hubs, each seeing three colours.
    Graph g = Graph::build(8, {{0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7}});
    auto v = verify(g, {1, 1, 1, 2, 3, 1, 2, 3}, 2);
    CHECK(v.violations == std::vector<Violation>{{0, 3}, {1, 3}});
}

TEST_CASE("color_count and normalize") {
    Coloring f{5, 5, 7, 5};
    CHECK(color_count(f) == 2);
    CHECK(normalize(f) == Coloring{1, 1, 2, 1});
    Coloring id{1, 2, 3, 4, 5};
    CHECK(color_count(id) == 5);
    CHECK(normalize(id) == id);
    Rng rng(3);
    for (int k = 0; k < 50; ++k) {
        auto c = random_coloring(8, 20, rng);
        CHECK(normalize(normalize(c)) == normalize(c));
        CHECK(color_count(normalize(c)) == color_count(c));
    }
}

TEST_CASE("psi") {
    Graph p4 = path_graph(4);
    Coloring f{1, 2, 3, 4};
    for (Vertex v = 0; v < 4; ++v) CHECK(psi(p4, f, {v}) == neighborhood_palette(p4, f, v));
    CHECK(psi(complete_graph(2), {1, 2}, {0, 1}) == ColorSet{1, 2});
    CHECK(psi(p4, f, {1, 2}) == ColorSet{1, 2, 3, 4});
    CHECK_THROWS_AS(psi(p4, f, {}), PreconditionError);
}

TEST_CASE("psi_bound cases") {
    // All components small: rhs = i|S|.
    Graph p6 = path_graph(6);
    Coloring f6{1, 2, 3, 4, 5, 6};
    auto small = psi_bound(p6, f6, 3, {0, 1, 4});
    CHECK(small.rhs == 3 * 3);
    CHECK(small.large_components == 0);
    CHECK(small.holds);

    // All components large: rhs = (i-1)|S| + (i-1)t.
    auto large = psi_bound(p6, f6, 3, {0, 1, 2, 3});
    CHECK(large.rhs == 2 * 4 + 2 * 1);
    CHECK(large.large_components == 1);

    auto star = psi_bound(star_graph(4), {4, 1, 2, 3, 1}, 3, {0});
    CHECK(star.lhs == 3);
    CHECK(star.rhs == 3);  // one small component: i * |S|
    CHECK(star.holds);

    CHECK_THROWS_AS(psi_bound(star_graph(4), {5, 1, 2, 3, 4}, 3, {0}), PreconditionError);
    CHECK_THROWS_AS(psi_bound(star_graph(4), {4, 1, 2, 3, 1}, 3, {}), PreconditionError);
}

TEST_CASE("the component bound does not hold for i = 2") {
    // P_5 with all-distinct colours is N_2-valid; the middle three see all five colours.
    auto b = psi_bound(path_graph(5), {1, 2, 3, 4, 5}, 2, {1, 2, 3});
    CHECK(b.lhs == 5);
    CHECK(b.rhs == 4);
    CHECK_FALSE(b.holds);
}

TEST_CASE("relabel and monotonicity properties") {
    Rng rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 3 + static_cast<int>(rng.below(6));
        const int extra = static_cast<int>(rng.below(n * (n - 1) / 2 - (n - 1) + 1));
        Graph g = random_connected(n, extra, 100 + trial);
        const int i = 1 + static_cast<int>(rng.below(4));
        Coloring f = random_coloring(n, n, rng);
        const auto verdict = verify(g, f, i);
        CAPTURE(trial);
        CHECK(verdict.valid == ref::valid(ref::matrix(g), f.colors(), i));
        CHECK(verdict.valid == verdict.violations.empty());

        // Colour-label bijection: shift and reverse labels.
        std::vector<Color> shifted(f.colors());
        for (auto& c : shifted) c = 100 - c;
        Coloring g_f(shifted);
        CHECK(verify(g, g_f, i).valid == verdict.valid);
        CHECK(color_count(g_f) == color_count(f));
        VertexSet s;
        for (Vertex v = 0; v < n; ++v)
            if (rng.below(2)) s.push_back(v);
        if (s.empty()) s.push_back(0);
        CHECK(psi(g, g_f, s).size() == psi(g, f, s).size());

        // Vertex permutation applied to graph and colouring together.
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int k = n - 1; k > 0; --k) std::swap(perm[k], perm[rng.below(k + 1)]);
        std::vector<Color> moved(n);
        for (Vertex v = 0; v < n; ++v) moved[perm[v]] = f[v];
        CHECK(verify(relabel(g, perm), Coloring(moved), i).valid == verdict.valid);

        if (verdict.valid) CHECK(verify(g, f, i + 1).valid);

        // Sub-additivity over induced components.
        std::size_t sum = 0;
        for (const auto& c : induced_components(g, s)) sum += psi(g, f, c).size();
        CHECK(psi(g, f, s).size() <= sum);

        // psi_bound holds for valid colourings, i >= 3; the holds flag is label-invariant.
        if (i >= 3) {
            Coloring vf = random_valid_coloring(g, i, rng);
            auto b = psi_bound(g, vf, i, s);
            CHECK(b.holds);
            std::vector<Color> vs(vf.colors());
            for (auto& c : vs) c = 3 * c + 1;
            CHECK(psi_bound(g, Coloring(vs), i, s).holds == b.holds);
        }
    }
}

TEST_CASE("psi_bound holds on optimal witnesses") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const int n = 4 + static_cast<int>(seed % 5);
        Graph g = random_connected(n, static_cast<int>(seed % 4), seed);
        for (int i = 3; i <= 4; ++i) {
            auto w = oracle_ti(g, i).witness;
            for (std::uint32_t mask = 1; mask < (1u << n); mask += 7) {
                VertexSet s;
                for (Vertex v = 0; v < n; ++v)
                    if (mask >> v & 1) s.push_back(v);
                CHECK(psi_bound(g, w, i, s).holds);
            }
        }
    }
}
