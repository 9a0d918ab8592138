#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "nichrom/corpus.hpp"
#include "nichrom/errors.hpp"
#include "nichrom/exact.hpp"
#include "support.hpp"

using namespace nichrom;

namespace {

void check_witness(const Graph& g, int i, const SolveResult& r) {
    CHECK(verify(g, r.witness, i).valid);
    CHECK(color_count(r.witness) == static_cast<std::size_t>(r.value));
}

}  // namespace

TEST_CASE("oracle_ti examples") {
    CHECK(oracle_ti(star_graph(5), 3).value == 4);
    for (int n = 1; n <= 8; ++n) CHECK(oracle_ti(path_graph(n), 3).value == n);
    auto r = oracle_ti(star_graph(5), 4);
    CHECK(r.value == 5);
    CHECK(r.complete);
    check_witness(star_graph(5), 4, r);
    try {
        oracle_ti(path_graph(12), 3);
        FAIL("expected cap error");
    } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("oracle cap exceeded, use solve_ti") != std::string::npos);
    }
}

TEST_CASE("oracle witness is the lexicographically first optimum") {
    // K_{1,4}, i=3: the centre needs a colour no leaf uses, so the leaves
    // start at 2 and repeat once as early as possible.
    auto r = oracle_ti(star_graph(4), 3);
    CHECK(r.value == 4);
    CHECK(r.witness == Coloring{1, 2, 2, 3, 4});
}

TEST_CASE("solve_ti examples") {
    auto spider = gen_vc_extremal(4);
    REQUIRE(spider.order() == 13);
    auto r = solve_ti(spider, 3);
    CHECK(r.value == 10);
    CHECK(r.complete);
    check_witness(spider, 3, r);
    for (int n = 2; n <= 7; ++n) CHECK(solve_ti(complete_graph(n), n - 1).value == n);
}

TEST_CASE("solve_ti budget exhaustion is flagged, not an error") {
    Graph g = random_connected(16, 30, 5);
    auto r = solve_ti(g, 3, {1000, 1});
    CHECK_FALSE(r.complete);
    CHECK(r.value >= 1);
    check_witness(g, 3, r);
}

TEST_CASE("oracle and solver agree with the reference enumeration") {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const int n = 1 + static_cast<int>(seed % 8);
        const int room = n * (n - 1) / 2 - std::max(0, n - 1);
        Graph g = random_connected(n, room > 0 ? static_cast<int>(seed * 5 % (room + 1)) : 0, seed);
        for (int i = 1; i <= n; ++i) {
            CAPTURE(seed);
            CAPTURE(i);
            const int truth = ref::brute_ti(g, i);
            auto o = oracle_ti(g, i);
            auto s = solve_ti(g, i);
            auto p = solve_ti(g, i, {kDefaultNodeBudget, 4});
            CHECK(o.value == truth);
            CHECK(s.value == truth);
            CHECK(p.value == truth);
            CHECK(s.complete);
            CHECK(p.complete);
            check_witness(g, i, o);
            check_witness(g, i, s);
            check_witness(g, i, p);
        }
    }
}

TEST_CASE("value properties") {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(7));
        Graph g = random_connected(n, static_cast<int>(rng.below(ref::room(n) + 1)), 500 + trial);
        CAPTURE(trial);
        int prev = 0;
        for (int i = 1; i <= n; ++i) {
            const int t = oracle_ti(g, i).value;
            CHECK(t >= prev);
            CHECK(t <= n);
            if (i >= max_degree(g)) CHECK(t == n);
            prev = t;
        }
        // Isomorphism invariance.
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        for (int k = n - 1; k > 0; --k) std::swap(perm[k], perm[rng.below(k + 1)]);
        for (int i = 1; i <= 3; ++i) CHECK(solve_ti(relabel(g, perm), i).value == oracle_ti(g, i).value);
    }
}

TEST_CASE("disjoint unions add") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        std::vector<Graph> parts{random_connected(3 + seed % 3, static_cast<int>(seed % 2), seed),
                                 random_tree(2 + seed % 4, seed + 99)};
        Graph u = disjoint_union(parts);
        for (int i = 1; i <= 3; ++i) {
            const int sum = oracle_ti(parts[0], i).value + oracle_ti(parts[1], i).value;
            CHECK(oracle_ti(u, i).value == sum);
            CHECK(solve_ti(u, i).value == sum);
        }
    }
}

TEST_CASE("sequential solver witnesses are deterministic") {
    Graph g = random_connected(10, 8, 42);
    auto a = solve_ti(g, 3);
    auto b = solve_ti(g, 3);
    CHECK(a.witness == b.witness);
    CHECK(a.nodes == b.nodes);
}

TEST_CASE("min_connected_vertex_cover examples") {
    auto star = min_connected_vertex_cover(star_graph(4));
    CHECK(star.size == 1);
    CHECK(star.witness == VertexSet{0});
    auto p4 = min_connected_vertex_cover(path_graph(4));
    CHECK(p4.size == 2);
    CHECK(p4.witness == VertexSet{1, 2});
    CHECK(min_connected_vertex_cover(cycle_graph(5)).size == 4);
    CHECK_THROWS_AS(min_connected_vertex_cover(complete_graph(1)), PreconditionError);
    CHECK_THROWS_AS(min_connected_vertex_cover(Graph::build(4, {{0, 1}, {2, 3}})), PreconditionError);
}

TEST_CASE("min_connected_vertex_cover against subset search") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const int n = 2 + static_cast<int>(seed % 11);
        Graph g = random_connected(n, static_cast<int>(seed % 5) % (ref::room(n) + 1), seed);
        CAPTURE(seed);
        auto c = min_connected_vertex_cover(g);
        CHECK(c.size == ref::min_cvc(ref::matrix(g)));
        CHECK(c.witness.size() == static_cast<std::size_t>(c.size));
        CHECK(induces_connected(g, c.witness));
        for (auto [u, v] : g.edges()) {
            CHECK((std::binary_search(c.witness.begin(), c.witness.end(), u) ||
                   std::binary_search(c.witness.begin(), c.witness.end(), v)));
        }
    }
}
