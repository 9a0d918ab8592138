#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "nichrom/corpus.hpp"
#include "nichrom/io.hpp"

using namespace nichrom;

namespace {

io::GraphDocument parse(const std::string& text) {
    std::istringstream in(text);
    return io::read_graph(in);
}

}  // namespace

TEST_CASE("graph JSON round trip") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = random_connected(7, static_cast<int>(seed % 10), seed);
        std::ostringstream out;
        io::write_graph_json(out, {"g" + std::to_string(seed), g});
        auto doc = parse(out.str());
        CHECK(doc.graph == g);
        CHECK(doc.name == "g" + std::to_string(seed));
    }
    auto unnamed = parse(R"({"n": 3, "edges": [[0, 1], [1, 2]]})");
    CHECK_FALSE(unnamed.name.has_value());
    CHECK(unnamed.graph == path_graph(3));
}

TEST_CASE("edge list input") {
    auto doc = parse("# a path\n4 3\n0 1\n\n1 2\n2 3\n");
    CHECK(doc.graph == path_graph(4));
    std::ostringstream out;
    io::write_graph_edgelist(out, path_graph(4));
    CHECK(out.str() == "4 3\n0 1\n1 2\n2 3\n");
    CHECK(parse(out.str()).graph == path_graph(4));
}

TEST_CASE("parse errors carry positions") {
    try {
        parse("{\"n\": 3,\n \"edges\": [[0, 1],, ]}");
        FAIL("expected a parse error");
    } catch (const io::ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() > 0);
    }
    try {
        parse("3 2\n0 1\n1 x\n");
        FAIL("expected a parse error");
    } catch (const io::ParseError& e) {
        CHECK(e.line() == 3);
    }
    try {
        parse("3 1\n0 1 7\n");
        FAIL("expected a parse error");
    } catch (const io::ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 5);
    }
    CHECK_THROWS_AS(parse("3 2\n0 1\n"), io::ParseError);
    CHECK_THROWS_AS(parse(R"({"n": 3, "edges": [[0, 0]]})"), io::ParseError);
    CHECK_THROWS_AS(parse(R"({"edges": []})"), io::ParseError);
}

TEST_CASE("coloring JSON round trip") {
    io::ColoringDocument doc{3, Coloring{4, 1, 2, 3, 1}};
    std::ostringstream out;
    io::write_coloring_json(out, doc);
    CHECK(out.str() == "{\"colors\":[4,1,2,3,1],\"i\":3}\n");
    std::istringstream in(out.str());
    auto back = io::read_coloring(in);
    CHECK(back.i == 3);
    CHECK(back.coloring == doc.coloring);
    std::istringstream zero(R"({"i": 2, "colors": [1, 0]})");
    CHECK_THROWS_AS(io::read_coloring(zero), io::ParseError);
}

TEST_CASE("dot export labels colours") {
    std::ostringstream out;
    Coloring c{1, 2};
    io::write_dot(out, complete_graph(2), &c, "k2");
    const std::string s = out.str();
    CHECK(s.find("graph \"k2\"") != std::string::npos);
    CHECK(s.find("1 [label=\"1:2\", color=2]") != std::string::npos);
    CHECK(s.find("0 -- 1;") != std::string::npos);
}

TEST_CASE("discrepancy CSV round trip with quoting") {
    std::vector<Discrepancy> rows{{"tree-ti-closed", "star:6", 6, 4, 4, 5, "claimed-equality-fails"},
                                  {"diameter-lower", "odd \"name\", with comma", 5, 5, 8, 5,
                                   "claimed-lower-bound-fails"}};
    std::ostringstream out;
    io::write_discrepancies_csv(out, rows);
    CHECK(out.str().rfind("claim,graph,n,i,claimed,oracle,direction\n", 0) == 0);
    CHECK(out.str().find("\"odd \"\"name\"\", with comma\"") != std::string::npos);
    std::istringstream in(out.str());
    CHECK(io::read_discrepancies_csv(in) == rows);

    std::ostringstream empty;
    io::write_discrepancies_csv(empty, {});
    CHECK(empty.str() == "claim,graph,n,i,claimed,oracle,direction\n");
}
