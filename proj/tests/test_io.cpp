#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "tw/drivers.hpp"
#include "tw/io.hpp"
#include "tw/oracle.hpp"

using namespace tw;
using namespace tw::testing;

TEST_CASE("parse_gr") {
    Graph e = parse_gr("p tw 2 1\n1 2\n");
    CHECK(e.vertices() == VSet{1, 2});
    CHECK(e.adjacent(1, 2));

    Graph c = parse_gr("c a comment\r\np tw 3 2\r\nc inside\r\n1 2\r\n2 3\r\n");
    CHECK(c == path_graph(3));

    std::vector<std::string> warnings;
    Graph d = parse_gr("p tw 3 3\n1 2\n2 1\n2 3\n", &warnings);
    CHECK(d.edge_count() == 2);
    CHECK(warnings.size() == 1);

    CHECK(parse_gr("p tw 0 0\n").empty());
    CHECK(parse_gr("p tw 3 0\n").order() == 3);

    CHECK_THROWS_AS(parse_gr("p tw 4 5\n1 2\n2 3\n3 4\n1 4\n"), ParseError);
    CHECK_THROWS_AS(parse_gr("p tw 3 1\n1 4\n"), ParseError);
    CHECK_THROWS_AS(parse_gr("p tw 3 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_gr("p td 3 1\n1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_gr("p tw 3\n"), ParseError);
    CHECK_THROWS_AS(parse_gr("1 2\np tw 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_gr("p tw 2 1\n1 x\n"), ParseError);
    CHECK_THROWS_AS(parse_gr("p tw 2 1\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_gr("p tw 2 0\np tw 2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_gr(""), ParseError);
}

TEST_CASE("emit_gr") {
    CHECK(emit_gr(path_graph(4)) == "p tw 4 3\n1 2\n2 3\n3 4\n");
    // Ids are renumbered by rank.
    Graph g;
    g.add_edge(7, 3);
    g.add_vertex(10);
    CHECK(emit_gr(g) == "p tw 3 1\n1 2\n");

    std::string messy = "c x\np tw 4 3\n3 4\n2 1\n3 2\n";
    std::string clean = emit_gr(parse_gr(messy));
    CHECK(clean == "p tw 4 3\n1 2\n2 3\n3 4\n");
    CHECK(emit_gr(parse_gr(clean)) == clean);

    for (int iter = 0; iter < 30; ++iter) {
        Graph r = gnp(1 + iter % 9, 0.4, iter);
        CHECK(parse_gr(emit_gr(r)) == r);
    }
}

TEST_CASE("parse_td and emit_td") {
    Graph k3 = complete_graph(3);
    TreeDecomposition one = single_bag({1, 2, 3});
    std::string text = emit_td(one, k3);
    CHECK(text == "s td 1 3 3\nb 1 1 2 3\n");
    TreeDecomposition back = parse_td(text, k3);
    CHECK(back.bags == one.bags);
    CHECK(emit_td(back, k3) == text);

    Graph p4 = path_graph(4);
    TreeDecomposition t = parse_td("c path\ns td 3 2 4\nb 1 1 2\nb 2 2 3\nb 3 3 4\n1 2\n2 3\n", p4);
    CHECK(validate(p4, t).ok());
    CHECK(t.width() == 1);

    CHECK(emit_td(single_bag({}), Graph{}) == "s td 1 0 0\nb 1\n");
    CHECK(parse_td("s td 1 0 0\nb 1\n", Graph{}).size() == 1);
    CHECK(emit_td(one, k3, {"width 2"}) == "c width 2\ns td 1 3 3\nb 1 1 2 3\n");

    // Cyclic tree edges.
    CHECK_THROWS_AS(parse_td("s td 3 3 3\nb 1 1 2 3\nb 2 1 2\nb 3 2 3\n1 2\n2 3\n3 1\n", k3), ParseError);
    // Bag index gap.
    CHECK_THROWS_AS(parse_td("s td 2 3 3\nb 1 1 2 3\n", k3), ParseError);
    CHECK_THROWS_AS(parse_td("s td 2 3 3\nb 1 1 2 3\nb 3 1\n1 2\n", k3), ParseError);
    // Edge {1,3} of the triangle is not covered.
    CHECK_THROWS_AS(parse_td("s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n", k3), ParseError);
    // Vertex missing from every bag.
    CHECK_THROWS_AS(parse_td("s td 1 2 3\nb 1 1 2\n", path_graph(3)), ParseError);
    // Header width disagrees with the bags.
    CHECK_THROWS_AS(parse_td("s td 1 2 3\nb 1 1 2 3\n", k3), ParseError);
    CHECK_THROWS_AS(parse_td("s td 1 3 4\nb 1 1 2 3\n", k3), ParseError);
    CHECK_THROWS_AS(parse_td("b 1 1 2 3\n", k3), ParseError);

    // Round trip for driver output on renumbered graphs.
    for (int iter = 0; iter < 20; ++iter) {
        Graph g = gnp(3 + iter % 6, 0.5, 100 + iter);
        TreeDecomposition td = treewidth(g).td;
        std::string s = emit_td(td, g);
        TreeDecomposition r = parse_td(s, g);
        CHECK(r.bags == td.bags);
        CHECK(emit_td(r, g) == s);
    }
}

TEST_CASE("generators") {
    CHECK(grid(3, 3) == grid_graph(3, 3));
    CHECK(cycle(4) == cycle_graph(4));
    CHECK(gnp(8, 0.5, 3) == gnp(8, 0.5, 3));
    CHECK(gnp(6, 1.0, 1) == complete_graph(6));
    CHECK(gnp(6, 0.0, 1).edge_count() == 0);
    CHECK(oracle::exact_tw(ktree(8, 3, 1)).width == 3);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Graph t = ktree(9, 2, seed);
        CHECK(t.order() == 9);
        CHECK(t.edge_count() == 3 + 2 * 6);  // K3 then two edges per vertex
        CHECK(oracle::exact_tw(t).width == 2);
    }
    CHECK(ktree(3, 5, 1) == complete_graph(3));
    CHECK(ktree(5, 0, 1).edge_count() == 0);

    Graph k = ktree(40, 4, 7);
    Graph d = drop_edges(k, 0.05, 8);
    CHECK(d.order() == 40);
    CHECK(d.edge_count() == k.edge_count() - 8);  // round(0.05 * 150)
    for (auto [u, v] : d.edges()) CHECK(k.adjacent(u, v));

    CHECK_THROWS_AS(gnp(-1, 0.5, 1), Error);
    CHECK_THROWS_AS(gnp(3, 1.5, 1), Error);
    CHECK_THROWS_AS(grid(0, 3), Error);
    CHECK_THROWS_AS(ktree(0, 2, 1), Error);
    CHECK_THROWS_AS(cycle(2), Error);
    CHECK_THROWS_AS(drop_edges(k, -0.1, 1), Error);
}
