#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "stemtree/graph.hpp"

using namespace stemtree;

namespace {

Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(0, n - 1);
    return Graph::from_edges(n, e);
}

Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph star(int t) {  // K_{1,t} with center 0
    std::vector<Edge> e;
    for (int i = 1; i <= t; ++i) e.emplace_back(0, i);
    return Graph::from_edges(t + 1, e);
}

const char* kPetersen = "IheA@GUAo";

}  // namespace

TEST_CASE("graph construction and basic queries") {
    Graph g = Graph::from_edges(4, {Edge(0, 1), Edge(1, 2), Edge(1, 2), Edge(2, 3)});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);  // duplicate collapsed
    CHECK(g.degree(1) == 2);
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK(g.max_degree() == 2);
    CHECK(g.neighbors(1) == std::vector<Vertex>{0, 2});
    CHECK(g.edges() == std::vector<Edge>{Edge(0, 1), Edge(1, 2), Edge(2, 3)});

    CHECK_THROWS_AS(Graph::from_edges(3, {Edge(0, 3)}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, {Edge(1, 1)}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(0, {}), GraphError);
}

TEST_CASE("edge list text round trip") {
    EdgeListGraph parsed = parse_edge_list("5 4\n0 1\n1 2\n2 3\n3 4\n");
    CHECK(parsed.graph.vertex_count() == 5);
    CHECK(parsed.graph.edge_count() == 4);
    CHECK(parsed.duplicate_edges == 0);
    CHECK(format_edge_list(parsed.graph) == "5 4\n0 1\n1 2\n2 3\n3 4\n");

    EdgeListGraph dup = parse_edge_list("3 3\n0 1\n1 0\n1 2\n");
    CHECK(dup.graph.edge_count() == 2);
    CHECK(dup.duplicate_edges == 1);

    CHECK(parse_edge_list("1 0\n").graph.vertex_count() == 1);
    CHECK(parse_edge_list("2 1\r\n0 1\r\n").graph.edge_count() == 1);
}

TEST_CASE("edge list parse errors carry line numbers") {
    try {
        parse_edge_list("3 2\n0 1\nx y\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 3);
    }
    try {
        parse_edge_list("2 1\n0 2\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);  // vertex out of range
    }
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 2\n0 1\n"), ParseError);   // fewer edges than declared
    CHECK_THROWS_AS(parse_edge_list("2 1\n1 1\n"), ParseError);   // self-loop
    CHECK_THROWS_AS(parse_edge_list("abc\n"), ParseError);
}

TEST_CASE("graph6 encodes known graphs") {
    CHECK(encode_graph6(path(3)) == "Bg");
    CHECK(encode_graph6(path(5)) == "DhC");
    CHECK(encode_graph6(cycle(5)) == "Dhc");
    CHECK(encode_graph6(cycle(6)) == "EhEG");
    CHECK(encode_graph6(complete(4)) == "C~");
    CHECK(encode_graph6(star(3)) == "Cs");
    CHECK(encode_graph6(star(4)) == "Ds_");
    CHECK(encode_graph6(Graph::from_edges(2, {})) == "A?");
    CHECK(encode_graph6(path(9)) == "HhCGGC@");
}

TEST_CASE("graph6 decodes known graphs") {
    Graph p5 = parse_graph6("DhC");
    CHECK(p5.vertex_count() == 5);
    CHECK(p5.edges() == path(5).edges());

    // K_{1,4} with the center at the highest vertex
    Graph k14 = parse_graph6("D?{");
    CHECK(k14.degree(4) == 4);
    CHECK(k14.edge_count() == 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(k14.degree(v) == 1);

    Graph pet = parse_graph6(kPetersen);
    CHECK(pet.vertex_count() == 10);
    CHECK(pet.edge_count() == 15);
    for (Vertex v = 0; v < 10; ++v) CHECK(pet.degree(v) == 3);

    CHECK(parse_graph6(">>graph6<<Bg").edges() == path(3).edges());
    CHECK(parse_graph6("Bg\n").edges() == path(3).edges());
}

TEST_CASE("graph6 long size prefixes") {
    std::string p63 = encode_graph6(path(63));
    CHECK(p63.substr(0, 3) == "~??");
    Graph back = parse_graph6(p63);
    CHECK(back.vertex_count() == 63);
    CHECK(back.edges() == path(63).edges());

    std::string p70 = encode_graph6(path(70));
    CHECK(p70.substr(0, 4) == "~?@E");
    CHECK(parse_graph6(p70).vertex_count() == 70);
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);    // truncated data
    CHECK_THROWS_AS(parse_graph6("Bgg"), ParseError);  // trailing data
    CHECK_THROWS_AS(parse_graph6("B!"), ParseError);   // byte below the value range
    CHECK_THROWS_AS(parse_graph6("Ao"), ParseError);   // nonzero padding bits
}

TEST_CASE("graph6 round trips the fixture streams") {
    for (int n = 1; n <= 6; ++n) {
        for (const std::string& line : oracle::fixture_lines(n)) {
            Graph g = parse_graph6(line);
            CHECK(g.vertex_count() == n);
            CHECK(encode_graph6(g) == line);
        }
    }
}

TEST_CASE("distance matrix matches Floyd-Warshall and handles unreachable pairs") {
    for (const Graph& g : {path(5), cycle(6), complete(4), parse_graph6(kPetersen)}) {
        DistanceMatrix dm(g);
        auto fw = oracle::fw_distances(g);
        for (Vertex u = 0; u < g.vertex_count(); ++u)
            for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(dm.at(u, v) == fw[u][v]);
    }

    Graph two = Graph::from_edges(2, {});
    DistanceMatrix dm(two);
    CHECK(dm.at(0, 1) == dm.unreachable());
    CHECK_FALSE(dm.reachable(0, 1));
    CHECK(dm.at_least(0, 1, 4));
    CHECK(dm.at_least(0, 1, 100));  // unreachable counts as at least anything
    CHECK(dm.at_least(0, 0, 0));
    CHECK_FALSE(dm.at_least(0, 0, 1));
}

TEST_CASE("connectivity") {
    CHECK(is_connected(path(5)));
    CHECK(is_connected(Graph::from_edges(1, {})));
    CHECK_FALSE(is_connected(Graph::from_edges(2, {})));
    CHECK_FALSE(is_connected(Graph::from_edges(4, {Edge(0, 1), Edge(2, 3)})));
}

TEST_CASE("induced star search on fixed graphs") {
    auto claw = find_induced_star(star(3), 3);
    REQUIRE(claw.has_value());
    CHECK(claw->center == 0);
    CHECK(claw->leaves == std::vector<Vertex>{1, 2, 3});

    CHECK_FALSE(find_induced_star(cycle(5), 3).has_value());
    CHECK_FALSE(find_induced_star(cycle(6), 3).has_value());
    CHECK_FALSE(find_induced_star(complete(4), 3).has_value());

    auto pet = find_induced_star(parse_graph6(kPetersen), 3);
    REQUIRE(pet.has_value());
    CHECK(pet->center == 0);
    CHECK(pet->leaves == std::vector<Vertex>{1, 4, 5});
    CHECK_FALSE(find_induced_star(parse_graph6(kPetersen), 4).has_value());

    // P5 has an induced path-star nowhere; its max degree is 2
    CHECK_FALSE(find_induced_star(path(5), 3).has_value());
    CHECK(find_induced_star(star(4), 4).has_value());
    CHECK(find_induced_star(star(4), 3).has_value());

    CHECK_THROWS_AS(find_induced_star(path(3), 2), GraphError);
}

TEST_CASE("induced star existence agrees with the subset oracle") {
    for (int n = 1; n <= 6; ++n) {
        for (const std::string& line : oracle::fixture_lines(n)) {
            Graph g = parse_graph6(line);
            for (int t : {3, 4}) {
                auto mine = find_induced_star(g, t);
                auto ref = oracle::find_star_bruteforce(g, t);
                CHECK(mine.has_value() == ref.has_value());
                if (mine) {
                    CHECK(static_cast<int>(mine->leaves.size()) == t);
                    for (Vertex leaf : mine->leaves) CHECK(g.has_edge(mine->center, leaf));
                    for (size_t i = 0; i < mine->leaves.size(); ++i)
                        for (size_t j = i + 1; j < mine->leaves.size(); ++j)
                            CHECK_FALSE(g.has_edge(mine->leaves[i], mine->leaves[j]));
                }
            }
        }
    }
}
