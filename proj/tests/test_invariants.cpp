#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "stemtree/graph.hpp"
#include "stemtree/invariants.hpp"

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

// three legs of length two glued at a center
Graph spider3() {
    return Graph::from_edges(
        7, {Edge(0, 1), Edge(0, 3), Edge(0, 5), Edge(1, 2), Edge(3, 4), Edge(5, 6)});
}

}  // namespace

TEST_CASE("sigma value semantics") {
    Sigma inf = Sigma::infinity();
    CHECK(inf.is_infinite());
    CHECK(inf.at_least(1'000'000));
    CHECK_THROWS_AS(inf.value(), GraphError);

    Sigma three = Sigma::finite(3);
    CHECK_FALSE(three.is_infinite());
    CHECK(three.value() == 3);
    CHECK(three.at_least(3));
    CHECK_FALSE(three.at_least(4));
    CHECK(three == Sigma::finite(3));
    CHECK_FALSE(three == inf);
}

TEST_CASE("power graph") {
    Graph p5 = path(5);
    CHECK(power_graph(p5, 1).edges() == p5.edges());

    Graph p5sq = power_graph(p5, 2);
    CHECK(p5sq.edges() == std::vector<Edge>{Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(1, 3),
                                            Edge(2, 3), Edge(2, 4), Edge(3, 4)});

    // cubing C6 saturates it (diameter 3)
    CHECK(power_graph(cycle(6), 3).edge_count() == 15);

    // unreachable pairs never become adjacent, whatever the exponent
    Graph split = Graph::from_edges(4, {Edge(0, 1), Edge(2, 3)});
    Graph boosted = power_graph(split, 10);
    CHECK_FALSE(boosted.has_edge(0, 2));
    CHECK(boosted.has_edge(0, 1));

    CHECK_THROWS_AS(power_graph(p5, 0), GraphError);
}

TEST_CASE("alpha on fixed graphs") {
    CHECK(alpha_m(path(5), 2) == 3);
    CHECK(alpha_m(path(5), 4) == 2);
    CHECK(alpha_m(path(9), 4) == 3);
    CHECK(alpha_m(cycle(6), 4) == 1);
    CHECK(alpha_m(complete(4), 4) == 1);
    CHECK(alpha_m(parse_graph6("IheA@GUAo"), 4) == 1);  // Petersen has diameter 2
    CHECK(alpha_m(Graph::from_edges(1, {}), 4) == 1);
    CHECK_THROWS_AS(alpha_m(path(5), 1), GraphError);
}

TEST_CASE("sigma on fixed graphs") {
    CHECK(sigma_m_p(path(9), 4, 3) == Sigma::finite(4));
    CHECK(sigma_m_p(path(9), 4, 2) == Sigma::finite(2));
    CHECK(sigma_m_p(path(5), 4, 2) == Sigma::finite(2));
    CHECK(sigma_m_p(complete(4), 4, 2).is_infinite());
    CHECK(sigma_m_p(cycle(6), 4, 2).is_infinite());
    CHECK(sigma_m_p(path(5), 4, 7).is_infinite());  // p beyond the order
    CHECK(sigma_m_p(path(5), 2, 1) == Sigma::finite(1));
    CHECK_THROWS_AS(sigma_m_p(path(5), 4, 0), GraphError);
}

TEST_CASE("distance set enumeration is lexicographic and dual to sigma") {
    auto sets = enumerate_distance_sets(path(5), 4, 2);
    REQUIRE(sets.size() == 1);
    CHECK(sets[0].vertices == std::vector<Vertex>{0, 4});
    CHECK(sets[0].degree_sum == 2);

    CHECK(enumerate_distance_sets(cycle(6), 4, 2).empty());

    auto p9 = enumerate_distance_sets(path(9), 4, 3);
    REQUIRE(!p9.empty());
    CHECK(p9.front().vertices == std::vector<Vertex>{0, 4, 8});
    for (size_t i = 1; i < p9.size(); ++i) CHECK(p9[i - 1].vertices < p9[i].vertices);
}

TEST_CASE("alpha and sigma match subset enumeration on the small streams") {
    for (int n = 1; n <= 6; ++n) {
        for (const std::string& line : oracle::fixture_lines(n)) {
            Graph g = parse_graph6(line);
            for (int m : {2, 4}) CHECK(alpha_m(g, m) == oracle::alpha_m_bruteforce(g, m));
            for (int p : {2, 3}) {
                auto ref = oracle::sigma_m_p_bruteforce(g, 4, p);
                Sigma mine = sigma_m_p(g, 4, p);
                CHECK(mine.is_infinite() == !ref.has_value());
                if (ref) CHECK(mine.value() == *ref);

                // the two in-library routes must agree as well
                auto sets = enumerate_distance_sets(g, 4, p);
                if (sets.empty()) {
                    CHECK(mine.is_infinite());
                } else {
                    long long lo = sets[0].degree_sum;
                    for (const auto& s : sets) lo = std::min(lo, s.degree_sum);
                    CHECK(mine == Sigma::finite(lo));
                }
            }
        }
    }
}

TEST_CASE("work limit aborts instead of lying") {
    Graph big = complete(12);
    CHECK_THROWS_AS(alpha_m(big, 2, 3), WorkLimitError);
    CHECK_THROWS_AS(enumerate_distance_sets(path(12), 2, 3, 2), WorkLimitError);
}

TEST_CASE("condition report on fixed instances") {
    // complete graph: no distance-4 pair, so the premise holds vacuously
    ConditionReport k4 = evaluate_condition(complete(4), 3, 2);
    CHECK(k4.n == 4);
    CHECK(k4.sigma4.is_infinite());
    CHECK(k4.alpha4 == 1);
    CHECK(k4.rhs == 4 - 4 - 1);
    CHECK(k4.hypothesis_holds);
    CHECK_FALSE(k4.l_equals_t_minus_2);
    CHECK(k4.k1t_free);
    CHECK(k4.connected);

    ConditionReport p9 = evaluate_condition(path(9), 3, 2);
    CHECK(p9.sigma4 == Sigma::finite(4));
    CHECK(p9.rhs == 9 - 4 - 1);
    CHECK(p9.hypothesis_holds);

    // spider: sigma exactly meets the bound, but l = t-2 flags the exclusion
    ConditionReport spider = evaluate_condition(spider3(), 4, 2);
    CHECK(spider.sigma4 == Sigma::finite(3));
    CHECK(spider.rhs == 7 - 3 - 1);
    CHECK(spider.hypothesis_holds);
    CHECK(spider.l_equals_t_minus_2);

    // same spider under t = 3 is not claw-free (center has three far-apart legs)
    ConditionReport claws = evaluate_condition(spider3(), 3, 2);
    CHECK_FALSE(claws.k1t_free);

    ConditionReport split = evaluate_condition(Graph::from_edges(4, {Edge(0, 1), Edge(2, 3)}),
                                               3, 2);
    CHECK_FALSE(split.connected);

    CHECK_THROWS_AS(evaluate_condition(complete(4), 2, 2), GraphError);
    CHECK_THROWS_AS(evaluate_condition(complete(4), 3, 0), GraphError);
}

TEST_CASE("floor arithmetic in the right-hand side") {
    // l=5, t=5: floor(5*4/3) = 6
    Graph g = path(9);
    ConditionReport r = evaluate_condition(g, 5, 5);
    CHECK(r.rhs == 9 - 6 - 1);
    // l=3, t=4: floor(3*3/2) = 4
    CHECK(evaluate_condition(g, 4, 3).rhs == 9 - 4 - 1);
}
