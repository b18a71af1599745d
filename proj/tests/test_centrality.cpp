#include <numeric>

#include "bionet/centrality.hpp"
#include "bionet/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bionet;

TEST_CASE("degree scores") {
    auto g = DirectedGraph::from_edges({{"a", "b"}, {"c", "b"}});
    auto in = degree_scores(g, Measure::InDegree);
    CHECK(in.values[g.find_node("b")] == 2.0);
    CHECK(in.values[g.find_node("a")] == 0.0);
    CHECK(degree_scores(DirectedGraph{}, Measure::InDegree).values.empty());
}

TEST_CASE("degree sums both equal K") {
    auto g = oracles::random_graph(70, 420, 9);
    auto in = degree_scores(g, Measure::InDegree);
    auto out = degree_scores(g, Measure::OutDegree);
    CHECK(std::accumulate(in.values.begin(), in.values.end(), 0.0) ==
          static_cast<double>(g.edge_count()));
    CHECK(std::accumulate(out.values.begin(), out.values.end(), 0.0) ==
          static_cast<double>(g.edge_count()));
    for (NodeId v = 0; v < g.node_count(); ++v)
        CHECK(in.values[v] == static_cast<double>(g.in_neighbors(v).size()));
}

TEST_CASE("betweenness of a directed path") {
    auto g = DirectedGraph::from_edges({{"a", "b"}, {"b", "c"}});
    auto bc = betweenness(g);
    CHECK(bc.values[g.find_node("b")] == doctest::Approx(1.0));
    CHECK(bc.values[g.find_node("a")] == doctest::Approx(0.0));
    CHECK(bc.values[g.find_node("c")] == doctest::Approx(0.0));
}

TEST_CASE("directed 4-cycle is betweenness-symmetric") {
    auto g = DirectedGraph::from_edges({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
    auto bc = betweenness(g);
    for (NodeId v = 1; v < 4; ++v) CHECK(bc.values[v] == doctest::Approx(bc.values[0]));
}

TEST_CASE("betweenness matches the pair-counting oracle") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = oracles::random_graph(30, 90 + 15 * seed, 100 + seed);
        auto bc = betweenness(g);
        auto oracle = oracles::betweenness_pair_counting(g);
        for (NodeId v = 0; v < g.node_count(); ++v)
            CHECK(bc.values[v] == doctest::Approx(oracle[v]).epsilon(1e-9));
    }
}

TEST_CASE("pair counting and literal path enumeration agree on tiny graphs") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto g = oracles::random_graph(10, 25, 200 + seed);
        auto a = oracles::betweenness_pair_counting(g);
        auto b = oracles::betweenness_path_enumeration(g);
        for (NodeId v = 0; v < g.node_count(); ++v)
            CHECK(a[v] == doctest::Approx(b[v]).epsilon(1e-12));
    }
}

TEST_CASE("sampled betweenness validates its sample size") {
    auto g = oracles::random_graph(20, 60, 3);
    CHECK_THROWS_AS(betweenness(g, {true, g.node_count() + 1, 0}), UsageError);
    CHECK_THROWS_AS(betweenness(g, {true, 0, 0}), UsageError);
}

TEST_CASE("whole-population sampled betweenness equals exact") {
    auto g = oracles::random_graph(25, 100, 4);
    auto exact = betweenness(g);
    auto sampled = betweenness(g, {true, g.node_count(), 17});
    for (NodeId v = 0; v < g.node_count(); ++v)
        CHECK(sampled.values[v] == doctest::Approx(exact.values[v]).epsilon(1e-12));
}

TEST_CASE("betweenness is deterministic under a fixed seed") {
    auto g = oracles::random_graph(40, 200, 6);
    auto a = betweenness(g, {true, 10, 42});
    auto b = betweenness(g, {true, 10, 42});
    CHECK(a.values == b.values);  // bitwise
}

TEST_CASE("pagerank on symmetric graphs") {
    SUBCASE("reciprocal 3-cycle") {
        auto g = DirectedGraph::from_edges(
            {{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "b"}, {"a", "c"}, {"c", "a"}});
        auto pr = pagerank(g);
        for (double v : pr.values) CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    }
    SUBCASE("two isolated reciprocal pairs") {
        auto g = DirectedGraph::from_edges({{"a", "b"}, {"b", "a"}, {"c", "d"}, {"d", "c"}});
        auto pr = pagerank(g);
        for (double v : pr.values) CHECK(v == doctest::Approx(0.25).epsilon(1e-9));
    }
}

TEST_CASE("pagerank mass is conserved with dangling nodes") {
    auto g = DirectedGraph::from_edges({{"a", "b"}, {"c", "b"}, {"a", "c"}});  // b dangles
    auto pr = pagerank(g);
    CHECK(std::accumulate(pr.values.begin(), pr.values.end(), 0.0) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(pr.iterations > 0);
    CHECK(pr.residual < 1e-10);
}

TEST_CASE("pagerank matches the dense eigenvector oracle") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto g = oracles::random_graph(40, 150, 300 + seed);
        auto pr = pagerank(g);
        auto oracle = oracles::pagerank_dense(g, 0.85);
        for (NodeId v = 0; v < g.node_count(); ++v)
            CHECK(pr.values[v] == doctest::Approx(oracle[v]).epsilon(1e-7));
    }
}

TEST_CASE("pagerank rejects bad damping and reports non-convergence") {
    auto g = oracles::random_graph(30, 100, 12);
    CHECK_THROWS_AS(pagerank(g, {1.5, 1e-10, 100}), UsageError);
    try {
        pagerank(g, {0.85, 1e-14, 2});
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.last_iterate.size() == g.node_count());
        CHECK(e.residual > 0.0);
    }
}

TEST_CASE("ranking table on a single edge") {
    auto g = DirectedGraph::from_edges({{"a", "b"}});
    auto rows = ranking_table(g, Measure::InDegree, 2);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].entity == "b");
    CHECK(rows[1].entity == "a");
    CHECK(rows[0].in_degree == 1);
    CHECK(rows[0].in_degree_rank == 1);
    CHECK(rows[1].out_degree_rank == 1);
}

TEST_CASE("ranking table validates top_n") {
    auto g = DirectedGraph::from_edges({{"a", "b"}});
    CHECK_THROWS_AS(ranking_table(g, Measure::InDegree, 0), UsageError);
}

TEST_CASE("ranks depend only on score order") {
    auto g = oracles::random_graph(50, 300, 14);
    auto scores = betweenness(g).values;
    auto r1 = rank_positions(g, scores);
    for (double& v : scores) v *= 1000.0;  // uniform scaling
    auto r2 = rank_positions(g, scores);
    CHECK(r1 == r2);
}

TEST_CASE("ranking table is byte-deterministic") {
    auto g = oracles::random_graph(60, 350, 15);
    auto a = ranking_table(g, Measure::PageRank, 10, {true, 20, 9});
    auto b = ranking_table(g, Measure::PageRank, 10, {true, 20, 9});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].entity == b[i].entity);
        CHECK(a[i].pagerank == b[i].pagerank);
        CHECK(a[i].betweenness_rank == b[i].betweenness_rank);
    }
}
