#include <map>
#include <random>
#include <set>

#include "bionet/graph.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bionet;

namespace {

using Edge = std::pair<std::string, std::string>;

// naive set-based builder used as the independent oracle
struct NaiveGraph {
    std::set<std::string> nodes;
    std::set<Edge> edges;
};

NaiveGraph naive_build(const std::vector<Edge>& input) {
    NaiveGraph g;
    for (const auto& e : input) {
        if (e.first == e.second) continue;
        g.edges.insert(e);
        g.nodes.insert(e.first);
        g.nodes.insert(e.second);
    }
    return g;
}

}  // namespace

TEST_CASE("build_graph collapses duplicates") {
    auto g = DirectedGraph::from_edges({{"A", "B"}, {"B", "C"}, {"A", "B"}});
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.label(0) == "A");
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
}

TEST_CASE("build_graph drops self-loops and isolates") {
    auto g = DirectedGraph::from_edges({{"A", "A"}});
    CHECK(g.node_count() == 0);
    CHECK(g.edge_count() == 0);
}

TEST_CASE("build_graph empty input") {
    auto g = DirectedGraph::from_edges({});
    CHECK(g.node_count() == 0);
}

TEST_CASE("build_graph matches the naive set builder") {
    auto input = oracles::random_edge_list(500, 10000, 42);
    auto g = DirectedGraph::from_edges(input);
    auto naive = naive_build(input);
    CHECK(g.node_count() == naive.nodes.size());
    CHECK(g.edge_count() == naive.edges.size());
    g.for_each_edge([&](NodeId u, NodeId v) {
        CHECK(naive.edges.count({g.label(u), g.label(v)}) == 1);
    });
}

TEST_CASE("degree sums equal edge count") {
    auto g = oracles::random_graph(80, 400, 7);
    std::size_t out_sum = 0, in_sum = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        out_sum += g.out_degree(v);
        in_sum += g.in_degree(v);
    }
    CHECK(out_sum == g.edge_count());
    CHECK(in_sum == g.edge_count());
}

TEST_CASE("build_graph is input-order independent") {
    auto input = oracles::random_edge_list(60, 300, 11);
    auto g1 = DirectedGraph::from_edges(input);
    std::mt19937_64 rng(3);
    std::shuffle(input.begin(), input.end(), rng);
    auto g2 = DirectedGraph::from_edges(input);
    REQUIRE(g1.node_count() == g2.node_count());
    REQUIRE(g1.edge_count() == g2.edge_count());
    for (NodeId v = 0; v < g1.node_count(); ++v) {
        CHECK(g1.label(v) == g2.label(v));
        auto a = g1.out_neighbors(v), b = g2.out_neighbors(v);
        CHECK(std::vector<NodeId>(a.begin(), a.end()) == std::vector<NodeId>(b.begin(), b.end()));
    }
}

TEST_CASE("adjacency lists are sorted") {
    auto g = oracles::random_graph(50, 600, 5);
    for (NodeId v = 0; v < g.node_count(); ++v) {
        auto out = g.out_neighbors(v);
        CHECK(std::is_sorted(out.begin(), out.end()));
        auto in = g.in_neighbors(v);
        CHECK(std::is_sorted(in.begin(), in.end()));
    }
}

TEST_CASE("undirected_view merges reciprocal edges") {
    auto g = DirectedGraph::from_edges({{"a", "b"}, {"b", "a"}});
    auto ug = UndirectedGraph::projection(g);
    CHECK(ug.edge_count() == 1);
    CHECK(ug.has_edge(0, 1));
}

TEST_CASE("undirected_view keeps both directions' pairs") {
    auto g = DirectedGraph::from_edges({{"a", "b"}, {"b", "c"}});
    auto ug = UndirectedGraph::projection(g);
    CHECK(ug.edge_count() == 2);
}

TEST_CASE("undirected_view matches all-pairs brute force") {
    auto g = oracles::random_graph(200, 900, 13);
    auto ug = UndirectedGraph::projection(g);
    std::size_t expected = 0;
    for (NodeId u = 0; u < g.node_count(); ++u)
        for (NodeId v = u + 1; v < g.node_count(); ++v)
            if (g.has_edge(u, v) || g.has_edge(v, u)) ++expected;
    CHECK(ug.edge_count() == expected);
}

TEST_CASE("fully reciprocated graph halves in the undirected view") {
    auto g = DirectedGraph::from_edges({{"a", "b"}, {"b", "a"}, {"b", "c"}, {"c", "b"}});
    CHECK(UndirectedGraph::projection(g).edge_count() == g.edge_count() / 2);
}

TEST_CASE("induced subgraph: full mask is the identity") {
    auto g = oracles::random_graph(40, 200, 17);
    std::vector<bool> keep(g.node_count(), true);
    auto h = g.induced(keep);
    REQUIRE(h.node_count() == g.node_count());
    CHECK(h.edge_count() == g.edge_count());
    for (NodeId v = 0; v < g.node_count(); ++v) CHECK(h.label(v) == g.label(v));
}

TEST_CASE("induced subgraph: empty mask") {
    auto g = oracles::random_graph(10, 30, 19);
    std::vector<bool> keep(g.node_count(), false);
    CHECK(g.induced(keep).node_count() == 0);
}

TEST_CASE("induced subgraph matches brute-force edge filter") {
    auto g = oracles::random_graph(60, 400, 23);
    std::mt19937_64 rng(99);
    std::vector<bool> keep(g.node_count());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = rng() % 2 == 0;

    auto h = g.induced(keep);
    std::set<std::pair<std::string, std::string>> expected;
    g.for_each_edge([&](NodeId u, NodeId v) {
        if (keep[u] && keep[v]) expected.insert({g.label(u), g.label(v)});
    });
    std::set<std::pair<std::string, std::string>> actual;
    h.for_each_edge([&](NodeId u, NodeId v) { actual.insert({h.label(u), h.label(v)}); });
    CHECK(actual == expected);
    CHECK(h.node_count() == static_cast<std::size_t>(std::count(keep.begin(), keep.end(), true)));
}
