#ifndef BIONET_CENTRALITY_HPP_
#define BIONET_CENTRALITY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "bionet/graph.hpp"

namespace bionet {

enum class Measure { InDegree, OutDegree, Betweenness, PageRank };

struct BetweennessConfig {
    bool sampled = false;
    std::size_t sample_size = 0;
    std::uint64_t seed = 0;
};

struct PageRankConfig {
    double damping = 0.85;
    double tol = 1e-10;
    int max_iter = 200;
};

struct CentralityScores {
    Measure measure;
    std::vector<double> values;  // indexed by NodeId
    // pagerank
    int iterations = 0;
    double residual = 0.0;
    std::vector<double> iteration_mass;  // total score mass after each iteration
    // betweenness
    bool sampled = false;
    std::uint64_t sample_size = 0;
    std::uint64_t seed = 0;
};

CentralityScores degree_scores(const DirectedGraph& g, Measure direction);

/// Brandes betweenness over directed shortest paths, unnormalized. Sampled
/// mode accumulates from `sample_size` uniform sources (seeded, without
/// replacement) and rescales by N / sample_size. Deterministic for fixed
/// seed regardless of worker count: per-source contributions merge in fixed
/// source-block order.
CentralityScores betweenness(const DirectedGraph& g, const BetweennessConfig& cfg = {});

/// Power iteration with uniform teleport and uniform redistribution of
/// dangling mass; stops when the L1 residual drops below tol. Throws
/// ConvergenceError (carrying the last iterate) past max_iter.
CentralityScores pagerank(const DirectedGraph& g, const PageRankConfig& cfg = {});

struct RankingRow {
    std::string entity;
    std::uint64_t in_degree = 0;
    std::uint64_t out_degree = 0;
    std::size_t in_degree_rank = 0;
    std::size_t out_degree_rank = 0;
    std::size_t betweenness_rank = 0;
    double pagerank = 0.0;
    std::size_t pagerank_rank = 0;
};

/// Top-n rows ordered by `primary` descending, ties by lexicographic
/// entity name; ranks are 1-based positions under the same order.
std::vector<RankingRow> ranking_table(const DirectedGraph& g, Measure primary, std::size_t top_n,
                                      const BetweennessConfig& bc = {},
                                      const PageRankConfig& pc = {});

/// 1-based rank of every node under (score desc, label asc).
std::vector<std::size_t> rank_positions(const DirectedGraph& g, const std::vector<double>& scores);

}  // namespace bionet

#endif  // BIONET_CENTRALITY_HPP_
