#ifndef BIONET_METRICS_HPP_
#define BIONET_METRICS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bionet/graph.hpp"
#include "bionet/ingest.hpp"

namespace bionet {

enum class PathMode { Exact, Sampled };

struct StatsConfig {
    // Exact path statistics below this GC size, sampled above.
    std::size_t exact_threshold = 50000;
    std::size_t sample_size = 10000;
    std::uint64_t seed = 0;
};

struct NetworkStats {
    std::uint64_t n_nodes = 0;
    std::uint64_t n_edges = 0;
    double avg_clustering = 0.0;
    double gc_fraction = 0.0;
    double avg_path_length = 0.0;
    double reciprocity = 0.0;
    std::uint32_t diameter = 0;
    PathMode apl_mode = PathMode::Exact;
    std::uint64_t apl_sample_size = 0;  // 0 in exact mode
};

struct DegreeHistogram {
    enum class Direction { In, Out } direction;
    std::map<std::uint64_t, std::uint64_t> counts;  // degree -> node count
};

/// Mean local Watts-Strogatz coefficient over the undirected projection;
/// nodes of undirected degree < 2 contribute 0. Empty graph -> 0.
double clustering_coefficient(const DirectedGraph& g);
double clustering_coefficient(const UndirectedGraph& ug, std::size_t n_nodes);

/// Fraction of directed edges whose reverse also exists; 0 when edgeless.
double reciprocity(const DirectedGraph& g);

struct GiantComponent {
    std::vector<NodeId> members;  // ascending
    double fraction = 0.0;
};

/// Largest weakly connected component; ties broken by smallest member NodeId.
GiantComponent giant_component(const DirectedGraph& g);

struct PathStats {
    double mean = 0.0;       // over ordered pairs (u != v)
    std::uint32_t max = 0;   // lower bound of the diameter in sampled mode
    PathMode mode = PathMode::Exact;
    std::uint64_t sample_size = 0;
};

/// BFS distance statistics over a connected undirected graph. Exact mode
/// runs BFS from every node; sampled mode from `sample_size` distinct
/// sources chosen uniformly under `seed`. Throws DataError on graphs with
/// fewer than two nodes. Sampling the whole population reproduces the
/// exact result (all sums are integer).
PathStats path_statistics(const UndirectedGraph& gc, PathMode mode,
                          std::size_t sample_size = 0, std::uint64_t seed = 0);

double average_path_length(const UndirectedGraph& gc, PathMode mode,
                           std::size_t sample_size = 0, std::uint64_t seed = 0);
std::uint32_t diameter(const UndirectedGraph& gc, PathMode mode,
                       std::size_t sample_size = 0, std::uint64_t seed = 0);

std::pair<DegreeHistogram, DegreeHistogram> degree_distributions(const DirectedGraph& g);

/// The full statistics row. Path statistics run on the undirected view of
/// the GC-induced subgraph; GCs with fewer than two nodes report zeros.
NetworkStats network_stats(const BiographicalNetwork& net, const StatsConfig& config);

}  // namespace bionet

#endif  // BIONET_METRICS_HPP_
