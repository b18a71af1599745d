#ifndef BIONET_LOUVAIN_HPP_
#define BIONET_LOUVAIN_HPP_

#include <cstdint>
#include <vector>

namespace bionet {

/// Small weighted undirected graph for community detection. Stored as
/// adjacency lists; add_edge inserts both directions. Self-loops carry
/// their full weight once (used by the aggregation phase).
class WeightedGraph {
public:
    explicit WeightedGraph(std::size_t n) : adj_(n) {}

    void add_edge(std::uint32_t u, std::uint32_t v, double w);

    std::size_t node_count() const { return adj_.size(); }
    const std::vector<std::pair<std::uint32_t, double>>& neighbors(std::uint32_t v) const {
        return adj_[v];
    }
    /// Total edge weight m (self-loops counted once).
    double total_weight() const;
    /// Weighted degree; self-loops count twice.
    double strength(std::uint32_t v) const;

private:
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adj_;
};

struct Partition {
    std::vector<std::uint32_t> community;  // dense ids, 0-based
    double modularity = 0.0;
    std::vector<double> pass_modularity;   // after each local-moving pass
};

double modularity(const WeightedGraph& g, const std::vector<std::uint32_t>& community,
                  double resolution = 1.0);

/// Two-phase Louvain (local moving + aggregation). Node sweep order is the
/// identity permuted by `seed`; equal-gain moves pick the lowest community
/// id. Community ids in the result are densified in order of their smallest
/// member node.
Partition louvain(const WeightedGraph& g, double resolution = 1.0, std::uint64_t seed = 0);

}  // namespace bionet

#endif  // BIONET_LOUVAIN_HPP_
