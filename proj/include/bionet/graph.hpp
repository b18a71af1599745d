#ifndef BIONET_GRAPH_HPP_
#define BIONET_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bionet {

using NodeId = std::uint32_t;

/// Immutable directed graph in offset-array (CSR) form, with both forward
/// and reverse adjacency. Node labels are the canonical entity names;
/// NodeId i is the i-th label in lexicographic order, so two builds from
/// the same edge set produce identical graphs regardless of input order.
class DirectedGraph {
public:
    DirectedGraph() = default;

    /// Builds a graph from labeled edges. Self-loops are dropped, duplicate
    /// edges collapsed, and entities left without any surviving edge are
    /// excluded. An empty (or fully filtered) input yields an empty graph.
    static DirectedGraph from_edges(std::vector<std::pair<std::string, std::string>> edges);

    /// Builds from integer edges over a fixed label set. `labels` must be
    /// sorted and unique; all endpoints must be < labels.size(). Applies the
    /// same self-loop/duplicate/isolate filtering as from_edges.
    static DirectedGraph from_node_edges(std::vector<std::string> labels,
                                         std::vector<std::pair<NodeId, NodeId>> edges);

    std::size_t node_count() const { return labels_.size(); }
    std::size_t edge_count() const { return out_adj_.size(); }

    std::span<const NodeId> out_neighbors(NodeId v) const {
        return {out_adj_.data() + out_off_[v], out_adj_.data() + out_off_[v + 1]};
    }
    std::span<const NodeId> in_neighbors(NodeId v) const {
        return {in_adj_.data() + in_off_[v], in_adj_.data() + in_off_[v + 1]};
    }
    std::size_t out_degree(NodeId v) const { return out_off_[v + 1] - out_off_[v]; }
    std::size_t in_degree(NodeId v) const { return in_off_[v + 1] - in_off_[v]; }

    const std::string& label(NodeId v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Lexicographic lookup; returns node_count() when absent.
    NodeId find_node(std::string_view label) const;

    bool has_edge(NodeId u, NodeId v) const;

    /// Subgraph on `keep` (a node_count-sized mask), nodes relabeled densely.
    /// Label order is preserved, so NodeIds stay lexicographic.
    DirectedGraph induced(const std::vector<bool>& keep) const;

    /// Visits every edge (u,v) in (u asc, v asc) order.
    template <typename F>
    void for_each_edge(F&& f) const {
        for (NodeId u = 0; u < labels_.size(); ++u)
            for (NodeId v : out_neighbors(u)) f(u, v);
    }

private:
    void build_csr(std::vector<std::pair<NodeId, NodeId>>& edges);

    std::vector<std::uint64_t> out_off_{0};
    std::vector<std::uint64_t> in_off_{0};
    std::vector<NodeId> out_adj_;
    std::vector<NodeId> in_adj_;
    std::vector<std::string> labels_;
};

/// Symmetric projection of a DirectedGraph: one undirected edge {u,v}
/// wherever at least one of (u,v), (v,u) exists. Same NodeIds and labels
/// as the source graph.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    static UndirectedGraph projection(const DirectedGraph& g);

    std::size_t node_count() const { return off_.size() - 1; }
    /// Number of unordered edges.
    std::size_t edge_count() const { return adj_.size() / 2; }
    std::span<const NodeId> neighbors(NodeId v) const {
        return {adj_.data() + off_[v], adj_.data() + off_[v + 1]};
    }
    std::size_t degree(NodeId v) const { return off_[v + 1] - off_[v]; }
    bool has_edge(NodeId u, NodeId v) const;

private:
    std::vector<std::uint64_t> off_{0};
    std::vector<NodeId> adj_;
};

}  // namespace bionet

#endif  // BIONET_GRAPH_HPP_
