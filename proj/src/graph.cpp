#include "bionet/graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace bionet {

DirectedGraph DirectedGraph::from_edges(std::vector<std::pair<std::string, std::string>> edges) {
    // Drop self-loops before deciding which entities are isolated.
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });

    std::vector<std::string> labels;
    labels.reserve(edges.size() * 2);
    for (const auto& [s, t] : edges) {
        labels.push_back(s);
        labels.push_back(t);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    labels.shrink_to_fit();

    auto id_of = [&](const std::string& s) {
        return static_cast<NodeId>(
            std::lower_bound(labels.begin(), labels.end(), s) - labels.begin());
    };

    std::vector<std::pair<NodeId, NodeId>> int_edges;
    int_edges.reserve(edges.size());
    for (const auto& [s, t] : edges) int_edges.emplace_back(id_of(s), id_of(t));

    DirectedGraph g;
    g.labels_ = std::move(labels);
    g.build_csr(int_edges);
    return g;
}

DirectedGraph DirectedGraph::from_node_edges(std::vector<std::string> labels,
                                             std::vector<std::pair<NodeId, NodeId>> edges) {
    if (!std::is_sorted(labels.begin(), labels.end()) ||
        std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw std::invalid_argument("from_node_edges: labels must be sorted and unique");
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });

    // Restrict to entities incident to a surviving edge.
    std::vector<bool> used(labels.size(), false);
    for (const auto& [u, v] : edges) {
        if (u >= labels.size() || v >= labels.size())
            throw std::invalid_argument("from_node_edges: endpoint out of range");
        used[u] = used[v] = true;
    }
    std::vector<NodeId> remap(labels.size());
    std::vector<std::string> kept;
    for (NodeId v = 0; v < labels.size(); ++v) {
        remap[v] = static_cast<NodeId>(kept.size());
        if (used[v]) kept.push_back(std::move(labels[v]));
    }
    for (auto& [u, v] : edges) {
        u = remap[u];
        v = remap[v];
    }

    DirectedGraph g;
    g.labels_ = std::move(kept);
    g.build_csr(edges);
    return g;
}

void DirectedGraph::build_csr(std::vector<std::pair<NodeId, NodeId>>& edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    const std::size_t n = labels_.size();
    out_off_.assign(n + 1, 0);
    in_off_.assign(n + 1, 0);
    for (const auto& [u, v] : edges) {
        ++out_off_[u + 1];
        ++in_off_[v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) {
        out_off_[i + 1] += out_off_[i];
        in_off_[i + 1] += in_off_[i];
    }
    out_adj_.resize(edges.size());
    in_adj_.resize(edges.size());
    std::vector<std::uint64_t> pos = in_off_;
    std::size_t k = 0;
    for (const auto& [u, v] : edges) {
        out_adj_[k++] = v;  // edges sorted by (u,v): out lists come out sorted
        in_adj_[pos[v]++] = u;
    }
    // in lists are filled in u-ascending order per target, already sorted
}

NodeId DirectedGraph::find_node(std::string_view label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return static_cast<NodeId>(labels_.size());
    return static_cast<NodeId>(it - labels_.begin());
}

bool DirectedGraph::has_edge(NodeId u, NodeId v) const {
    auto nb = out_neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

DirectedGraph DirectedGraph::induced(const std::vector<bool>& keep) const {
    assert(keep.size() == labels_.size());
    std::vector<NodeId> remap(labels_.size());
    std::vector<std::string> kept_labels;
    for (NodeId v = 0; v < labels_.size(); ++v) {
        remap[v] = static_cast<NodeId>(kept_labels.size());
        if (keep[v]) kept_labels.push_back(labels_[v]);
    }
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < labels_.size(); ++u) {
        if (!keep[u]) continue;
        for (NodeId v : out_neighbors(u))
            if (keep[v]) edges.emplace_back(remap[u], remap[v]);
    }
    // Masked-in nodes stay even if they end up isolated: the mask is the
    // caller's contract (e.g. the giant component member set).
    DirectedGraph g;
    g.labels_ = std::move(kept_labels);
    g.build_csr(edges);
    return g;
}

UndirectedGraph UndirectedGraph::projection(const DirectedGraph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::pair<NodeId, NodeId>> pairs;
    pairs.reserve(g.edge_count() * 2);
    g.for_each_edge([&](NodeId u, NodeId v) {
        pairs.emplace_back(u, v);
        pairs.emplace_back(v, u);
    });
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

    UndirectedGraph ug;
    ug.off_.assign(n + 1, 0);
    for (const auto& [u, v] : pairs) ++ug.off_[u + 1];
    for (std::size_t i = 0; i < n; ++i) ug.off_[i + 1] += ug.off_[i];
    ug.adj_.resize(pairs.size());
    std::size_t k = 0;
    for (const auto& [u, v] : pairs) ug.adj_[k++] = v;
    return ug;
}

bool UndirectedGraph::has_edge(NodeId u, NodeId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

}  // namespace bionet
