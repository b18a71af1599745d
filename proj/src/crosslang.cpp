#include "bionet/crosslang.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bionet/errors.hpp"
#include "bionet/metrics.hpp"
#include "bionet/parallel.hpp"

namespace bionet {

AlignedEdgeSet aligned_edge_set(const BiographicalNetwork& net) {
    AlignedEdgeSet set;
    set.lang = net.lang;
    set.edges.reserve(net.graph.edge_count());
    net.graph.for_each_edge([&](NodeId u, NodeId v) {
        set.edges.emplace_back(net.graph.label(u), net.graph.label(v));
    });
    std::sort(set.edges.begin(), set.edges.end());
    return set;
}

double jaccard(const AlignedEdgeSet& a, const AlignedEdgeSet& b) {
    std::size_t inter = 0, i = 0, j = 0;
    while (i < a.edges.size() && j < b.edges.size()) {
        if (a.edges[i] < b.edges[j])
            ++i;
        else if (b.edges[j] < a.edges[i])
            ++j;
        else {
            ++inter;
            ++i;
            ++j;
        }
    }
    const std::size_t uni = a.edges.size() + b.edges.size() - inter;
    if (uni == 0) return 0.0;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

SimilarityMatrix similarity_matrix(const std::vector<AlignedEdgeSet>& sets) {
    if (sets.size() < 2) throw UsageError("similarity matrix needs at least 2 languages");
    {
        std::set<std::string> seen;
        for (const auto& s : sets)
            if (!seen.insert(s.lang).second)
                throw DataError("duplicate language code '" + s.lang + "'");
    }
    const std::size_t L = sets.size();
    SimilarityMatrix m;
    m.langs.reserve(L);
    for (const auto& s : sets) m.langs.push_back(s.lang);
    m.values.assign(L, std::vector<double>(L, 1.0));

    // independent pairs, parallel over the upper triangle
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < L; ++i)
        for (std::size_t j = i + 1; j < L; ++j) pairs.emplace_back(i, j);
    parallel_blocks(pairs.size(), 1, [&](std::size_t lo, std::size_t hi, unsigned) {
        for (std::size_t p = lo; p < hi; ++p) {
            const auto [i, j] = pairs[p];
            const double v = jaccard(sets[i], sets[j]);
            m.values[i][j] = v;
            m.values[j][i] = v;
        }
    });
    return m;
}

LanguageSimilarityNetwork top_k_similarity_network(const SimilarityMatrix& m, std::size_t k) {
    const std::size_t L = m.langs.size();
    if (k < 1 || k > L - 1) throw UsageError("top-k similarity network needs 1 <= k <= L-1");
    LanguageSimilarityNetwork net;
    net.langs = m.langs;
    net.top.resize(L);
    for (std::size_t i = 0; i < L; ++i) {
        std::vector<std::uint32_t> others;
        for (std::size_t j = 0; j < L; ++j)
            if (j != i) others.push_back(static_cast<std::uint32_t>(j));
        std::sort(others.begin(), others.end(), [&](std::uint32_t a, std::uint32_t b) {
            if (m.values[i][a] != m.values[i][b]) return m.values[i][a] > m.values[i][b];
            return m.langs[a] < m.langs[b];
        });
        others.resize(k);
        for (std::uint32_t j : others) net.top[i].emplace_back(j, m.values[i][j]);
    }
    return net;
}

WeightedGraph similarity_projection(const LanguageSimilarityNetwork& net) {
    const std::size_t L = net.langs.size();
    // weight of {i,j} = max of the two directed weights; both directions of a
    // mutual top-k pair carry the same Jaccard value anyway
    std::map<std::pair<std::uint32_t, std::uint32_t>, double> edges;
    for (std::uint32_t i = 0; i < L; ++i)
        for (const auto& [j, w] : net.top[i]) {
            auto key = std::minmax(i, j);
            auto [it, inserted] = edges.emplace(std::make_pair(key.first, key.second), w);
            if (!inserted) it->second = std::max(it->second, w);
        }
    WeightedGraph g(L);
    for (const auto& [key, w] : edges) g.add_edge(key.first, key.second, w);
    return g;
}

ConsensusNetwork consensus_network(const std::vector<AlignedEdgeSet>& sets, std::size_t k) {
    if (k < 1 || k > sets.size())
        throw UsageError("consensus threshold must lie in [1, language count]");

    std::map<std::pair<std::string, std::string>, std::uint32_t> support;
    for (const auto& s : sets)
        for (const auto& e : s.edges) ++support[e];

    std::vector<std::pair<std::string, std::string>> kept;
    for (const auto& [e, cnt] : support)
        if (cnt >= k) kept.push_back(e);

    ConsensusNetwork c;
    c.threshold = k;
    c.graph = DirectedGraph::from_edges(kept);
    c.support.reserve(c.graph.edge_count());
    c.graph.for_each_edge([&](NodeId u, NodeId v) {
        c.support.push_back(support.at({c.graph.label(u), c.graph.label(v)}));
    });
    return c;
}

std::vector<Component> component_report(const ConsensusNetwork& c) {
    const DirectedGraph& g = c.graph;
    const std::size_t n = g.node_count();
    std::vector<std::uint32_t> comp(n, UINT32_MAX);
    std::uint32_t ncomp = 0;
    std::vector<NodeId> queue;
    for (NodeId s = 0; s < n; ++s) {
        if (comp[s] != UINT32_MAX) continue;
        comp[s] = ncomp;
        queue.assign(1, s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const NodeId u = queue[head];
            auto visit = [&](NodeId v) {
                if (comp[v] == UINT32_MAX) {
                    comp[v] = ncomp;
                    queue.push_back(v);
                }
            };
            for (NodeId v : g.out_neighbors(u)) visit(v);
            for (NodeId v : g.in_neighbors(u)) visit(v);
        }
        ++ncomp;
    }

    std::vector<Component> out(ncomp);
    for (NodeId v = 0; v < n; ++v) out[comp[v]].entities.push_back(g.label(v));
    // labels are in NodeId (= lexicographic) order already; component ids are
    // in smallest-member order, so a stable sort by size keeps the tie rule
    std::stable_sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
        return a.entities.size() > b.entities.size();
    });
    return out;
}

}  // namespace bionet
