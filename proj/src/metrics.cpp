#include "bionet/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>

#include "bionet/errors.hpp"
#include "bionet/parallel.hpp"

namespace bionet {

namespace {

std::size_t sorted_intersection_size(std::span<const NodeId> a, std::span<const NodeId> b) {
    std::size_t i = 0, j = 0, count = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (a[i] > b[j])
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

}  // namespace

double clustering_coefficient(const UndirectedGraph& ug, std::size_t n_nodes) {
    if (n_nodes == 0) return 0.0;
    double sum = 0.0;  // accumulated in NodeId order
    for (NodeId v = 0; v < n_nodes; ++v) {
        const auto nb = ug.neighbors(v);
        const std::size_t d = nb.size();
        if (d < 2) continue;
        std::size_t links2 = 0;  // twice the edges among neighbors
        for (NodeId u : nb) links2 += sorted_intersection_size(nb, ug.neighbors(u));
        sum += static_cast<double>(links2) /
               (static_cast<double>(d) * static_cast<double>(d - 1));
    }
    return sum / static_cast<double>(n_nodes);
}

double clustering_coefficient(const DirectedGraph& g) {
    return clustering_coefficient(UndirectedGraph::projection(g), g.node_count());
}

double reciprocity(const DirectedGraph& g) {
    if (g.edge_count() == 0) return 0.0;
    std::uint64_t reciprocated = 0;
    g.for_each_edge([&](NodeId u, NodeId v) {
        if (g.has_edge(v, u)) ++reciprocated;
    });
    return static_cast<double>(reciprocated) / static_cast<double>(g.edge_count());
}

GiantComponent giant_component(const DirectedGraph& g) {
    const std::size_t n = g.node_count();
    GiantComponent gc;
    if (n == 0) return gc;

    // union-find with path halving
    std::vector<NodeId> parent(n);
    std::iota(parent.begin(), parent.end(), NodeId{0});
    auto find = [&](NodeId x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    g.for_each_edge([&](NodeId u, NodeId v) {
        NodeId ru = find(u), rv = find(v);
        if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
    });

    std::vector<std::uint64_t> size(n, 0);
    for (NodeId v = 0; v < n; ++v) ++size[find(v)];
    // first maximum wins: roots are component minima, so ties resolve to the
    // component with the smallest NodeId
    NodeId best = 0;
    for (NodeId r = 1; r < n; ++r)
        if (size[r] > size[best]) best = r;

    for (NodeId v = 0; v < n; ++v)
        if (find(v) == best) gc.members.push_back(v);
    gc.fraction = static_cast<double>(gc.members.size()) / static_cast<double>(n);
    return gc;
}

PathStats path_statistics(const UndirectedGraph& gc, PathMode mode, std::size_t sample_size,
                          std::uint64_t seed) {
    const std::size_t n = gc.node_count();
    if (n < 2) throw DataError("path statistics undefined on graphs with fewer than 2 nodes");

    std::vector<NodeId> sources;
    if (mode == PathMode::Exact) {
        sources.resize(n);
        std::iota(sources.begin(), sources.end(), NodeId{0});
    } else {
        if (sample_size < 1) throw UsageError("sampled path statistics need sample_size >= 1");
        if (sample_size > n) sample_size = n;
        // partial Fisher-Yates: first sample_size entries of a seeded shuffle
        std::vector<NodeId> pool(n);
        std::iota(pool.begin(), pool.end(), NodeId{0});
        std::mt19937_64 rng(seed);
        for (std::size_t i = 0; i < sample_size; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, n - 1);
            std::swap(pool[i], pool[pick(rng)]);
        }
        pool.resize(sample_size);
        sources = std::move(pool);
    }

    // connectivity check: one BFS up front, workers then assume full reach
    {
        std::vector<bool> seen(n, false);
        std::vector<NodeId> queue{0};
        seen[0] = true;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (NodeId v : gc.neighbors(queue[head]))
                if (!seen[v]) {
                    seen[v] = true;
                    queue.push_back(v);
                }
        if (queue.size() != n) throw DataError("path statistics require a connected graph");
    }

    // Integer (sum, max) per source row, merged associatively: result is
    // independent of worker count and merge order.
    std::atomic<std::uint64_t> total{0};
    std::atomic<std::uint32_t> maximum{0};
    const unsigned workers = worker_count();
    std::vector<std::vector<std::uint32_t>> dist_buf(workers);
    std::vector<std::vector<NodeId>> queue_buf(workers);

    parallel_blocks(sources.size(), 64, [&](std::size_t lo, std::size_t hi, unsigned w) {
        auto& dist = dist_buf[w];
        auto& queue = queue_buf[w];
        std::uint64_t local_sum = 0;
        std::uint32_t local_max = 0;
        for (std::size_t i = lo; i < hi; ++i) {
            const NodeId s = sources[i];
            dist.assign(n, UINT32_MAX);
            queue.clear();
            dist[s] = 0;
            queue.push_back(s);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const NodeId u = queue[head];
                const std::uint32_t du = dist[u];
                for (NodeId v : gc.neighbors(u)) {
                    if (dist[v] != UINT32_MAX) continue;
                    dist[v] = du + 1;
                    queue.push_back(v);
                }
            }
            std::uint64_t row = 0;
            for (NodeId v : queue) row += dist[v];
            local_sum += row;
            local_max = std::max(local_max, dist[queue.back()]);
        }
        total.fetch_add(local_sum, std::memory_order_relaxed);
        std::uint32_t cur = maximum.load(std::memory_order_relaxed);
        while (cur < local_max &&
               !maximum.compare_exchange_weak(cur, local_max, std::memory_order_relaxed)) {
        }
    }, workers);

    PathStats ps;
    ps.mode = mode;
    ps.sample_size = mode == PathMode::Sampled ? sources.size() : 0;
    ps.max = maximum.load();
    ps.mean = static_cast<double>(total.load()) /
              (static_cast<double>(sources.size()) * static_cast<double>(n - 1));
    return ps;
}

double average_path_length(const UndirectedGraph& gc, PathMode mode, std::size_t sample_size,
                           std::uint64_t seed) {
    return path_statistics(gc, mode, sample_size, seed).mean;
}

std::uint32_t diameter(const UndirectedGraph& gc, PathMode mode, std::size_t sample_size,
                       std::uint64_t seed) {
    return path_statistics(gc, mode, sample_size, seed).max;
}

std::pair<DegreeHistogram, DegreeHistogram> degree_distributions(const DirectedGraph& g) {
    DegreeHistogram in{DegreeHistogram::Direction::In, {}};
    DegreeHistogram out{DegreeHistogram::Direction::Out, {}};
    for (NodeId v = 0; v < g.node_count(); ++v) {
        ++in.counts[g.in_degree(v)];
        ++out.counts[g.out_degree(v)];
    }
    return {std::move(in), std::move(out)};
}

NetworkStats network_stats(const BiographicalNetwork& net, const StatsConfig& config) {
    const DirectedGraph& g = net.graph;
    NetworkStats stats;
    stats.n_nodes = g.node_count();
    stats.n_edges = g.edge_count();
    stats.avg_clustering = clustering_coefficient(g);
    stats.reciprocity = reciprocity(g);

    GiantComponent gc = giant_component(g);
    stats.gc_fraction = gc.fraction;

    if (gc.members.size() >= 2) {
        std::vector<bool> keep(g.node_count(), false);
        for (NodeId v : gc.members) keep[v] = true;
        DirectedGraph sub = g.induced(keep);
        UndirectedGraph ug = UndirectedGraph::projection(sub);
        const bool sampled = gc.members.size() > config.exact_threshold;
        PathStats ps = path_statistics(ug, sampled ? PathMode::Sampled : PathMode::Exact,
                                       config.sample_size, config.seed);
        stats.avg_path_length = ps.mean;
        stats.diameter = ps.max;
        stats.apl_mode = ps.mode;
        stats.apl_sample_size = ps.sample_size;
    }
    return stats;
}

}  // namespace bionet
