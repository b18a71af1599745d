#include "bionet/louvain.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace bionet {

void WeightedGraph::add_edge(std::uint32_t u, std::uint32_t v, double w) {
    if (w < 0.0) throw std::invalid_argument("negative edge weight");
    if (u >= adj_.size() || v >= adj_.size()) throw std::out_of_range("node out of range");
    adj_[u].emplace_back(v, w);
    if (u != v) adj_[v].emplace_back(u, w);
}

double WeightedGraph::total_weight() const {
    double m = 0.0;
    for (std::uint32_t v = 0; v < adj_.size(); ++v)
        for (const auto& [u, w] : adj_[v])
            if (u >= v) m += w;
    return m;
}

double WeightedGraph::strength(std::uint32_t v) const {
    double k = 0.0;
    for (const auto& [u, w] : adj_[v]) k += u == v ? 2.0 * w : w;
    return k;
}

double modularity(const WeightedGraph& g, const std::vector<std::uint32_t>& community,
                  double resolution) {
    const std::size_t n = g.node_count();
    double two_m = 0.0;
    for (std::uint32_t v = 0; v < n; ++v) two_m += g.strength(v);
    if (two_m == 0.0) return 0.0;

    std::uint32_t ncomm = 0;
    for (std::uint32_t c : community) ncomm = std::max(ncomm, c + 1);
    std::vector<double> tot(ncomm, 0.0);
    double intra = 0.0;
    for (std::uint32_t v = 0; v < n; ++v) {
        tot[community[v]] += g.strength(v);
        for (const auto& [u, w] : g.neighbors(v))
            if (community[u] == community[v]) intra += u == v ? 2.0 * w : w;
    }
    double q = intra / two_m;
    for (double t : tot) q -= resolution * (t / two_m) * (t / two_m);
    return q;
}

namespace {

struct LevelResult {
    std::vector<std::uint32_t> community;  // per level node, dense
    bool moved = false;
};

// One level of local moving. Sweeps nodes in `order` until a full pass makes
// no move; appends the level modularity after every pass.
LevelResult local_moving(const WeightedGraph& g, const std::vector<std::uint32_t>& order,
                         double resolution, std::vector<double>& pass_modularity) {
    const std::size_t n = g.node_count();
    std::vector<std::uint32_t> comm(n);
    std::iota(comm.begin(), comm.end(), 0u);
    std::vector<double> strength(n), tot(n);
    for (std::uint32_t v = 0; v < n; ++v) strength[v] = g.strength(v);
    tot = strength;
    double two_m = 0.0;
    for (double k : strength) two_m += k;

    LevelResult res;
    if (two_m == 0.0) {
        res.community = comm;
        return res;
    }

    std::vector<double> neigh_w(n, 0.0);
    std::vector<std::uint32_t> touched;
    bool any_move = true;
    int passes = 0;
    while (any_move && ++passes <= 1000) {
        any_move = false;
        for (std::uint32_t v : order) {
            // weights towards neighboring communities (self-loops excluded)
            touched.clear();
            for (const auto& [u, w] : g.neighbors(v)) {
                if (u == v) continue;
                const std::uint32_t c = comm[u];
                if (neigh_w[c] == 0.0 && std::find(touched.begin(), touched.end(), c) ==
                                             touched.end())
                    touched.push_back(c);
                neigh_w[c] += w;
            }
            const std::uint32_t old = comm[v];
            tot[old] -= strength[v];

            // staying put is the baseline; strictly better gain required
            double best_gain = neigh_w[old] - resolution * tot[old] * strength[v] / two_m;
            std::uint32_t best = old;
            std::sort(touched.begin(), touched.end());
            for (std::uint32_t c : touched) {
                if (c == old) continue;
                const double gain = neigh_w[c] - resolution * tot[c] * strength[v] / two_m;
                if (gain > best_gain || (gain == best_gain && c < best)) {
                    best_gain = gain;
                    best = c;
                }
            }
            tot[best] += strength[v];
            comm[v] = best;
            if (best != old) {
                any_move = true;
                res.moved = true;
            }
            for (std::uint32_t c : touched) neigh_w[c] = 0.0;
        }
        pass_modularity.push_back(modularity(g, comm, resolution));
    }

    // densify by first occurrence in node order
    std::vector<std::uint32_t> remap(n, UINT32_MAX);
    std::uint32_t next = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (remap[comm[v]] == UINT32_MAX) remap[comm[v]] = next++;
        comm[v] = remap[comm[v]];
    }
    res.community = std::move(comm);
    return res;
}

WeightedGraph aggregate(const WeightedGraph& g, const std::vector<std::uint32_t>& comm) {
    std::uint32_t ncomm = 0;
    for (std::uint32_t c : comm) ncomm = std::max(ncomm, c + 1);
    std::map<std::pair<std::uint32_t, std::uint32_t>, double> agg;
    for (std::uint32_t v = 0; v < g.node_count(); ++v)
        for (const auto& [u, w] : g.neighbors(v)) {
            if (u < v) continue;  // each undirected edge once; self-loops stored once
            auto key = std::minmax(comm[u], comm[v]);
            agg[{key.first, key.second}] += w;
        }
    WeightedGraph out(ncomm);
    for (const auto& [key, w] : agg) out.add_edge(key.first, key.second, w);
    return out;
}

}  // namespace

Partition louvain(const WeightedGraph& g, double resolution, std::uint64_t seed) {
    const std::size_t n = g.node_count();
    Partition part;
    part.community.resize(n);
    std::iota(part.community.begin(), part.community.end(), 0u);
    if (n == 0) return part;

    std::mt19937_64 rng(seed);
    WeightedGraph level = g;
    std::vector<std::uint32_t> node_to_level(n);
    std::iota(node_to_level.begin(), node_to_level.end(), 0u);

    for (;;) {
        std::vector<std::uint32_t> order(level.node_count());
        std::iota(order.begin(), order.end(), 0u);
        std::shuffle(order.begin(), order.end(), rng);

        LevelResult lr = local_moving(level, order, resolution, part.pass_modularity);
        for (std::uint32_t v = 0; v < n; ++v)
            node_to_level[v] = lr.community[node_to_level[v]];
        if (!lr.moved) break;
        WeightedGraph next = aggregate(level, lr.community);
        if (next.node_count() == level.node_count()) break;
        level = std::move(next);
    }

    // dense ids ordered by smallest member node
    std::vector<std::uint32_t> remap(n, UINT32_MAX);
    std::uint32_t next_id = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (remap[node_to_level[v]] == UINT32_MAX) remap[node_to_level[v]] = next_id++;
        part.community[v] = remap[node_to_level[v]];
    }
    part.modularity = modularity(g, part.community, resolution);
    return part;
}

}  // namespace bionet
