#include "bionet/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "bionet/errors.hpp"
#include "bionet/parallel.hpp"

namespace bionet {

CentralityScores degree_scores(const DirectedGraph& g, Measure direction) {
    CentralityScores s;
    s.measure = direction;
    s.values.resize(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v)
        s.values[v] = direction == Measure::InDegree ? static_cast<double>(g.in_degree(v))
                                                     : static_cast<double>(g.out_degree(v));
    return s;
}

namespace {

// Per-worker scratch for one Brandes source sweep.
struct BrandesBuffers {
    std::vector<std::uint32_t> dist;
    std::vector<double> sigma;
    std::vector<double> delta;
    std::vector<NodeId> order;                // BFS visit order
    std::vector<std::vector<NodeId>> preds;
    std::vector<double> block_acc;            // scores for the current block
};

void brandes_source(const DirectedGraph& g, NodeId s, BrandesBuffers& buf) {
    const std::size_t n = g.node_count();
    buf.dist.assign(n, UINT32_MAX);
    buf.sigma.assign(n, 0.0);
    buf.delta.assign(n, 0.0);
    buf.order.clear();
    if (buf.preds.size() != n) buf.preds.resize(n);
    for (auto& p : buf.preds) p.clear();

    buf.dist[s] = 0;
    buf.sigma[s] = 1.0;
    buf.order.push_back(s);
    for (std::size_t head = 0; head < buf.order.size(); ++head) {
        const NodeId u = buf.order[head];
        for (NodeId v : g.out_neighbors(u)) {
            if (buf.dist[v] == UINT32_MAX) {
                buf.dist[v] = buf.dist[u] + 1;
                buf.order.push_back(v);
            }
            if (buf.dist[v] == buf.dist[u] + 1) {
                buf.sigma[v] += buf.sigma[u];
                buf.preds[v].push_back(u);
            }
        }
    }
    for (std::size_t i = buf.order.size(); i-- > 1;) {
        const NodeId w = buf.order[i];
        const double coeff = (1.0 + buf.delta[w]) / buf.sigma[w];
        for (NodeId v : buf.preds[w]) buf.delta[v] += buf.sigma[v] * coeff;
        buf.block_acc[w] += buf.delta[w];
    }
}

constexpr std::size_t kBrandesBlock = 128;

}  // namespace

CentralityScores betweenness(const DirectedGraph& g, const BetweennessConfig& cfg) {
    const std::size_t n = g.node_count();
    CentralityScores out;
    out.measure = Measure::Betweenness;
    out.sampled = cfg.sampled;
    out.seed = cfg.seed;
    out.values.assign(n, 0.0);
    if (n == 0) return out;

    std::vector<NodeId> sources;
    if (!cfg.sampled) {
        sources.resize(n);
        std::iota(sources.begin(), sources.end(), NodeId{0});
    } else {
        if (cfg.sample_size > n) throw UsageError("betweenness sample_size exceeds node count");
        if (cfg.sample_size < 1) throw UsageError("betweenness sample_size must be >= 1");
        std::vector<NodeId> pool(n);
        std::iota(pool.begin(), pool.end(), NodeId{0});
        std::mt19937_64 rng(cfg.seed);
        for (std::size_t i = 0; i < cfg.sample_size; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, n - 1);
            std::swap(pool[i], pool[pick(rng)]);
        }
        pool.resize(cfg.sample_size);
        sources = std::move(pool);
    }
    out.sample_size = cfg.sampled ? sources.size() : 0;

    const unsigned workers = worker_count();
    std::vector<BrandesBuffers> bufs(workers);
    OrderedMerger merger;

    parallel_blocks(sources.size(), kBrandesBlock, [&](std::size_t lo, std::size_t hi, unsigned w) {
        auto& buf = bufs[w];
        buf.block_acc.assign(n, 0.0);
        for (std::size_t i = lo; i < hi; ++i) brandes_source(g, sources[i], buf);
        merger.merge_in_order(lo / kBrandesBlock, [&] {
            for (std::size_t v = 0; v < n; ++v) out.values[v] += buf.block_acc[v];
        });
    }, workers);

    if (cfg.sampled) {
        const double scale = static_cast<double>(n) / static_cast<double>(sources.size());
        for (double& v : out.values) v *= scale;
    }
    return out;
}

CentralityScores pagerank(const DirectedGraph& g, const PageRankConfig& cfg) {
    if (cfg.damping <= 0.0 || cfg.damping >= 1.0)
        throw UsageError("pagerank damping must lie in (0,1)");
    const std::size_t n = g.node_count();
    CentralityScores out;
    out.measure = Measure::PageRank;
    if (n == 0) return out;

    const double d = cfg.damping;
    const double nn = static_cast<double>(n);
    std::vector<NodeId> dangling;
    for (NodeId v = 0; v < n; ++v)
        if (g.out_degree(v) == 0) dangling.push_back(v);

    std::vector<double> cur(n, 1.0 / nn), next(n);
    for (int iter = 1; iter <= cfg.max_iter; ++iter) {
        double dm = 0.0;
        for (NodeId v : dangling) dm += cur[v];
        const double base = (1.0 - d) / nn + d * (dm / nn);

        // disjoint writes per node; per-node accumulation runs in sorted
        // in-neighbor order, so the result is thread-count independent
        parallel_blocks(n, 4096, [&](std::size_t lo, std::size_t hi, unsigned) {
            for (std::size_t v = lo; v < hi; ++v) {
                double s = 0.0;
                for (NodeId u : g.in_neighbors(static_cast<NodeId>(v)))
                    s += cur[u] / static_cast<double>(g.out_degree(u));
                next[v] = base + d * s;
            }
        });

        double residual = 0.0;
        double mass = 0.0;
        for (std::size_t v = 0; v < n; ++v) {
            residual += std::abs(next[v] - cur[v]);
            mass += next[v];
        }
        out.iteration_mass.push_back(mass);
        cur.swap(next);
        out.iterations = iter;
        out.residual = residual;
        if (residual < cfg.tol) {
            out.values = std::move(cur);
            return out;
        }
    }
    throw ConvergenceError("pagerank failed to converge in " + std::to_string(cfg.max_iter) +
                               " iterations (residual " + std::to_string(out.residual) + ")",
                           std::move(cur), out.residual);
}

std::vector<std::size_t> rank_positions(const DirectedGraph& g, const std::vector<double>& scores) {
    std::vector<NodeId> idx(g.node_count());
    std::iota(idx.begin(), idx.end(), NodeId{0});
    std::sort(idx.begin(), idx.end(), [&](NodeId a, NodeId b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return g.label(a) < g.label(b);
    });
    std::vector<std::size_t> rank(g.node_count());
    for (std::size_t i = 0; i < idx.size(); ++i) rank[idx[i]] = i + 1;
    return rank;
}

std::vector<RankingRow> ranking_table(const DirectedGraph& g, Measure primary, std::size_t top_n,
                                      const BetweennessConfig& bc, const PageRankConfig& pc) {
    if (top_n < 1) throw UsageError("ranking table needs top_n >= 1");
    const std::size_t n = g.node_count();

    const CentralityScores in_deg = degree_scores(g, Measure::InDegree);
    const CentralityScores out_deg = degree_scores(g, Measure::OutDegree);
    const CentralityScores btw = betweenness(g, bc);
    const CentralityScores pr = pagerank(g, pc);

    const auto rank_of = [&](Measure m) -> const CentralityScores& {
        switch (m) {
            case Measure::InDegree: return in_deg;
            case Measure::OutDegree: return out_deg;
            case Measure::Betweenness: return btw;
            default: return pr;
        }
    };

    std::vector<std::size_t> in_rank = rank_positions(g, in_deg.values);
    std::vector<std::size_t> out_rank = rank_positions(g, out_deg.values);
    std::vector<std::size_t> btw_rank = rank_positions(g, btw.values);
    std::vector<std::size_t> pr_rank = rank_positions(g, pr.values);
    std::vector<std::size_t> primary_rank = rank_positions(g, rank_of(primary).values);

    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::sort(order.begin(), order.end(),
              [&](NodeId a, NodeId b) { return primary_rank[a] < primary_rank[b]; });
    if (order.size() > top_n) order.resize(top_n);

    std::vector<RankingRow> rows;
    rows.reserve(order.size());
    for (NodeId v : order) {
        RankingRow r;
        r.entity = g.label(v);
        r.in_degree = static_cast<std::uint64_t>(in_deg.values[v]);
        r.out_degree = static_cast<std::uint64_t>(out_deg.values[v]);
        r.in_degree_rank = in_rank[v];
        r.out_degree_rank = out_rank[v];
        r.betweenness_rank = btw_rank[v];
        r.pagerank = pr.values[v];
        r.pagerank_rank = pr_rank[v];
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace bionet
