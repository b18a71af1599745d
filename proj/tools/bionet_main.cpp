// bionet: build and analyse person-to-person link networks across
// encyclopedia language editions.
//
// Subcommands: build, stats, rank, compare, redirects, export.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bionet/centrality.hpp"
#include "bionet/crosslang.hpp"
#include "bionet/errors.hpp"
#include "bionet/ingest.hpp"
#include "bionet/io.hpp"
#include "bionet/metrics.hpp"

namespace fs = std::filesystem;
using namespace bionet;

namespace {

// Outputs registered here are deleted when the command fails, so a non-zero
// exit never leaves partial result files behind.
struct OutputGuard {
    std::vector<fs::path> paths;
    bool committed = false;
    fs::path track(fs::path p) {
        paths.push_back(p);
        return p;
    }
    ~OutputGuard() {
        if (committed) return;
        for (const auto& p : paths) {
            std::error_code ec;
            fs::remove(p, ec);
        }
    }
};

struct CommonOpts {
    std::string net_dir;
    std::vector<std::string> langs;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
};

Measure parse_measure(const std::string& name) {
    if (name == "in_degree") return Measure::InDegree;
    if (name == "out_degree") return Measure::OutDegree;
    if (name == "betweenness") return Measure::Betweenness;
    if (name == "pagerank") return Measure::PageRank;
    throw UsageError("unknown measure '" + name + "'");
}

int run(int argc, char** argv) {
    CLI::App app{"biographical link-network analytics"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key-value config file; flags override");

    // ---- build ----
    std::string persons_path, redirects_path, links_path;
    CommonOpts opt;
    auto* build = app.add_subcommand("build", "ingest raw files into per-language networks");
    build->add_option("--persons", persons_path, "persons TSV")->required();
    build->add_option("--redirects", redirects_path, "redirects TSV")->required();
    build->add_option("--links", links_path, "links TSV")->required();
    build->add_option("--langs", opt.langs, "language codes")->required()->delimiter(',');
    build->add_option("--out", opt.out_dir, "output directory");

    // ---- stats ----
    StatsConfig stats_cfg;
    bool histograms = false;
    auto* stats = app.add_subcommand("stats", "per-language statistics table");
    stats->add_option("--net-dir", opt.net_dir, "directory of built networks")->required();
    stats->add_option("--langs", opt.langs, "language codes")->required()->delimiter(',');
    stats->add_option("--out", opt.out_dir, "output directory");
    stats->add_option("--exact-threshold", stats_cfg.exact_threshold,
                      "exact path statistics up to this GC size");
    stats->add_option("--apl-samples", stats_cfg.sample_size, "BFS sources in sampled mode");
    stats->add_option("--seed", stats_cfg.seed, "sampling seed");
    stats->add_flag("--histograms", histograms, "also write degree histograms");

    // ---- rank ----
    std::string rank_lang, measure_name = "in_degree";
    std::size_t top_n = 25;
    bool top5 = false;
    BetweennessConfig btw_cfg;
    PageRankConfig pr_cfg;
    std::size_t btw_threshold = 50000;
    std::size_t btw_samples = 10000;
    auto* rank = app.add_subcommand("rank", "centrality ranking tables");
    rank->add_option("--net-dir", opt.net_dir, "directory of built networks")->required();
    rank->add_option("--lang", rank_lang, "language to rank");
    rank->add_option("--langs", opt.langs, "languages for --top5")->delimiter(',');
    rank->add_option("--measure", measure_name,
                     "in_degree|out_degree|betweenness|pagerank");
    rank->add_option("--top", top_n, "rows to emit");
    rank->add_flag("--top5", top5, "per-language top-5 betweenness summary");
    rank->add_option("--seed", btw_cfg.seed, "betweenness sampling seed");
    rank->add_option("--betweenness-threshold", btw_threshold,
                     "exact betweenness up to this node count");
    rank->add_option("--betweenness-samples", btw_samples, "sources in sampled mode");
    rank->add_option("--damping", pr_cfg.damping, "pagerank damping");
    rank->add_option("--tol", pr_cfg.tol, "pagerank L1 tolerance");
    rank->add_option("--max-iter", pr_cfg.max_iter, "pagerank iteration cap");
    rank->add_option("--out", opt.out_dir, "output directory");

    // ---- compare ----
    std::size_t consensus_k = 13;
    std::uint64_t louvain_seed = 0;
    double resolution = 1.0;
    auto* compare = app.add_subcommand("compare", "cross-language similarity and consensus");
    compare->add_option("--net-dir", opt.net_dir, "directory of built networks")->required();
    compare->add_option("--langs", opt.langs, "language codes")->required()->delimiter(',');
    compare->add_option("--out", opt.out_dir, "output directory");
    compare->add_option("--consensus-k", consensus_k, "minimum languages per consensus edge");
    compare->add_option("--louvain-seed", louvain_seed, "community detection seed");
    compare->add_option("--resolution", resolution, "modularity resolution");

    // ---- redirects ----
    std::string red_lang;
    std::size_t red_top = 13;
    auto* redirects = app.add_subcommand("redirects", "redirect distribution per language");
    redirects->add_option("--persons", persons_path, "persons TSV")->required();
    redirects->add_option("--redirects", redirects_path, "redirects TSV")->required();
    redirects->add_option("--lang", red_lang, "language code")->required();
    redirects->add_option("--top", red_top, "ranking length");
    redirects->add_option("--out", opt.out_dir, "output directory");

    // ---- export ----
    std::string exp_lang, exp_format = "graphml", exp_out;
    auto* exp = app.add_subcommand("export", "export a built network as GraphML or DOT");
    exp->add_option("--net-dir", opt.net_dir, "directory of built networks")->required();
    exp->add_option("--lang", exp_lang, "language code")->required();
    exp->add_option("--format", exp_format, "graphml|dot");
    exp->add_option("--out-file", exp_out, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    OutputGuard guard;
    const fs::path out_dir(opt.out_dir);

    if (*build) {
        fs::create_directories(out_dir);
        PersonRegistry registry = load_person_registry(persons_path);
        RedirectTable redirect_table = load_redirect_table(redirects_path);
        for (const auto& lang : opt.langs)
            if (!registry.has_language(lang))
                throw DataError("language '" + lang + "' not present in the person registry");
        for (const auto& lang : opt.langs) {
            auto links = load_link_records(links_path, lang);
            auto [net, report] = build_language_network(lang, links, registry, redirect_table);
            if (report.edges == 0)
                std::cerr << "warning: language '" << lang << "' produced an empty network\n";
            guard.track(out_dir / (lang + ".nodes.tsv"));
            guard.track(out_dir / (lang + ".edges.tsv"));
            save_network(out_dir, net);
            write_report_json(guard.track(out_dir / (lang + ".report.json")), report);
            std::cerr << lang << ": " << report.nodes << " nodes, " << report.edges
                      << " edges\n";
        }
    } else if (*stats) {
        fs::create_directories(out_dir);
        std::vector<LabeledStats> rows;
        for (const auto& lang : opt.langs) {
            BiographicalNetwork net = load_network(opt.net_dir, lang);
            rows.push_back({lang, network_stats(net, stats_cfg)});
            if (histograms) {
                auto [in_h, out_h] = degree_distributions(net.graph);
                write_degree_histogram_csv(guard.track(out_dir / (lang + ".indeg.csv")), in_h);
                write_degree_histogram_csv(guard.track(out_dir / (lang + ".outdeg.csv")), out_h);
            }
        }
        write_stats_csv(guard.track(out_dir / "stats.csv"), rows);
        write_stats_json(guard.track(out_dir / "stats.json"), rows);
    } else if (*rank) {
        fs::create_directories(out_dir);
        auto configure = [&](const DirectedGraph& g) {
            BetweennessConfig bc = btw_cfg;
            if (g.node_count() > btw_threshold) {
                bc.sampled = true;
                bc.sample_size = std::min(btw_samples, g.node_count());
            }
            return bc;
        };
        if (top5) {
            if (opt.langs.empty()) throw UsageError("--top5 needs --langs");
            auto out = guard.track(out_dir / "top5.csv");
            std::ofstream f(out);
            f << "lang,rank,entity\n";
            for (const auto& lang : opt.langs) {
                BiographicalNetwork net = load_network(opt.net_dir, lang);
                auto rows = ranking_table(net.graph, Measure::Betweenness,
                                          std::min<std::size_t>(5, net.graph.node_count()),
                                          configure(net.graph), pr_cfg);
                for (std::size_t i = 0; i < rows.size(); ++i)
                    f << lang << ',' << i + 1 << ',' << rows[i].entity << '\n';
            }
        } else {
            if (rank_lang.empty()) throw UsageError("rank needs --lang (or --top5 with --langs)");
            BiographicalNetwork net = load_network(opt.net_dir, rank_lang);
            auto rows = ranking_table(net.graph, parse_measure(measure_name), top_n,
                                      configure(net.graph), pr_cfg);
            write_ranking_csv(guard.track(out_dir / ("rank_" + rank_lang + ".csv")), rows);
            write_ranking_json(guard.track(out_dir / ("rank_" + rank_lang + ".json")), rows);
        }
    } else if (*compare) {
        if (opt.langs.size() < 2) throw UsageError("compare needs at least 2 languages");
        fs::create_directories(out_dir);
        std::vector<AlignedEdgeSet> sets;
        for (const auto& lang : opt.langs)
            sets.push_back(aligned_edge_set(load_network(opt.net_dir, lang)));

        SimilarityMatrix matrix = similarity_matrix(sets);
        write_similarity_csv(guard.track(out_dir / "similarity.csv"), matrix);
        write_similarity_json(guard.track(out_dir / "similarity.json"), matrix);

        const std::size_t k = std::min<std::size_t>(2, sets.size() - 1);
        LanguageSimilarityNetwork simnet = top_k_similarity_network(matrix, k);
        Partition part = louvain(similarity_projection(simnet), resolution, louvain_seed);
        write_similarity_graphml(guard.track(out_dir / "simnet.graphml"), simnet, part);
        write_similarity_dot(guard.track(out_dir / "simnet.dot"), simnet, part);
        write_communities_json(guard.track(out_dir / "communities.json"), simnet, part);

        ConsensusNetwork consensus = consensus_network(sets, consensus_k);
        write_consensus_tsv(guard.track(out_dir / "consensus.tsv"), consensus);
        write_consensus_graphml(guard.track(out_dir / "consensus.graphml"), consensus);
        write_consensus_dot(guard.track(out_dir / "consensus.dot"), consensus);
        write_components_json(guard.track(out_dir / "components.json"),
                              component_report(consensus));
    } else if (*redirects) {
        fs::create_directories(out_dir);
        PersonRegistry registry = load_person_registry(persons_path);
        RedirectTable redirect_table = load_redirect_table(redirects_path);
        auto dist = redirect_distribution(redirect_table, registry, red_lang, red_top);
        write_redirect_distribution(
            guard.track(out_dir / (red_lang + ".redirect_histogram.csv")),
            guard.track(out_dir / (red_lang + ".redirect_top.csv")), dist);
    } else if (*exp) {
        BiographicalNetwork net = load_network(opt.net_dir, exp_lang);
        ConsensusNetwork as_consensus;  // reuse the consensus writers: support = 1
        as_consensus.threshold = 1;
        as_consensus.graph = std::move(net.graph);
        as_consensus.support.assign(as_consensus.graph.edge_count(), 1);
        if (exp_format == "graphml")
            write_consensus_graphml(guard.track(exp_out), as_consensus);
        else if (exp_format == "dot")
            write_consensus_dot(guard.track(exp_out), as_consensus);
        else
            throw UsageError("unknown export format '" + exp_format + "'");
    }

    guard.committed = true;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
