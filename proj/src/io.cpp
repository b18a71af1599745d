#include "bionet/io.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>

#include "bionet/errors.hpp"
#include "json.hpp"

namespace bionet {

namespace {

using nlohmann::json;

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write " + path.string());
    return out;
}

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

void dump_json(const std::filesystem::path& path, const json& j) {
    auto out = open_out(path);
    out << j.dump(2) << '\n';
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

const char* mode_name(PathMode m) { return m == PathMode::Exact ? "exact" : "sampled"; }

// RFC 4180 quoting, applied only when needed.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

void save_network(const std::filesystem::path& dir, const BiographicalNetwork& net) {
    std::filesystem::create_directories(dir);
    {
        auto out = open_out(dir / (net.lang + ".nodes.tsv"));
        for (NodeId v = 0; v < net.graph.node_count(); ++v)
            out << v << '\t' << net.graph.label(v) << '\n';
    }
    {
        auto out = open_out(dir / (net.lang + ".edges.tsv"));
        net.graph.for_each_edge([&](NodeId u, NodeId v) { out << u << '\t' << v << '\n'; });
    }
}

BiographicalNetwork load_network(const std::filesystem::path& dir, const std::string& lang) {
    const auto nodes_path = dir / (lang + ".nodes.tsv");
    const auto edges_path = dir / (lang + ".edges.tsv");
    std::ifstream nodes(nodes_path);
    if (!nodes) throw DataError("missing network artifact for language '" + lang + "': " +
                                nodes_path.string());
    std::vector<std::string> labels;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(nodes, line)) {
        ++lineno;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw DataError(nodes_path.string() + ":" + std::to_string(lineno) + ": bad row");
        if (std::stoull(line.substr(0, tab)) != labels.size())
            throw DataError(nodes_path.string() + ":" + std::to_string(lineno) +
                            ": node ids must be dense and ascending");
        labels.push_back(line.substr(tab + 1));
    }
    std::ifstream edges(edges_path);
    if (!edges) throw DataError("missing network artifact for language '" + lang + "': " +
                                edges_path.string());
    std::vector<std::pair<NodeId, NodeId>> es;
    lineno = 0;
    while (std::getline(edges, line)) {
        ++lineno;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            throw DataError(edges_path.string() + ":" + std::to_string(lineno) + ": bad row");
        es.emplace_back(static_cast<NodeId>(std::stoul(line.substr(0, tab))),
                        static_cast<NodeId>(std::stoul(line.substr(tab + 1))));
    }
    BiographicalNetwork net;
    net.lang = lang;
    net.graph = DirectedGraph::from_node_edges(std::move(labels), std::move(es));
    return net;
}

void write_report_json(const std::filesystem::path& path, const IngestReport& r) {
    json j{{"lang", r.lang},
           {"records_read", r.records_read},
           {"dropped_unresolved", r.dropped_unresolved},
           {"dropped_self_loop", r.dropped_self_loop},
           {"nodes", r.nodes},
           {"edges", r.edges}};
    dump_json(path, j);
}

namespace {

void sort_stats_rows(std::vector<LabeledStats>& rows) {
    std::stable_sort(rows.begin(), rows.end(), [](const LabeledStats& a, const LabeledStats& b) {
        if (a.stats.n_nodes != b.stats.n_nodes) return a.stats.n_nodes > b.stats.n_nodes;
        return a.lang < b.lang;
    });
}

}  // namespace

void write_stats_csv(const std::filesystem::path& path, std::vector<LabeledStats> rows) {
    sort_stats_rows(rows);
    auto out = open_out(path);
    out << "lang,N,K,C,GC%,d,r,dmax,apl_mode\n";
    for (const auto& [lang, s] : rows) {
        out << lang << ',' << s.n_nodes << ',' << s.n_edges << ',' << fmt("%.2f", s.avg_clustering)
            << ',' << fmt("%.1f", 100.0 * s.gc_fraction) << ',' << fmt("%.2f", s.avg_path_length)
            << ',' << fmt("%.2f", s.reciprocity) << ',' << s.diameter << ',';
        if (s.apl_mode == PathMode::Sampled)
            out << "sampled:" << s.apl_sample_size;
        else
            out << "exact";
        out << '\n';
    }
}

void write_stats_json(const std::filesystem::path& path, std::vector<LabeledStats> rows) {
    sort_stats_rows(rows);
    json arr = json::array();
    for (const auto& [lang, s] : rows) {
        arr.push_back({{"lang", lang},
                       {"n_nodes", s.n_nodes},
                       {"n_edges", s.n_edges},
                       {"avg_clustering", s.avg_clustering},
                       {"gc_fraction", s.gc_fraction},
                       {"avg_path_length", s.avg_path_length},
                       {"reciprocity", s.reciprocity},
                       {"diameter", s.diameter},
                       {"apl_mode", mode_name(s.apl_mode)},
                       {"apl_sample_size", s.apl_sample_size}});
    }
    dump_json(path, arr);
}

void write_degree_histogram_csv(const std::filesystem::path& path, const DegreeHistogram& h) {
    auto out = open_out(path);
    out << "degree,count\n";
    for (const auto& [deg, cnt] : h.counts) out << deg << ',' << cnt << '\n';
}

void write_ranking_csv(const std::filesystem::path& path, const std::vector<RankingRow>& rows) {
    auto out = open_out(path);
    out << "entity,in_degree,out_degree,out_degree_rank,betweenness_rank,pagerank,pagerank_rank\n";
    for (const auto& r : rows) {
        out << csv_field(r.entity) << ',' << r.in_degree << ',' << r.out_degree << ',' << r.out_degree_rank
            << ',' << r.betweenness_rank << ',' << fmt("%.8f", r.pagerank) << ','
            << r.pagerank_rank << '\n';
    }
}

void write_ranking_json(const std::filesystem::path& path, const std::vector<RankingRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"entity", r.entity},
                       {"in_degree", r.in_degree},
                       {"out_degree", r.out_degree},
                       {"in_degree_rank", r.in_degree_rank},
                       {"out_degree_rank", r.out_degree_rank},
                       {"betweenness_rank", r.betweenness_rank},
                       {"pagerank", r.pagerank},
                       {"pagerank_rank", r.pagerank_rank}});
    }
    dump_json(path, arr);
}

void write_similarity_csv(const std::filesystem::path& path, const SimilarityMatrix& m) {
    auto out = open_out(path);
    out << "lang";
    for (const auto& l : m.langs) out << ',' << l;
    out << '\n';
    for (std::size_t i = 0; i < m.langs.size(); ++i) {
        out << m.langs[i];
        for (std::size_t j = 0; j < m.langs.size(); ++j) out << ',' << fmt("%.2f", m.values[i][j]);
        out << '\n';
    }
}

void write_similarity_json(const std::filesystem::path& path, const SimilarityMatrix& m) {
    dump_json(path, json{{"langs", m.langs}, {"values", m.values}});
}

void write_similarity_graphml(const std::filesystem::path& path,
                              const LanguageSimilarityNetwork& net, const Partition& part) {
    auto out = open_out(path);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"community\" for=\"node\" attr.name=\"community\" attr.type=\"int\"/>\n"
        << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
        << "  <graph edgedefault=\"directed\">\n";
    for (std::size_t i = 0; i < net.langs.size(); ++i)
        out << "    <node id=\"" << xml_escape(net.langs[i]) << "\"><data key=\"community\">"
            << part.community[i] << "</data></node>\n";
    for (std::size_t i = 0; i < net.langs.size(); ++i)
        for (const auto& [j, w] : net.top[i])
            out << "    <edge source=\"" << xml_escape(net.langs[i]) << "\" target=\""
                << xml_escape(net.langs[j]) << "\"><data key=\"weight\">" << fmt("%.12g", w)
                << "</data></edge>\n";
    out << "  </graph>\n</graphml>\n";
}

void write_similarity_dot(const std::filesystem::path& path, const LanguageSimilarityNetwork& net,
                          const Partition& part) {
    auto out = open_out(path);
    out << "digraph similarity {\n";
    for (std::size_t i = 0; i < net.langs.size(); ++i)
        out << "  \"" << dot_escape(net.langs[i]) << "\" [community=" << part.community[i]
            << "];\n";
    for (std::size_t i = 0; i < net.langs.size(); ++i)
        for (const auto& [j, w] : net.top[i])
            out << "  \"" << dot_escape(net.langs[i]) << "\" -> \"" << dot_escape(net.langs[j])
                << "\" [weight=" << fmt("%.12g", w) << "];\n";
    out << "}\n";
}

void write_communities_json(const std::filesystem::path& path,
                            const LanguageSimilarityNetwork& net, const Partition& part) {
    json communities = json::object();
    for (std::size_t i = 0; i < net.langs.size(); ++i)
        communities[net.langs[i]] = part.community[i];
    dump_json(path, json{{"communities", communities}, {"modularity", part.modularity}});
}

void write_consensus_tsv(const std::filesystem::path& path, const ConsensusNetwork& c) {
    auto out = open_out(path);
    std::size_t k = 0;
    c.graph.for_each_edge([&](NodeId u, NodeId v) {
        out << c.graph.label(u) << '\t' << c.graph.label(v) << '\t' << c.support[k++] << '\n';
    });
}

void write_consensus_graphml(const std::filesystem::path& path, const ConsensusNetwork& c) {
    auto out = open_out(path);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"support\" for=\"edge\" attr.name=\"support\" attr.type=\"int\"/>\n"
        << "  <graph edgedefault=\"directed\">\n";
    for (NodeId v = 0; v < c.graph.node_count(); ++v)
        out << "    <node id=\"" << xml_escape(c.graph.label(v)) << "\"/>\n";
    std::size_t k = 0;
    c.graph.for_each_edge([&](NodeId u, NodeId v) {
        out << "    <edge source=\"" << xml_escape(c.graph.label(u)) << "\" target=\""
            << xml_escape(c.graph.label(v)) << "\"><data key=\"support\">" << c.support[k++]
            << "</data></edge>\n";
    });
    out << "  </graph>\n</graphml>\n";
}

void write_consensus_dot(const std::filesystem::path& path, const ConsensusNetwork& c) {
    auto out = open_out(path);
    out << "digraph consensus {\n";
    for (NodeId v = 0; v < c.graph.node_count(); ++v)
        out << "  \"" << dot_escape(c.graph.label(v)) << "\";\n";
    std::size_t k = 0;
    c.graph.for_each_edge([&](NodeId u, NodeId v) {
        out << "  \"" << dot_escape(c.graph.label(u)) << "\" -> \""
            << dot_escape(c.graph.label(v)) << "\" [support=" << c.support[k++] << "];\n";
    });
    out << "}\n";
}

void write_components_json(const std::filesystem::path& path,
                           const std::vector<Component>& components) {
    json arr = json::array();
    for (const auto& comp : components)
        arr.push_back({{"size", comp.entities.size()}, {"entities", comp.entities}});
    dump_json(path, arr);
}

void write_redirect_distribution(const std::filesystem::path& histogram_csv,
                                 const std::filesystem::path& ranking_csv,
                                 const RedirectDistribution& dist) {
    {
        auto out = open_out(histogram_csv);
        out << "redirects,articles\n";
        for (const auto& [r, a] : dist.histogram) out << r << ',' << a << '\n';
    }
    {
        auto out = open_out(ranking_csv);
        out << "entity,redirects\n";
        for (const auto& [e, r] : dist.ranking) out << csv_field(e) << ',' << r << '\n';
    }
}

}  // namespace bionet
