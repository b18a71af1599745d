#ifndef BIONET_IO_HPP_
#define BIONET_IO_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "bionet/centrality.hpp"
#include "bionet/crosslang.hpp"
#include "bionet/ingest.hpp"
#include "bionet/metrics.hpp"

namespace bionet {

// Built networks persist as two TSV files plus a JSON report:
//   <lang>.nodes.tsv   node_id \t entity_id      (ids dense, lexicographic)
//   <lang>.edges.tsv   src_id \t dst_id          (sorted)
//   <lang>.report.json ingestion counters
void save_network(const std::filesystem::path& dir, const BiographicalNetwork& net);
BiographicalNetwork load_network(const std::filesystem::path& dir, const std::string& lang);
void write_report_json(const std::filesystem::path& path, const IngestReport& report);

struct LabeledStats {
    std::string lang;
    NetworkStats stats;
};

// Table-1-shaped outputs; rows ordered by N descending (ties by language).
void write_stats_csv(const std::filesystem::path& path, std::vector<LabeledStats> rows);
void write_stats_json(const std::filesystem::path& path, std::vector<LabeledStats> rows);

void write_degree_histogram_csv(const std::filesystem::path& path, const DegreeHistogram& h);

void write_ranking_csv(const std::filesystem::path& path, const std::vector<RankingRow>& rows);
void write_ranking_json(const std::filesystem::path& path, const std::vector<RankingRow>& rows);

void write_similarity_csv(const std::filesystem::path& path, const SimilarityMatrix& m);
void write_similarity_json(const std::filesystem::path& path, const SimilarityMatrix& m);

// Similarity network with Louvain community ids as a node attribute.
void write_similarity_graphml(const std::filesystem::path& path,
                              const LanguageSimilarityNetwork& net, const Partition& part);
void write_similarity_dot(const std::filesystem::path& path, const LanguageSimilarityNetwork& net,
                          const Partition& part);
void write_communities_json(const std::filesystem::path& path,
                            const LanguageSimilarityNetwork& net, const Partition& part);

// Consensus network with per-edge language support.
void write_consensus_tsv(const std::filesystem::path& path, const ConsensusNetwork& c);
void write_consensus_graphml(const std::filesystem::path& path, const ConsensusNetwork& c);
void write_consensus_dot(const std::filesystem::path& path, const ConsensusNetwork& c);
void write_components_json(const std::filesystem::path& path,
                           const std::vector<Component>& components);

void write_redirect_distribution(const std::filesystem::path& histogram_csv,
                                 const std::filesystem::path& ranking_csv,
                                 const RedirectDistribution& dist);

}  // namespace bionet

#endif  // BIONET_IO_HPP_
