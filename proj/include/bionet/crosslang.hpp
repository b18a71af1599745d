#ifndef BIONET_CROSSLANG_HPP_
#define BIONET_CROSSLANG_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "bionet/graph.hpp"
#include "bionet/ingest.hpp"
#include "bionet/louvain.hpp"

namespace bionet {

/// One language's edges lifted from NodeIds to EntityId pairs, sorted.
struct AlignedEdgeSet {
    std::string lang;
    std::vector<std::pair<std::string, std::string>> edges;  // sorted, unique
};

AlignedEdgeSet aligned_edge_set(const BiographicalNetwork& net);

/// |a ∩ b| / |a ∪ b| over directed entity pairs; 0 when both sets are empty.
double jaccard(const AlignedEdgeSet& a, const AlignedEdgeSet& b);

struct SimilarityMatrix {
    std::vector<std::string> langs;           // input order
    std::vector<std::vector<double>> values;  // symmetric, diagonal 1
};

SimilarityMatrix similarity_matrix(const std::vector<AlignedEdgeSet>& sets);

struct LanguageSimilarityNetwork {
    std::vector<std::string> langs;
    // per language: its k most similar partners, similarity descending,
    // ties by lexicographic language code
    std::vector<std::vector<std::pair<std::uint32_t, double>>> top;
};

LanguageSimilarityNetwork top_k_similarity_network(const SimilarityMatrix& m, std::size_t k = 2);

/// Undirected weighted projection of the top-k network (edge weight = the
/// Jaccard similarity of the pair), the input Louvain runs on.
WeightedGraph similarity_projection(const LanguageSimilarityNetwork& net);

struct ConsensusNetwork {
    std::size_t threshold = 0;
    DirectedGraph graph;                 // labels are EntityIds
    std::vector<std::uint32_t> support;  // per edge, in (u asc, v asc) edge order
};

/// Edges present in at least k of the language edge sets.
ConsensusNetwork consensus_network(const std::vector<AlignedEdgeSet>& sets, std::size_t k);

struct Component {
    std::vector<std::string> entities;  // lexicographic
};

/// Weakly connected components, size descending, ties by smallest EntityId.
std::vector<Component> component_report(const ConsensusNetwork& c);

}  // namespace bionet

#endif  // BIONET_CROSSLANG_HPP_
