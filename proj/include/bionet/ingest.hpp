#ifndef BIONET_INGEST_HPP_
#define BIONET_INGEST_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bionet/graph.hpp"

namespace bionet {

/// MediaWiki titles compare equal after Unicode NFC normalization and
/// underscore -> space folding; this applies both. Input must be UTF-8.
std::string normalize_title(std::string_view title);

/// 2-3 lowercase letters.
bool is_language_code(std::string_view code);

/// EntityId -> per-language canonical local title, plus the reverse index
/// (lang, local title) -> EntityId used during link resolution.
class PersonRegistry {
public:
    /// `local_title` is normalized on insertion. Throws DataError when the
    /// (lang, title) slot is already taken by a different entity.
    void add(const std::string& entity, const std::string& lang, const std::string& local_title);

    std::size_t entity_count() const { return entities_.size(); }
    bool has_language(const std::string& lang) const { return by_lang_.count(lang) != 0; }

    /// Entities registered in `lang`, with their canonical local titles.
    /// Iteration order is lexicographic by EntityId.
    const std::map<std::string, std::string>& titles_for(const std::string& lang) const;

    /// EntityId owning this canonical local title, if any. `title` must
    /// already be normalized.
    std::optional<std::string> entity_of(const std::string& lang, const std::string& title) const;

    std::vector<std::string> languages() const;

private:
    std::map<std::string, std::map<std::string, std::string>> entities_;  // entity -> lang -> title
    std::map<std::string, std::map<std::string, std::string>> by_lang_;   // lang -> title -> entity
};

/// (lang, alias) -> redirect target. Titles normalized on insertion.
class RedirectTable {
public:
    void add(const std::string& lang, const std::string& alias, const std::string& target);
    std::optional<std::string> target_of(const std::string& lang, const std::string& alias) const;
    /// All (alias, target) pairs for one language, lexicographic by alias.
    const std::map<std::string, std::string>& aliases_for(const std::string& lang) const;

private:
    std::map<std::string, std::map<std::string, std::string>> by_lang_;
};

struct LinkRecord {
    std::string lang;
    std::string source_title;
    std::string target_title;
};

struct BiographicalNetwork {
    std::string lang;
    DirectedGraph graph;  // labels are EntityIds
};

struct IngestReport {
    std::string lang;
    std::uint64_t records_read = 0;
    std::uint64_t dropped_unresolved = 0;
    std::uint64_t dropped_self_loop = 0;
    std::uint64_t nodes = 0;
    std::uint64_t edges = 0;
};

// TSV loaders. UTF-8, tab-separated, '#'-prefixed comment lines and blank
// lines ignored. Malformed rows raise DataError with the line number.
PersonRegistry load_person_registry(const std::string& path);
RedirectTable load_redirect_table(const std::string& path);
/// Loads only the records for `lang` (pass empty to load all).
std::vector<LinkRecord> load_link_records(const std::string& path, const std::string& lang = "");

/// Follows the redirect chain from `title` (normalized internally) for at
/// most 8 hops, with cycle detection. Returns the EntityId whose canonical
/// local title terminates the chain, or nullopt.
std::optional<std::string> resolve_title(const std::string& lang, std::string_view title,
                                         const RedirectTable& redirects,
                                         const PersonRegistry& registry);

std::pair<BiographicalNetwork, IngestReport> build_language_network(
    const std::string& lang, const std::vector<LinkRecord>& links,
    const PersonRegistry& registry, const RedirectTable& redirects);

struct RedirectDistribution {
    std::map<std::uint64_t, std::uint64_t> histogram;           // redirect count -> articles
    std::vector<std::pair<std::string, std::uint64_t>> ranking;  // top-n entities by count
};

/// Redirect counts per registered person of `lang`: how many aliases resolve
/// to each person. Zero-redirect persons are included in the histogram.
RedirectDistribution redirect_distribution(const RedirectTable& redirects,
                                           const PersonRegistry& registry,
                                           const std::string& lang, std::size_t top_n);

}  // namespace bionet

#endif  // BIONET_INGEST_HPP_
