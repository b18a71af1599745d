#include "bionet/ingest.hpp"

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "bionet/errors.hpp"

namespace bionet {

std::string normalize_title(std::string_view title) {
    std::string folded(title);
    std::replace(folded.begin(), folded.end(), '_', ' ');

    UErrorCode status = U_ZERO_ERROR;
    const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
    if (U_FAILURE(status)) return folded;  // no ICU data: fold only
    icu::UnicodeString us = icu::UnicodeString::fromUTF8(folded);
    icu::UnicodeString out = nfc->normalize(us, status);
    if (U_FAILURE(status)) return folded;
    std::string result;
    out.toUTF8String(result);
    return result;
}

bool is_language_code(std::string_view code) {
    if (code.size() < 2 || code.size() > 3) return false;
    for (char c : code)
        if (c < 'a' || c > 'z') return false;
    return true;
}

void PersonRegistry::add(const std::string& entity, const std::string& lang,
                         const std::string& local_title) {
    std::string title = normalize_title(local_title);
    auto& slot = by_lang_[lang];
    auto [it, inserted] = slot.emplace(title, entity);
    if (!inserted && it->second != entity)
        throw DataError("duplicate local title '" + title + "' in language '" + lang +
                        "': entities '" + it->second + "' and '" + entity + "'");
    entities_[entity][lang] = title;
}

const std::map<std::string, std::string>& PersonRegistry::titles_for(
    const std::string& lang) const {
    static const std::map<std::string, std::string> empty;
    auto it = by_lang_.find(lang);
    if (it == by_lang_.end()) return empty;
    return it->second;
}

std::optional<std::string> PersonRegistry::entity_of(const std::string& lang,
                                                     const std::string& title) const {
    auto lit = by_lang_.find(lang);
    if (lit == by_lang_.end()) return std::nullopt;
    auto it = lit->second.find(title);
    if (it == lit->second.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> PersonRegistry::languages() const {
    std::vector<std::string> out;
    out.reserve(by_lang_.size());
    for (const auto& [lang, _] : by_lang_) out.push_back(lang);
    return out;
}

void RedirectTable::add(const std::string& lang, const std::string& alias,
                        const std::string& target) {
    std::string a = normalize_title(alias);
    std::string t = normalize_title(target);
    if (a == t)
        throw DataError("redirect alias equals its target: '" + a + "' (" + lang + ")");
    by_lang_[lang][a] = t;
}

std::optional<std::string> RedirectTable::target_of(const std::string& lang,
                                                    const std::string& alias) const {
    auto lit = by_lang_.find(lang);
    if (lit == by_lang_.end()) return std::nullopt;
    auto it = lit->second.find(alias);
    if (it == lit->second.end()) return std::nullopt;
    return it->second;
}

const std::map<std::string, std::string>& RedirectTable::aliases_for(
    const std::string& lang) const {
    static const std::map<std::string, std::string> empty;
    auto it = by_lang_.find(lang);
    if (it == by_lang_.end()) return empty;
    return it->second;
}

namespace {

// Splits a TSV row, validating the expected column count.
std::vector<std::string> split_tsv(const std::string& line, std::size_t expect,
                                   const std::string& path, std::size_t lineno) {
    std::vector<std::string> cols;
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            cols.push_back(line.substr(start));
            break;
        }
        cols.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    if (cols.size() != expect)
        throw DataError(path + ":" + std::to_string(lineno) + ": expected " +
                        std::to_string(expect) + " tab-separated fields, got " +
                        std::to_string(cols.size()));
    for (auto& c : cols)
        if (c.empty())
            throw DataError(path + ":" + std::to_string(lineno) + ": empty field");
    return cols;
}

template <typename Fn>
void for_each_row(const std::string& path, std::size_t columns, Fn&& fn) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto cols = split_tsv(line, columns, path, lineno);
        fn(cols, lineno);
    }
}

}  // namespace

PersonRegistry load_person_registry(const std::string& path) {
    PersonRegistry reg;
    for_each_row(path, 3, [&](const std::vector<std::string>& c, std::size_t lineno) {
        if (!is_language_code(c[1]))
            throw DataError(path + ":" + std::to_string(lineno) + ": bad language code '" +
                            c[1] + "'");
        reg.add(c[0], c[1], c[2]);
    });
    return reg;
}

RedirectTable load_redirect_table(const std::string& path) {
    RedirectTable tab;
    for_each_row(path, 3, [&](const std::vector<std::string>& c, std::size_t lineno) {
        if (!is_language_code(c[0]))
            throw DataError(path + ":" + std::to_string(lineno) + ": bad language code '" +
                            c[0] + "'");
        tab.add(c[0], c[1], c[2]);
    });
    return tab;
}

std::vector<LinkRecord> load_link_records(const std::string& path, const std::string& lang) {
    std::vector<LinkRecord> out;
    for_each_row(path, 3, [&](std::vector<std::string>& c, std::size_t lineno) {
        if (!is_language_code(c[0]))
            throw DataError(path + ":" + std::to_string(lineno) + ": bad language code '" +
                            c[0] + "'");
        if (!lang.empty() && c[0] != lang) return;
        out.push_back({std::move(c[0]), std::move(c[1]), std::move(c[2])});
    });
    return out;
}

std::optional<std::string> resolve_title(const std::string& lang, std::string_view title,
                                         const RedirectTable& redirects,
                                         const PersonRegistry& registry) {
    static constexpr int kMaxHops = 8;
    std::string current = normalize_title(title);
    std::set<std::string> seen;
    for (int hop = 0; hop <= kMaxHops; ++hop) {
        if (auto entity = registry.entity_of(lang, current)) return entity;
        if (!seen.insert(current).second) return std::nullopt;  // cycle
        auto next = redirects.target_of(lang, current);
        if (!next) return std::nullopt;
        current = std::move(*next);
    }
    return std::nullopt;
}

std::pair<BiographicalNetwork, IngestReport> build_language_network(
    const std::string& lang, const std::vector<LinkRecord>& links,
    const PersonRegistry& registry, const RedirectTable& redirects) {
    IngestReport report;
    report.lang = lang;

    // Resolution results are memoized per title; the link streams repeat the
    // same hub titles constantly.
    std::unordered_map<std::string, std::optional<std::string>> cache;
    auto resolve = [&](const std::string& raw) -> const std::optional<std::string>& {
        std::string key = normalize_title(raw);
        auto it = cache.find(key);
        if (it == cache.end())
            it = cache.emplace(key, resolve_title(lang, key, redirects, registry)).first;
        return it->second;
    };

    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& rec : links) {
        ++report.records_read;
        const auto& src = resolve(rec.source_title);
        const auto& dst = resolve(rec.target_title);
        if (!src || !dst) {
            ++report.dropped_unresolved;
            continue;
        }
        if (*src == *dst) {
            ++report.dropped_self_loop;
            continue;
        }
        edges.emplace_back(*src, *dst);
    }

    BiographicalNetwork net{lang, DirectedGraph::from_edges(std::move(edges))};
    report.nodes = net.graph.node_count();
    report.edges = net.graph.edge_count();
    return {std::move(net), report};
}

RedirectDistribution redirect_distribution(const RedirectTable& redirects,
                                           const PersonRegistry& registry,
                                           const std::string& lang, std::size_t top_n) {
    if (!registry.has_language(lang))
        throw DataError("unknown language '" + lang + "'");

    // entity -> redirect count, zero-initialized over all registered persons
    std::map<std::string, std::uint64_t> counts;
    for (const auto& [_, entity] : registry.titles_for(lang)) counts[entity] = 0;

    for (const auto& [alias, _] : redirects.aliases_for(lang)) {
        if (registry.entity_of(lang, alias)) continue;  // canonical titles are not redirects
        if (auto entity = resolve_title(lang, alias, redirects, registry)) ++counts[*entity];
    }

    RedirectDistribution dist;
    for (const auto& [_, c] : counts) ++dist.histogram[c];

    std::vector<std::pair<std::string, std::uint64_t>> ranked(counts.begin(), counts.end());
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (ranked.size() > top_n) ranked.resize(top_n);
    dist.ranking = std::move(ranked);
    return dist;
}

}  // namespace bionet
