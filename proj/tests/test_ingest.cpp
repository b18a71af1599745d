#include <cstdio>
#include <filesystem>
#include <fstream>

#include "bionet/errors.hpp"
#include "bionet/ingest.hpp"
#include "doctest.h"

using namespace bionet;
namespace fs = std::filesystem;

namespace {

struct TempFile {
    fs::path path;
    explicit TempFile(const std::string& content) {
        path = fs::temp_directory_path() /
               ("bionet_test_" + std::to_string(rand()) + std::to_string(rand()) + ".tsv");
        std::ofstream(path) << content;
    }
    ~TempFile() { fs::remove(path); }
};

}  // namespace

TEST_CASE("normalize_title folds underscores and NFC-normalizes") {
    CHECK(normalize_title("George_W._Bush") == "George W. Bush");
    // e + combining acute vs precomposed e-acute
    CHECK(normalize_title("Re\x65\xcc\x81") == "Re\xc3\xa9");
    CHECK(normalize_title("plain") == "plain");
}

TEST_CASE("language codes") {
    CHECK(is_language_code("en"));
    CHECK(is_language_code("zho"));
    CHECK(!is_language_code("EN"));
    CHECK(!is_language_code("e"));
    CHECK(!is_language_code("engl"));
}

TEST_CASE("load_person_registry basic") {
    TempFile f("# comment\nQ_Ada\ten\tAda Lovelace\nQ_Ada\tde\tAda Lovelace\n");
    auto reg = load_person_registry(f.path.string());
    CHECK(reg.entity_count() == 1);
    CHECK(reg.has_language("en"));
    CHECK(reg.has_language("de"));
    CHECK(*reg.entity_of("en", "Ada Lovelace") == "Q_Ada");
}

TEST_CASE("load_person_registry empty file") {
    TempFile f("");
    CHECK(load_person_registry(f.path.string()).entity_count() == 0);
}

TEST_CASE("malformed registry row reports the line number") {
    TempFile f("Q_A\ten\tA\nbroken row without tabs\n");
    CHECK_THROWS_WITH_AS(load_person_registry(f.path.string()),
                         doctest::Contains(":2:"), DataError);
}

TEST_CASE("duplicate local title names both entities") {
    TempFile f("Q_A\ten\tSmith\nQ_B\ten\tSmith\n");
    try {
        load_person_registry(f.path.string());
        FAIL("expected DataError");
    } catch (const DataError& e) {
        std::string msg = e.what();
        CHECK(msg.find("Q_A") != std::string::npos);
        CHECK(msg.find("Q_B") != std::string::npos);
    }
}

TEST_CASE("generated registry fixture matches bookkeeping") {
    std::string content;
    std::size_t expected_entities = 1000;
    for (std::size_t i = 0; i < expected_entities; ++i) {
        std::string id = "Q" + std::to_string(i);
        content += id + "\ten\tEn " + id + "\n";
        if (i % 2 == 0) content += id + "\tde\tDe " + id + "\n";
        if (i % 3 == 0) content += id + "\tfr\tFr " + id + "\n";
    }
    TempFile f(content);
    auto reg = load_person_registry(f.path.string());
    CHECK(reg.entity_count() == expected_entities);
    CHECK(reg.titles_for("en").size() == 1000);
    CHECK(reg.titles_for("de").size() == 500);
    CHECK(reg.titles_for("fr").size() == 334);
}

TEST_CASE("resolve_title") {
    PersonRegistry reg;
    reg.add("George W. Bush", "en", "George W. Bush");
    RedirectTable red;
    red.add("en", "Dubya", "George W. Bush");

    SUBCASE("single hop") {
        CHECK(*resolve_title("en", "Dubya", red, reg) == "George W. Bush");
    }
    SUBCASE("zero hops for canonical registered titles") {
        CHECK(*resolve_title("en", "George W. Bush", red, reg) == "George W. Bush");
    }
    SUBCASE("underscored aliases resolve too") {
        CHECK(*resolve_title("en", "George_W._Bush", red, reg) == "George W. Bush");
    }
    SUBCASE("cycles resolve to nothing") {
        red.add("en", "a", "b");
        red.add("en", "b", "a");
        CHECK(!resolve_title("en", "a", red, reg));
    }
    SUBCASE("chains deeper than 8 hops resolve to nothing") {
        for (int i = 0; i < 12; ++i)
            red.add("en", "c" + std::to_string(i), "c" + std::to_string(i + 1));
        red.add("en", "c12", "George W. Bush");
        CHECK(!resolve_title("en", "c0", red, reg));
        CHECK(*resolve_title("en", "c5", red, reg) == "George W. Bush");
    }
    SUBCASE("unregistered chain end") {
        red.add("en", "x", "Nobody Special");
        CHECK(!resolve_title("en", "x", red, reg));
    }
    SUBCASE("resolution is idempotent") {
        auto e = resolve_title("en", "Dubya", red, reg);
        REQUIRE(e);
        CHECK(*resolve_title("en", *e, red, reg) == *e);
    }
}

TEST_CASE("redirect alias may not target itself") {
    RedirectTable red;
    CHECK_THROWS_AS(red.add("en", "Same", "Same"), DataError);
    CHECK_THROWS_AS(red.add("en", "under_score", "under score"), DataError);
}

TEST_CASE("build_language_network") {
    PersonRegistry reg;
    reg.add("A", "en", "A");
    reg.add("B", "en", "B");
    reg.add("C", "en", "C");
    RedirectTable red;
    red.add("en", "A alias", "A");

    SUBCASE("duplicate records collapse into one edge") {
        std::vector<LinkRecord> links{{"en", "A", "B"}, {"en", "A alias", "B"}, {"en", "A", "B"}};
        auto [net, report] = build_language_network("en", links, reg, red);
        CHECK(net.graph.node_count() == 2);
        CHECK(net.graph.edge_count() == 1);
        CHECK(report.records_read == 3);
        CHECK(report.dropped_unresolved == 0);
    }
    SUBCASE("unresolvable endpoints are dropped and counted") {
        std::vector<LinkRecord> links{{"en", "A", "Not A Person"}, {"en", "A", "B"}};
        auto [net, report] = build_language_network("en", links, reg, red);
        CHECK(net.graph.edge_count() == 1);
        CHECK(report.dropped_unresolved == 1);
    }
    SUBCASE("aliases resolving to the same entity become self-loops and drop") {
        std::vector<LinkRecord> links{{"en", "A alias", "A"}};
        auto [net, report] = build_language_network("en", links, reg, red);
        CHECK(net.graph.node_count() == 0);
        CHECK(report.dropped_self_loop == 1);
    }
    SUBCASE("report conservation") {
        std::vector<LinkRecord> links{{"en", "A", "B"},      {"en", "B", "C"},
                                      {"en", "A alias", "A"}, {"en", "A", "nope"},
                                      {"en", "C", "A"},      {"en", "A", "B"}};
        auto [net, report] = build_language_network("en", links, reg, red);
        const std::uint64_t kept_pre_dedup =
            report.records_read - report.dropped_unresolved - report.dropped_self_loop;
        CHECK(kept_pre_dedup == 4);
        CHECK(report.edges == 3);
        CHECK(report.nodes == 3);
    }
    SUBCASE("record order does not matter") {
        std::vector<LinkRecord> links{{"en", "A", "B"}, {"en", "B", "C"}, {"en", "C", "A"}};
        auto [n1, r1] = build_language_network("en", links, reg, red);
        std::reverse(links.begin(), links.end());
        auto [n2, r2] = build_language_network("en", links, reg, red);
        CHECK(n1.graph.node_count() == n2.graph.node_count());
        CHECK(n1.graph.edge_count() == n2.graph.edge_count());
        for (NodeId v = 0; v < n1.graph.node_count(); ++v)
            CHECK(n1.graph.label(v) == n2.graph.label(v));
    }
    SUBCASE("zero surviving edges yields an empty network") {
        std::vector<LinkRecord> links{{"en", "ghost", "phantom"}};
        auto [net, report] = build_language_network("en", links, reg, red);
        CHECK(net.graph.node_count() == 0);
        CHECK(report.edges == 0);
    }
}

TEST_CASE("redirect_distribution") {
    PersonRegistry reg;
    reg.add("Solo", "en", "Solo");
    RedirectTable red;

    SUBCASE("one person, no redirects") {
        auto dist = redirect_distribution(red, reg, "en", 5);
        CHECK(dist.histogram == std::map<std::uint64_t, std::uint64_t>{{0, 1}});
        REQUIRE(dist.ranking.size() == 1);
        CHECK(dist.ranking[0] == std::pair<std::string, std::uint64_t>{"Solo", 0});
    }
    SUBCASE("unknown language") {
        CHECK_THROWS_AS(redirect_distribution(red, reg, "xx", 5), DataError);
    }
    SUBCASE("generated alias counts match the generator") {
        PersonRegistry reg2;
        RedirectTable red2;
        std::map<std::string, std::uint64_t> planted;
        for (int p = 0; p < 20; ++p) {
            std::string name = "Person" + std::to_string(p);
            reg2.add(name, "en", name);
            planted[name] = static_cast<std::uint64_t>(p % 5);
            for (int a = 0; a < p % 5; ++a)
                red2.add("en", name + " alias " + std::to_string(a), name);
        }
        auto dist = redirect_distribution(red2, reg2, "en", 20);
        std::map<std::uint64_t, std::uint64_t> expected_hist;
        for (const auto& [_, c] : planted) ++expected_hist[c];
        CHECK(dist.histogram == expected_hist);
        for (const auto& [name, count] : dist.ranking) CHECK(planted.at(name) == count);
        // ranking is count-desc, ties by name
        for (std::size_t i = 1; i < dist.ranking.size(); ++i) {
            CHECK(dist.ranking[i - 1].second >= dist.ranking[i].second);
            if (dist.ranking[i - 1].second == dist.ranking[i].second)
                CHECK(dist.ranking[i - 1].first < dist.ranking[i].first);
        }
    }
}
