#include <catch2/catch_amalgamated.hpp>

#include "json.hpp"
#include "namelint/corpus.hpp"
#include "namelint/report.hpp"

using namespace namelint;

namespace {

const Lexicon& lex() { return default_lexicon(); }

IdentifierRecord record_for(const std::string& name, const std::string& path = "a.java",
                            int line = 1) {
    IdentifierRecord rec;
    rec.name = name;
    rec.language = "java";
    rec.path = path;
    rec.line = line;
    return rec;
}

CorpusReport corpus_of(const std::vector<IdentifierRecord>& records) {
    RuleConfig cfg;
    std::vector<NameReport> reports;
    for (const auto& r : records) reports.push_back(evaluate(r, lex(), cfg));
    return aggregate(std::move(reports));
}

}  // namespace

TEST_CASE("machine rendering is deterministic") {
    auto corpus = corpus_of({record_for("abcdefg"), record_for("getFullName", "b.java", 7)});
    CHECK(render_machine(corpus) == render_machine(corpus));
}

TEST_CASE("machine document carries the pinned schema") {
    auto corpus = corpus_of({record_for("abcdefg", "a.java", 3)});
    std::string bytes = render_machine(corpus);
    CHECK(bytes.back() == '\n');

    auto doc = nlohmann::json::parse(bytes);
    CHECK(doc["version"] == "1");
    REQUIRE(doc.contains("summary"));
    REQUIRE(doc.contains("findings"));
    REQUIRE(doc.contains("analytics"));

    bool saw_r4 = false;
    for (const auto& f : doc["findings"]) {
        if (f["rule"] == "R4_DICTIONARY") {
            saw_r4 = true;
            CHECK(f["evidence"] == nlohmann::json::array({"abcdefg"}));
            CHECK(f["path"] == "a.java");
            CHECK(f["line"] == 3);
        }
    }
    CHECK(saw_r4);
}

TEST_CASE("floats render with exactly four decimals") {
    auto corpus = corpus_of({record_for("getFullName")});
    std::string bytes = render_machine(corpus);
    CHECK(bytes.find("\"mean_score\":1.0000") != std::string::npos);

    auto flagged = corpus_of({record_for("abcdefg")});
    std::string flagged_bytes = render_machine(flagged);
    CHECK(flagged_bytes.find("\"weight\":97.2200") != std::string::npos);
}

TEST_CASE("empty corpus renders without mean score or dominant style") {
    CorpusReport empty = aggregate({});
    std::string bytes = render_machine(empty);
    auto doc = nlohmann::json::parse(bytes);
    CHECK(doc["summary"]["identifier_count"] == 0);
    CHECK(doc["summary"]["finding_count"] == 0);
    CHECK_FALSE(doc["summary"].contains("mean_score"));
    CHECK_FALSE(doc["summary"].contains("dominant_style"));
    CHECK(doc["findings"].empty());
}

TEST_CASE("object keys come out sorted") {
    auto corpus = corpus_of({record_for("abcdefg")});
    std::string bytes = render_machine(corpus);
    std::size_t analytics = bytes.find("\"analytics\"");
    std::size_t findings = bytes.find("\"findings\"");
    std::size_t summary = bytes.find("\"summary\"");
    std::size_t version = bytes.find("\"version\"");
    REQUIRE(analytics != std::string::npos);
    CHECK(analytics < findings);
    CHECK(findings < summary);
    CHECK(summary < version);
}

TEST_CASE("findings sort by path, line, then rule") {
    auto corpus = corpus_of({
        record_for("abcdefg", "z.java", 9),
        record_for("get_QWE", "a.java", 5),
        record_for("x_cached_node", "a.java", 2),
    });
    std::string bytes = render_machine(corpus);
    auto doc = nlohmann::json::parse(bytes);
    std::vector<std::pair<std::string, int>> order;
    for (const auto& f : doc["findings"])
        order.emplace_back(f["path"].get<std::string>(), f["line"].get<int>());
    for (std::size_t i = 1; i < order.size(); ++i) CHECK(order[i - 1] <= order[i]);
    REQUIRE(!order.empty());
    CHECK(order.front().first == "a.java");
    CHECK(order.back().first == "z.java");
}

TEST_CASE("text rendering shares ordering and counts with machine format") {
    auto corpus = corpus_of({
        record_for("abcdefg", "z.java", 9),
        record_for("get_QWE", "a.java", 5),
    });
    RenderOptions opts;
    std::string text = render_text(corpus, opts);
    auto doc = nlohmann::json::parse(render_machine(corpus));

    std::size_t lines = 0;
    std::size_t pos = 0;
    std::vector<std::size_t> offsets;
    while ((pos = text.find(": [R", pos)) != std::string::npos) {
        ++lines;
        offsets.push_back(pos);
        ++pos;
    }
    CHECK(lines == doc["findings"].size());
    CHECK(text.find("a.java:5") < text.find("z.java:9"));
}

TEST_CASE("text summary reports zero findings plainly") {
    auto corpus = corpus_of({record_for("getFullName")});
    RenderOptions opts;
    std::string text = render_text(corpus, opts);
    CHECK(text.find("0 findings") != std::string::npos);
}

TEST_CASE("text rendering includes style rule lines and the histogram") {
    RuleConfig cfg;
    std::vector<NameReport> reports;
    reports.push_back(evaluate(record_for("garbage_collection"), lex(), cfg, NamingStyle::Camel));
    auto corpus = aggregate(std::move(reports));
    RenderOptions opts;
    std::string text = render_text(corpus, opts);
    CHECK(text.find("[R1_STYLE]") != std::string::npos);
    CHECK(text.find("word-count histogram") != std::string::npos);
    CHECK(text.find("2: 1") != std::string::npos);
}

TEST_CASE("histogram lists every word count from one to the maximum") {
    auto corpus = corpus_of({record_for("getLongCachedValueBufferName")});
    RenderOptions opts;
    std::string text = render_text(corpus, opts);
    for (const char* line : {"1: 0", "2: 0", "3: 0", "4: 0", "5: 0", "6: 1"})
        CHECK(text.find(line) != std::string::npos);
}

TEST_CASE("exit codes follow fail_on") {
    auto errors = corpus_of({record_for("get_QWE")});       // R8 is ERROR weight
    auto warns = corpus_of({record_for("repr")});           // R7 is WARN weight
    auto clean = corpus_of({record_for("getFullName")});

    RenderOptions opts;
    opts.fail_on = FailOn::Error;
    CHECK(exit_code(errors, opts) == 1);
    CHECK(exit_code(warns, opts) == 0);
    CHECK(exit_code(clean, opts) == 0);

    opts.fail_on = FailOn::Warn;
    CHECK(exit_code(errors, opts) == 1);
    CHECK(exit_code(warns, opts) == 1);
    CHECK(exit_code(clean, opts) == 0);

    opts.fail_on = FailOn::Never;
    CHECK(exit_code(errors, opts) == 0);
}

TEST_CASE("equal reports render byte-identically after canonical ordering") {
    auto a = corpus_of({record_for("abcdefg", "a.java", 1), record_for("fido", "b.java", 2)});
    // Same records evaluated in a different order.
    auto b = corpus_of({record_for("fido", "b.java", 2), record_for("abcdefg", "a.java", 1)});
    CHECK(render_machine(a) == render_machine(b));
}
