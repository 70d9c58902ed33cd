#include <catch2/catch_amalgamated.hpp>

#include "namelint/rules.hpp"

using namespace namelint;

namespace {

const Lexicon& lex() { return default_lexicon(); }

IdentifierRecord record_for(const std::string& name, const std::string& language = "java",
                            RecordKind kind = RecordKind::Method) {
    IdentifierRecord rec;
    rec.name = name;
    rec.kind = kind;
    rec.language = language;
    rec.path = "src/a." + language;
    rec.line = 1;
    return rec;
}

bool has_rule(const NameReport& report, RuleId rule) {
    for (const auto& f : report.findings)
        if (f.rule == rule) return true;
    return false;
}

const RuleFinding* find_rule(const NameReport& report, RuleId rule) {
    for (const auto& f : report.findings)
        if (f.rule == rule) return &f;
    return nullptr;
}

}  // namespace

TEST_CASE("default weights match the surveyed agreement sums") {
    CHECK(default_weight(RuleId::R1Style) == 98.71);
    CHECK(default_weight(RuleId::R2Grammar) == 78.72);
    CHECK(default_weight(RuleId::R3Verb) == 84.64);
    CHECK(default_weight(RuleId::R4Dictionary) == 97.22);
    CHECK(default_weight(RuleId::R5FullWords) == 96.89);
    CHECK(default_weight(RuleId::R6Slang) == 89.08);
    CHECK(default_weight(RuleId::R7Abbreviation) == 93.49);
    CHECK(default_weight(RuleId::R8Acronym) == 95.82);
    CHECK(default_weight(RuleId::R9PrefixSuffix) == 89.32);
    CHECK(default_weight(RuleId::R10Length) == 81.00);
    CHECK(default_weight(RuleId::R11Hungarian) == 50.00);
}

TEST_CASE("R1: mixed style always flagged, deviation only against a target") {
    RuleConfig cfg;
    CHECK_FALSE(check_style(split("getFullName"), cfg, NamingStyle::Camel));
    CHECK(check_style(split("garbage_collection"), cfg, NamingStyle::Camel));
    CHECK_FALSE(check_style(split("x"), cfg, NamingStyle::Camel));
    CHECK_FALSE(check_style(split("getFullName"), cfg, {}));
    CHECK(check_style(split("getFull_name"), cfg, {}));  // MIXED needs no target

    cfg.style_override = NamingStyle::Snake;
    CHECK(check_style(split("getFullName"), cfg, NamingStyle::Camel));  // override wins
}

TEST_CASE("R1: pascal/camel equivalence option") {
    RuleConfig cfg;
    CHECK(check_style(split("GetValue"), cfg, NamingStyle::Camel));
    cfg.pascal_camel_equivalent = true;
    CHECK_FALSE(check_style(split("GetValue"), cfg, NamingStyle::Camel));
    CHECK(check_style(split("get_value"), cfg, NamingStyle::Camel));
}

TEST_CASE("R2: grammar findings only for OTHER patterns") {
    RuleConfig cfg;
    auto compliant = evaluate(record_for("registerManagedResource"), lex(), cfg);
    CHECK_FALSE(has_rule(compliant, RuleId::R2Grammar));

    auto broken = evaluate(record_for("managedResourceRegister"), lex(), cfg);
    CHECK(has_rule(broken, RuleId::R2Grammar));

    auto single = evaluate(record_for("length"), lex(), cfg);
    CHECK_FALSE(single.applicable.count(RuleId::R2Grammar));
    CHECK_FALSE(has_rule(single, RuleId::R2Grammar));
}

TEST_CASE("R3: verb phrases pass, noun phrases downgrade under the accessor exemption") {
    RuleConfig cfg;
    CHECK_FALSE(has_rule(evaluate(record_for("manage_caching_sizes"), lex(), cfg), RuleId::R3Verb));

    auto flagged = evaluate(record_for("x_cached_node"), lex(), cfg);
    const RuleFinding* f = find_rule(flagged, RuleId::R3Verb);
    REQUIRE(f);
    CHECK(f->severity == Severity::Info);  // noun phrase + exemption

    auto accessor = evaluate(record_for("length"), lex(), cfg);
    const RuleFinding* acc = find_rule(accessor, RuleId::R3Verb);
    REQUIRE(acc);
    CHECK(acc->severity == Severity::Info);

    cfg.accessor_exemption = false;
    auto strict = evaluate(record_for("length"), lex(), cfg);
    const RuleFinding* sf = find_rule(strict, RuleId::R3Verb);
    REQUIRE(sf);
    CHECK(sf->severity != Severity::Info);
}

TEST_CASE("R4: unknown tokens and digit runs are evidence") {
    RuleConfig cfg;
    CHECK_FALSE(has_rule(evaluate(record_for("findLength"), lex(), cfg), RuleId::R4Dictionary));

    auto junk = evaluate(record_for("abcdefg"), lex(), cfg);
    const RuleFinding* f = find_rule(junk, RuleId::R4Dictionary);
    REQUIRE(f);
    CHECK(f->evidence == std::vector<std::string>{"abcdefg"});

    auto digits = evaluate(record_for("aa2020"), lex(), cfg);
    const RuleFinding* d = find_rule(digits, RuleId::R4Dictionary);
    REQUIRE(d);
    CHECK(d->evidence == std::vector<std::string>{"aa", "2020"});
}

TEST_CASE("R5: single letters flagged") {
    RuleConfig cfg;
    CHECK_FALSE(has_rule(evaluate(record_for("dbConnection"), lex(), cfg), RuleId::R5FullWords));
    CHECK(has_rule(evaluate(record_for("c"), lex(), cfg), RuleId::R5FullWords));
    auto xcn = evaluate(record_for("x_cached_node"), lex(), cfg);
    const RuleFinding* f = find_rule(xcn, RuleId::R5FullWords);
    REQUIRE(f);
    CHECK(f->evidence == std::vector<std::string>{"x"});
}

TEST_CASE("R6: slang, idioms, and split idiom windows") {
    RuleConfig cfg;
    CHECK(has_rule(evaluate(record_for("fido"), lex(), cfg), RuleId::R6Slang));
    auto idiom = evaluate(record_for("cutting_corners"), lex(), cfg);
    const RuleFinding* f = find_rule(idiom, RuleId::R6Slang);
    REQUIRE(f);
    CHECK(f->evidence == std::vector<std::string>{"cutting", "corners"});
    CHECK(has_rule(evaluate(record_for("CurveBall"), lex(), cfg), RuleId::R6Slang));
    CHECK_FALSE(
        has_rule(evaluate(record_for("computeProductBlockingSizes"), lex(), cfg), RuleId::R6Slang));
    // The idiom words alone are ordinary dictionary words.
    CHECK_FALSE(has_rule(evaluate(record_for("cutting_board"), lex(), cfg), RuleId::R6Slang));
}

TEST_CASE("R7: ambiguous abbreviations flagged, known ones pass") {
    RuleConfig cfg;
    CHECK_FALSE(has_rule(evaluate(record_for("get_algo"), lex(), cfg), RuleId::R7Abbreviation));
    CHECK_FALSE(has_rule(evaluate(record_for("getStr"), lex(), cfg), RuleId::R7Abbreviation));

    auto repr = evaluate(record_for("repr"), lex(), cfg);
    const RuleFinding* f = find_rule(repr, RuleId::R7Abbreviation);
    REQUIRE(f);
    CHECK(f->message.find("repair") != std::string::npos);
    CHECK(f->message.find("representation") != std::string::npos);

    auto proto = evaluate(record_for("getProtoNameNode"), lex(), cfg);
    const RuleFinding* p = find_rule(proto, RuleId::R7Abbreviation);
    REQUIRE(p);
    CHECK(p->evidence == std::vector<std::string>{"Proto"});
}

TEST_CASE("R8: unknown acronyms flagged") {
    RuleConfig cfg;
    CHECK_FALSE(has_rule(evaluate(record_for("get_URL"), lex(), cfg), RuleId::R8Acronym));
    CHECK(has_rule(evaluate(record_for("get_QWE"), lex(), cfg), RuleId::R8Acronym));
    auto f = find_rule(evaluate(record_for("SendAAAAA"), lex(), cfg), RuleId::R8Acronym);
    REQUIRE(f);
    CHECK(f->evidence == std::vector<std::string>{"AAAAA"});
}

TEST_CASE("R9: project terms as prefix/suffix, exempt without namespaces") {
    RuleConfig cfg;
    Lexicon project = lex();
    project.project_terms = {"gimp", "swift"};

    auto java = evaluate(record_for("gimpItemGetPath", "java"), project, cfg);
    CHECK(has_rule(java, RuleId::R9PrefixSuffix));
    CHECK(java.applicable.count(RuleId::R9PrefixSuffix));

    auto c = evaluate(record_for("gimpItemGetPath", "c"), project, cfg);
    CHECK_FALSE(has_rule(c, RuleId::R9PrefixSuffix));
    CHECK_FALSE(c.applicable.count(RuleId::R9PrefixSuffix));

    auto swift = evaluate(record_for("swift_stdlib_u_char", "cpp"), project, cfg);
    const RuleFinding* f = find_rule(swift, RuleId::R9PrefixSuffix);
    REQUIRE(f);
    CHECK(f->evidence == std::vector<std::string>{"swift"});
}

TEST_CASE("R9: per-record project term hints count") {
    RuleConfig cfg;
    IdentifierRecord rec = record_for("gimpItemGetPath", "java");
    rec.project_terms_hint = {"gimp"};
    CHECK(has_rule(evaluate(rec, lex(), cfg), RuleId::R9PrefixSuffix));
}

TEST_CASE("R10: word-count thresholds and the test exemption") {
    RuleConfig cfg;
    auto eight = evaluate(record_for("one_two_three_four_five_six_seven_eight"), lex(), cfg);
    const RuleFinding* f8 = find_rule(eight, RuleId::R10Length);
    REQUIRE(f8);
    CHECK(f8->severity == Severity::Error);

    auto six = evaluate(record_for("one_two_three_four_five_six"), lex(), cfg);
    const RuleFinding* f6 = find_rule(six, RuleId::R10Length);
    REQUIRE(f6);
    CHECK(f6->severity == Severity::Warn);

    auto five = evaluate(record_for("one_two_three_four_five"), lex(), cfg);
    CHECK_FALSE(has_rule(five, RuleId::R10Length));

    auto test_name = evaluate(
        record_for("one_two_three_four_five_six_seven_eight_nine", "java", RecordKind::Test),
        lex(), cfg);
    CHECK_FALSE(has_rule(test_name, RuleId::R10Length));
    CHECK_FALSE(test_name.applicable.count(RuleId::R10Length));

    // Digit runs do not count as words.
    auto digits = evaluate(record_for("one_two_three_four_five_2020"), lex(), cfg);
    CHECK_FALSE(has_rule(digits, RuleId::R10Length));
}

TEST_CASE("R11: disabled by default, flags type prefixes when enabled") {
    RuleConfig cfg;
    auto silent = evaluate(record_for("boolIsValid"), lex(), cfg);
    CHECK_FALSE(silent.applicable.count(RuleId::R11Hungarian));
    CHECK_FALSE(has_rule(silent, RuleId::R11Hungarian));

    cfg.enabled[RuleId::R11Hungarian] = true;
    CHECK(has_rule(evaluate(record_for("boolIsValid"), lex(), cfg), RuleId::R11Hungarian));
    CHECK(has_rule(evaluate(record_for("stringGetName"), lex(), cfg), RuleId::R11Hungarian));
    CHECK_FALSE(has_rule(evaluate(record_for("getFullName"), lex(), cfg), RuleId::R11Hungarian));
}

TEST_CASE("severity follows the consensus bands") {
    RuleConfig cfg;
    auto r4 = find_rule(evaluate(record_for("abcdefg"), lex(), cfg), RuleId::R4Dictionary);
    REQUIRE(r4);
    CHECK(r4->severity == Severity::Error);  // 97.22 >= 95

    auto r7 = find_rule(evaluate(record_for("repr"), lex(), cfg), RuleId::R7Abbreviation);
    REQUIRE(r7);
    CHECK(r7->severity == Severity::Warn);  // 93.49 in [85, 95)

    auto r2 = find_rule(evaluate(record_for("managedResourceRegister"), lex(), cfg),
                        RuleId::R2Grammar);
    REQUIRE(r2);
    CHECK(r2->severity == Severity::Warn);  // 78.72 < 85 stays WARN by default

    cfg.low_consensus_info = true;
    auto r2_info = find_rule(evaluate(record_for("managedResourceRegister"), lex(), cfg),
                             RuleId::R2Grammar);
    REQUIRE(r2_info);
    CHECK(r2_info->severity == Severity::Info);
}

TEST_CASE("score arithmetic against the hand-computed constant") {
    RuleConfig cfg;
    // getFullName under a snake-style corpus fails R1 only; all ten
    // default rules are applicable for a multi-word java method name.
    auto report = evaluate(record_for("getFullName", "java"), lex(), cfg, NamingStyle::Snake);
    REQUIRE(report.findings.size() == 1);
    CHECK(report.findings[0].rule == RuleId::R1Style);
    CHECK(report.applicable.size() == 10);
    CHECK(report.score == Catch::Approx(0.8909149178).epsilon(1e-9));
}

TEST_CASE("fully compliant names score 1") {
    RuleConfig cfg;
    auto report = evaluate(record_for("getFullName"), lex(), cfg);
    CHECK(report.findings.empty());
    CHECK(report.score == 1.0);
}

TEST_CASE("score monotonicity: removing a failed rule never lowers the score") {
    RuleConfig cfg;
    auto base = evaluate(record_for("x_qwzx_node"), lex(), cfg);  // fails R4 and R5 at least
    CHECK(base.score < 1.0);

    for (const auto& f : base.findings) {
        RuleConfig partial = cfg;
        partial.enabled[f.rule] = false;
        auto trimmed = evaluate(record_for("x_qwzx_node"), lex(), partial);
        CHECK(trimmed.score >= base.score);
    }
}

TEST_CASE("disabling one rule never changes another rule's findings") {
    RuleConfig cfg;
    auto base = evaluate(record_for("x_cached_node"), lex(), cfg);

    RuleConfig no_r5 = cfg;
    no_r5.enabled[RuleId::R5FullWords] = false;
    auto trimmed = evaluate(record_for("x_cached_node"), lex(), no_r5);

    for (const auto& f : base.findings) {
        if (f.rule == RuleId::R5FullWords) continue;
        bool still_there = false;
        for (const auto& g : trimmed.findings)
            if (g.rule == f.rule && g.message == f.message) still_there = true;
        CHECK(still_there);
    }
    CHECK_FALSE(has_rule(trimmed, RuleId::R5FullWords));
}

TEST_CASE("rule config validation") {
    RuleConfig cfg;
    cfg.soft_words = 9;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);

    RuleConfig weights;
    weights.weights[RuleId::R1Style] = 0.0;
    CHECK_THROWS_AS(weights.validate(), ConfigError);
    weights.weights[RuleId::R1Style] = 101.0;
    CHECK_THROWS_AS(weights.validate(), ConfigError);
}
