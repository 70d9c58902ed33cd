#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "namelint/grammar.hpp"
#include "namelint/ingest.hpp"
#include "namelint/lexicon.hpp"
#include "namelint/tokenizer.hpp"

namespace namelint {

enum class RuleId {
    R1Style,
    R2Grammar,
    R3Verb,
    R4Dictionary,
    R5FullWords,
    R6Slang,
    R7Abbreviation,
    R8Acronym,
    R9PrefixSuffix,
    R10Length,
    R11Hungarian,
};

inline constexpr std::array<RuleId, 11> kAllRules = {
    RuleId::R1Style,      RuleId::R2Grammar,    RuleId::R3Verb,         RuleId::R4Dictionary,
    RuleId::R5FullWords,  RuleId::R6Slang,      RuleId::R7Abbreviation, RuleId::R8Acronym,
    RuleId::R9PrefixSuffix, RuleId::R10Length,  RuleId::R11Hungarian,
};

inline const char* to_string(RuleId r) {
    switch (r) {
    case RuleId::R1Style: return "R1_STYLE";
    case RuleId::R2Grammar: return "R2_GRAMMAR";
    case RuleId::R3Verb: return "R3_VERB";
    case RuleId::R4Dictionary: return "R4_DICTIONARY";
    case RuleId::R5FullWords: return "R5_FULL_WORDS";
    case RuleId::R6Slang: return "R6_SLANG";
    case RuleId::R7Abbreviation: return "R7_ABBREVIATION";
    case RuleId::R8Acronym: return "R8_ACRONYM";
    case RuleId::R9PrefixSuffix: return "R9_PREFIX_SUFFIX";
    case RuleId::R10Length: return "R10_LENGTH";
    case RuleId::R11Hungarian: return "R11_HUNGARIAN";
    }
    return "R1_STYLE";
}

inline bool rule_id_from_string(std::string_view text, RuleId& out) {
    for (RuleId r : kAllRules) {
        if (text == to_string(r)) {
            out = r;
            return true;
        }
    }
    return false;
}

// Default rule weights: the surveyed strongly-agree + agree sums, in
// percent.  R10 uses the share of length answers within one step of the
// median; R11 was never surveyed and carries a neutral midpoint.
inline double default_weight(RuleId r) {
    switch (r) {
    case RuleId::R1Style: return 98.71;
    case RuleId::R2Grammar: return 78.72;
    case RuleId::R3Verb: return 84.64;
    case RuleId::R4Dictionary: return 97.22;
    case RuleId::R5FullWords: return 96.89;
    case RuleId::R6Slang: return 89.08;
    case RuleId::R7Abbreviation: return 93.49;
    case RuleId::R8Acronym: return 95.82;
    case RuleId::R9PrefixSuffix: return 89.32;
    case RuleId::R10Length: return 81.00;
    case RuleId::R11Hungarian: return 50.00;
    }
    return 50.00;
}

struct RuleConfig {
    std::map<RuleId, bool> enabled = [] {
        std::map<RuleId, bool> m;
        for (RuleId r : kAllRules) m[r] = r != RuleId::R11Hungarian;
        return m;
    }();
    std::map<RuleId, double> weights = [] {
        std::map<RuleId, double> m;
        for (RuleId r : kAllRules) m[r] = default_weight(r);
        return m;
    }();
    int max_words = 7;
    int soft_words = 5;
    bool accessor_exemption = true;
    bool test_exemption = true;
    std::optional<NamingStyle> style_override;
    std::set<std::string> languages_without_namespaces = {"c"};
    // Treat PascalCase as conforming in a camelCase corpus and vice versa
    // (some languages capitalize public methods).
    bool pascal_camel_equivalent = false;
    // Downgrade findings of rules below 85 weight from WARN to INFO.
    bool low_consensus_info = false;

    bool is_enabled(RuleId r) const {
        auto it = enabled.find(r);
        return it == enabled.end() ? r != RuleId::R11Hungarian : it->second;
    }
    double weight(RuleId r) const {
        auto it = weights.find(r);
        return it == weights.end() ? default_weight(r) : it->second;
    }

    void validate() const {
        if (soft_words > max_words)
            throw ConfigError("soft_words must not exceed max_words");
        if (max_words < 1) throw ConfigError("max_words must be positive");
        for (const auto& [rule, w] : weights) {
            if (!(w > 0.0 && w <= 100.0))
                throw ConfigError(std::string("weight for ") + to_string(rule) +
                                  " must be in (0, 100]");
        }
    }
};

enum class Severity {
    Error,
    Warn,
    Info,
};

inline const char* to_string(Severity s) {
    switch (s) {
    case Severity::Error: return "ERROR";
    case Severity::Warn: return "WARN";
    case Severity::Info: return "INFO";
    }
    return "WARN";
}

struct RuleFinding {
    RuleId rule = RuleId::R1Style;
    Severity severity = Severity::Warn;
    double weight = 0.0;
    std::string message;
    std::vector<std::string> evidence;
};

namespace detail {

// Consensus-driven severity: >= 95 ERROR, 85..95 WARN, below 85 WARN unless
// configured down to INFO.
inline Severity severity_for_weight(double weight, const RuleConfig& cfg) {
    if (weight >= 95.0) return Severity::Error;
    if (weight >= 85.0) return Severity::Warn;
    return cfg.low_consensus_info ? Severity::Info : Severity::Warn;
}

inline RuleFinding make_finding(RuleId rule, const RuleConfig& cfg, std::string message,
                                std::vector<std::string> evidence) {
    RuleFinding f;
    f.rule = rule;
    f.weight = cfg.weight(rule);
    f.severity = severity_for_weight(f.weight, cfg);
    f.message = std::move(message);
    f.evidence = std::move(evidence);
    return f;
}

inline std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

inline bool styles_equivalent(NamingStyle a, NamingStyle b, const RuleConfig& cfg) {
    if (a == b) return true;
    if (!cfg.pascal_camel_equivalent) return false;
    auto camelish = [](NamingStyle s) {
        return s == NamingStyle::Camel || s == NamingStyle::Pascal;
    };
    return camelish(a) && camelish(b);
}

}  // namespace detail

/// R1: consistent naming style.  Flags MIXED composition always, and any
/// multi-token name whose style deviates from the corpus/override style.
inline std::optional<RuleFinding> check_style(const TokenizedName& tokenized,
                                              const RuleConfig& cfg,
                                              std::optional<NamingStyle> corpus_style = {}) {
    std::vector<std::string> evidence{tokenized.original};
    if (!tokenized.leading_markers.empty())
        evidence.push_back(tokenized.leading_markers + "...");
    if (!tokenized.trailing_markers.empty())
        evidence.push_back("..." + tokenized.trailing_markers);

    if (tokenized.style == NamingStyle::Mixed)
        return detail::make_finding(RuleId::R1Style, cfg,
                                    "mixes separator and case conventions", std::move(evidence));

    std::optional<NamingStyle> target = cfg.style_override ? cfg.style_override : corpus_style;
    if (!target) return std::nullopt;
    if (tokenized.style == NamingStyle::SingleToken) return std::nullopt;
    if (detail::styles_equivalent(tokenized.style, *target, cfg)) return std::nullopt;
    return detail::make_finding(RuleId::R1Style, cfg,
                                std::string("style ") + to_string(tokenized.style) +
                                    " deviates from " + to_string(*target),
                                std::move(evidence));
}

/// R2: multi-word names need a recognized grammatical shape.
inline std::optional<RuleFinding> check_grammar(GrammarPattern pattern,
                                                const TokenizedName& tokenized,
                                                const RuleConfig& cfg) {
    if (pattern != GrammarPattern::Other) return std::nullopt;
    std::vector<std::string> evidence;
    for (const Token& t : tokenized.tokens) evidence.push_back(t.text);
    return detail::make_finding(RuleId::R2Grammar, cfg,
                                "word order does not form a grammatical phrase",
                                std::move(evidence));
}

/// R3: names should contain a verb or read as a verb phrase.  Plain noun
/// phrases are downgraded to INFO under the accessor exemption.
inline std::optional<RuleFinding> check_verb(GrammarPattern pattern, const TaggedName& tagged,
                                             const RuleConfig& cfg) {
    switch (pattern) {
    case GrammarPattern::VerbPhrase:
    case GrammarPattern::VerbPhrasePp:
    case GrammarPattern::SingleVerb:
    case GrammarPattern::Predicate:
        return std::nullopt;
    default:
        break;
    }
    std::vector<std::string> evidence;
    for (const Token& t : tagged.tokenized.tokens) evidence.push_back(t.text);
    RuleFinding f = detail::make_finding(RuleId::R3Verb, cfg,
                                         "does not read as a verb phrase", std::move(evidence));
    if (pattern == GrammarPattern::NounPhrase && cfg.accessor_exemption) {
        f.severity = Severity::Info;
        f.message = "noun phrase without a verb (accessor-style name)";
    }
    return f;
}

/// R4: every word should be a dictionary or domain term.  Unknown tokens
/// and digit runs are the evidence.
inline std::optional<RuleFinding> check_dictionary(const TokenizedName& tokenized,
                                                   const Lexicon& lexicon,
                                                   const RuleConfig& cfg) {
    std::vector<std::string> evidence;
    for (const Token& t : tokenized.tokens) {
        TokenClass cls = classify_token(t, lexicon);
        if (cls.value == TokenClassKind::Unknown || cls.value == TokenClassKind::Number)
            evidence.push_back(t.text);
    }
    if (evidence.empty()) return std::nullopt;
    std::string message = "not dictionary words: " + detail::join(evidence, ", ");
    return detail::make_finding(RuleId::R4Dictionary, cfg, std::move(message),
                                std::move(evidence));
}

/// R5: full words, not single letters.
inline std::optional<RuleFinding> check_full_words(const TokenizedName& tokenized,
                                                   const RuleConfig& cfg) {
    std::vector<std::string> evidence;
    for (const Token& t : tokenized.tokens)
        if (t.kind == TokenKind::SingleLetter) evidence.push_back(t.text);
    if (evidence.empty()) return std::nullopt;
    std::string message = "single-letter words: " + detail::join(evidence, ", ");
    return detail::make_finding(RuleId::R5FullWords, cfg, std::move(message),
                                std::move(evidence));
}

/// R6: no slang, idioms, or personal expressions.  Consecutive token
/// windows are joined and matched so split idioms are still caught.
inline std::optional<RuleFinding> check_slang(const TokenizedName& tokenized,
                                              const Lexicon& lexicon, const RuleConfig& cfg) {
    std::vector<std::string> evidence;
    const auto& tokens = tokenized.tokens;
    std::vector<bool> flagged(tokens.size(), false);
    for (std::size_t start = 0; start < tokens.size(); ++start) {
        std::string joined;
        for (std::size_t len = 1; len <= lexicon.slang_max_window && start + len <= tokens.size();
             ++len) {
            joined += tokens[start + len - 1].normalized;
            if (lexicon.slang_concat.count(joined)) {
                for (std::size_t i = start; i < start + len; ++i) flagged[i] = true;
            }
        }
    }
    for (std::size_t i = 0; i < tokens.size(); ++i)
        if (flagged[i]) evidence.push_back(tokens[i].text);
    if (evidence.empty()) return std::nullopt;
    std::string message = "slang or idiom: " + detail::join(evidence, " ");
    return detail::make_finding(RuleId::R6Slang, cfg, std::move(message), std::move(evidence));
}

/// R7: abbreviations must be known and unambiguous.  Unknown words that
/// prefix a longer dictionary word look like stray abbreviations.
inline std::optional<RuleFinding> check_abbreviations(const TokenizedName& tokenized,
                                                      const Lexicon& lexicon,
                                                      const RuleConfig& cfg) {
    std::vector<std::string> evidence;
    std::string detail_text;
    for (const Token& t : tokenized.tokens) {
        if (t.kind != TokenKind::Word) continue;
        TokenClass cls = classify_token(t, lexicon);
        if (cls.value == TokenClassKind::AmbiguousAbbreviation) {
            evidence.push_back(t.text);
            if (!detail_text.empty()) detail_text += "; ";
            detail_text += t.text + " may mean " + detail::join(cls.expansions, " or ");
        } else if (cls.value == TokenClassKind::Unknown &&
                   lexicon.prefix_of_dictionary_word(t.normalized)) {
            evidence.push_back(t.text);
            if (!detail_text.empty()) detail_text += "; ";
            detail_text += t.text + " looks like an abbreviation";
        }
    }
    if (evidence.empty()) return std::nullopt;
    return detail::make_finding(RuleId::R7Abbreviation, cfg, "ambiguous abbreviation: " + detail_text,
                                std::move(evidence));
}

/// R8: acronyms must be known.
inline std::optional<RuleFinding> check_acronyms(const TokenizedName& tokenized,
                                                 const Lexicon& lexicon, const RuleConfig& cfg) {
    std::vector<std::string> evidence;
    for (const Token& t : tokenized.tokens) {
        if (t.kind != TokenKind::Acronym) continue;
        if (classify_token(t, lexicon).value == TokenClassKind::UnknownAcronym)
            evidence.push_back(t.text);
    }
    if (evidence.empty()) return std::nullopt;
    std::string message = "unknown acronym: " + detail::join(evidence, ", ");
    return detail::make_finding(RuleId::R8Acronym, cfg, std::move(message), std::move(evidence));
}

/// R9: no system-term prefix or suffix.  Callers must not invoke this for
/// languages without namespaces; evaluate() handles that exemption.
inline std::optional<RuleFinding> check_prefix_suffix(const IdentifierRecord& record,
                                                      const TokenizedName& tokenized,
                                                      const Lexicon& lexicon,
                                                      const RuleConfig& cfg) {
    if (cfg.languages_without_namespaces.count(record.language)) return std::nullopt;
    if (tokenized.tokens.size() < 2) return std::nullopt;

    auto is_project_term = [&](const std::string& w) {
        if (lexicon.project_terms.count(w)) return true;
        for (const auto& hint : record.project_terms_hint)
            if (detail::lower_copy(hint) == w) return true;
        return false;
    };
    std::vector<std::string> evidence;
    std::string where;
    if (is_project_term(tokenized.tokens.front().normalized)) {
        evidence.push_back(tokenized.tokens.front().text);
        where = "prefix";
    }
    if (is_project_term(tokenized.tokens.back().normalized)) {
        evidence.push_back(tokenized.tokens.back().text);
        where = where.empty() ? "suffix" : "prefix and suffix";
    }
    if (evidence.empty()) return std::nullopt;
    std::string message = "system term used as " + where + ": " + detail::join(evidence, ", ");
    return detail::make_finding(RuleId::R9PrefixSuffix, cfg, std::move(message),
                                std::move(evidence));
}

/// R10: bounded word count.  Digit-run tokens do not count as words.
inline std::optional<RuleFinding> check_length(const IdentifierRecord& record,
                                               const TokenizedName& tokenized,
                                               const RuleConfig& cfg) {
    if (cfg.test_exemption && record.kind == RecordKind::Test) return std::nullopt;
    std::size_t count = tokenized.word_count();
    if (count <= static_cast<std::size_t>(cfg.soft_words)) return std::nullopt;

    RuleFinding f;
    f.rule = RuleId::R10Length;
    f.weight = cfg.weight(RuleId::R10Length);
    if (count > static_cast<std::size_t>(cfg.max_words)) {
        f.severity = Severity::Error;
        f.message = std::to_string(count) + " words exceed the maximum of " +
                    std::to_string(cfg.max_words);
    } else {
        f.severity = Severity::Warn;
        f.message = std::to_string(count) + " words exceed the preferred " +
                    std::to_string(cfg.soft_words);
    }
    return f;
}

/// R11 (off by default): no Hungarian-notation type prefixes.
inline std::optional<RuleFinding> check_hungarian(const TokenizedName& tokenized,
                                                  const RuleConfig& cfg) {
    static const std::unordered_set<std::string> kTypePrefixes = {
        "bool", "int", "str", "string", "float", "obj", "arr", "fn", "m", "f"};
    if (tokenized.tokens.size() < 2) return std::nullopt;
    const std::string& first = tokenized.tokens.front().normalized;
    if (!kTypePrefixes.count(first)) return std::nullopt;
    return detail::make_finding(RuleId::R11Hungarian, cfg,
                                "Hungarian-notation type prefix: " + first,
                                {tokenized.tokens.front().text});
}

// Full verdict for one identifier.
struct NameReport {
    IdentifierRecord record;
    TokenizedName tokenized;
    GrammarPattern pattern = GrammarPattern::Other;
    std::vector<RuleFinding> findings;
    std::set<RuleId> applicable;
    double score = 1.0;
};

namespace detail {

inline void recompute_score(NameReport& report, const RuleConfig& cfg) {
    double denom = 0.0;
    for (RuleId r : report.applicable) denom += cfg.weight(r);
    std::set<RuleId> failed;
    for (const RuleFinding& f : report.findings)
        if (report.applicable.count(f.rule)) failed.insert(f.rule);
    double lost = 0.0;
    for (RuleId r : failed) lost += cfg.weight(r);
    report.score = denom > 0.0 ? 1.0 - lost / denom : 1.0;
}

}  // namespace detail

/// Runs tokenizer, tagger, and every enabled applicable rule over one
/// record, producing the weighted per-name verdict.
inline NameReport evaluate(const IdentifierRecord& record, const Lexicon& lexicon,
                           const RuleConfig& cfg,
                           std::optional<NamingStyle> corpus_style = {}) {
    NameReport report;
    report.record = record;
    report.tokenized = split(record.name);
    TaggedName tagged = tag(report.tokenized, lexicon);
    report.pattern = classify_pattern(tagged);

    const bool multi_word = report.tokenized.tokens.size() >= 2;
    const bool namespace_capable = !cfg.languages_without_namespaces.count(record.language);
    const bool length_exempt = cfg.test_exemption && record.kind == RecordKind::Test;

    for (RuleId r : kAllRules) {
        if (!cfg.is_enabled(r)) continue;
        if (r == RuleId::R2Grammar && !multi_word) continue;
        if (r == RuleId::R9PrefixSuffix && !namespace_capable) continue;
        if (r == RuleId::R10Length && length_exempt) continue;
        report.applicable.insert(r);
    }

    auto consider = [&](RuleId r, std::optional<RuleFinding> finding) {
        if (report.applicable.count(r) && finding) report.findings.push_back(std::move(*finding));
    };
    consider(RuleId::R1Style, check_style(report.tokenized, cfg, corpus_style));
    consider(RuleId::R2Grammar, check_grammar(report.pattern, report.tokenized, cfg));
    consider(RuleId::R3Verb, check_verb(report.pattern, tagged, cfg));
    consider(RuleId::R4Dictionary, check_dictionary(report.tokenized, lexicon, cfg));
    consider(RuleId::R5FullWords, check_full_words(report.tokenized, cfg));
    consider(RuleId::R6Slang, check_slang(report.tokenized, lexicon, cfg));
    consider(RuleId::R7Abbreviation, check_abbreviations(report.tokenized, lexicon, cfg));
    consider(RuleId::R8Acronym, check_acronyms(report.tokenized, lexicon, cfg));
    consider(RuleId::R9PrefixSuffix, check_prefix_suffix(record, report.tokenized, lexicon, cfg));
    consider(RuleId::R10Length, check_length(record, report.tokenized, cfg));
    consider(RuleId::R11Hungarian, check_hungarian(report.tokenized, cfg));

    detail::recompute_score(report, cfg);
    return report;
}

}  // namespace namelint
