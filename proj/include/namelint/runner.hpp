#pragma once

#include <algorithm>
#include <filesystem>
#include <future>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "namelint/config.hpp"
#include "namelint/corpus.hpp"
#include "namelint/ingest.hpp"
#include "namelint/report.hpp"

namespace namelint {

namespace detail {

inline bool is_identifier_list_file(const std::filesystem::path& path) {
    std::string ext = path.extension().string();
    for (char& c : ext) c = to_lower_ch(c);
    return ext == ".jsonl" || ext == ".ndjson";
}

inline bool glob_match_any(const std::vector<std::regex>& globs, const std::string& path) {
    for (const auto& g : globs)
        if (std::regex_match(path, g)) return true;
    return false;
}

inline std::vector<std::regex> compile_globs(const std::vector<std::string>& globs) {
    std::vector<std::regex> out;
    for (const auto& g : globs) {
        try {
            out.emplace_back(TestPatterns::glob_to_regex(g));
        } catch (const std::regex_error& e) {
            throw ConfigError("invalid glob \"" + g + "\": " + e.what());
        }
    }
    return out;
}

// Expands files and directories into a deterministic, filtered file list.
inline std::vector<std::filesystem::path> collect_input_files(
    const std::vector<std::string>& paths, const AppConfig& config, std::ostream& err) {
    std::vector<std::regex> include = compile_globs(config.include_globs);
    std::vector<std::regex> exclude = compile_globs(config.exclude_globs);

    auto admitted = [&](const std::filesystem::path& p) {
        std::string text = p.generic_string();
        if (!include.empty() && !glob_match_any(include, text)) return false;
        if (glob_match_any(exclude, text)) return false;
        return true;
    };

    std::vector<std::filesystem::path> files;
    for (const auto& raw : paths) {
        std::filesystem::path path(raw);
        if (std::filesystem::is_directory(path)) {
            for (auto it = std::filesystem::recursive_directory_iterator(path);
                 it != std::filesystem::recursive_directory_iterator(); ++it) {
                if (it->is_regular_file() && admitted(it->path())) files.push_back(it->path());
            }
        } else if (std::filesystem::is_regular_file(path)) {
            if (admitted(path)) files.push_back(path);
        } else {
            throw InputError("no such file or directory: " + raw);
        }
    }
    std::sort(files.begin(), files.end());
    files.erase(std::unique(files.begin(), files.end()), files.end());

    std::vector<std::filesystem::path> usable;
    for (const auto& f : files) {
        if (is_identifier_list_file(f) || !extension_language(f).empty()) {
            usable.push_back(f);
        } else {
            err << "namelint: skipping " << f.generic_string() << " (unknown extension)\n";
        }
    }
    return usable;
}

inline std::vector<IdentifierRecord> ingest_files(const std::vector<std::filesystem::path>& files,
                                                  const AppConfig& config) {
    TestPatterns patterns(config.test_patterns);
    std::vector<IdentifierRecord> records;
    for (const auto& file : files) {
        std::vector<IdentifierRecord> batch;
        if (is_identifier_list_file(file))
            batch = read_identifier_file(file);
        else
            batch = scan_source(file, "auto");
        for (auto& rec : batch) records.push_back(classify_test_method(std::move(rec), patterns));
    }
    std::stable_sort(records.begin(), records.end(),
                     [](const IdentifierRecord& a, const IdentifierRecord& b) {
                         return std::tie(a.path, a.line, a.name) < std::tie(b.path, b.line, b.name);
                     });
    return records;
}

// Evaluates records across `jobs` shards; shard boundaries never affect
// the result because outputs are concatenated in input order.
inline std::vector<NameReport> evaluate_all(const std::vector<IdentifierRecord>& records,
                                            const Lexicon& lexicon, const RuleConfig& rules,
                                            std::optional<NamingStyle> corpus_style, int jobs) {
    std::vector<NameReport> reports(records.size());
    if (records.empty()) return reports;
    int workers = std::max(1, std::min<int>(jobs, static_cast<int>(records.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < records.size(); ++i)
            reports[i] = evaluate(records[i], lexicon, rules, corpus_style);
        return reports;
    }
    std::vector<std::future<void>> futures;
    std::size_t chunk = (records.size() + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = std::min(records.size(), begin + chunk);
        if (begin >= end) break;
        futures.push_back(std::async(std::launch::async, [&, begin, end] {
            for (std::size_t i = begin; i < end; ++i)
                reports[i] = evaluate(records[i], lexicon, rules, corpus_style);
        }));
    }
    for (auto& f : futures) f.get();
    return reports;
}

inline CorpusReport analyze_records(const std::vector<IdentifierRecord>& records,
                                    const Lexicon& lexicon, const AppConfig& config) {
    std::vector<NameReport> reports =
        evaluate_all(records, lexicon, config.rules, config.rules.style_override, config.jobs);
    CorpusReport corpus = aggregate(std::move(reports));
    std::optional<NamingStyle> target =
        config.rules.style_override ? config.rules.style_override : corpus.dominant_style;
    if (target) corpus = aggregate(restyle_pass(std::move(corpus.reports), *target, config.rules));
    return corpus;
}

}  // namespace detail

/// check: ingest, evaluate with a consistency pass, render, and map the
/// findings to an exit code.
inline int run_check(const std::vector<std::string>& paths, const AppConfig& config,
                     std::ostream& out, std::ostream& err) {
    std::vector<std::filesystem::path> files = detail::collect_input_files(paths, config, err);
    if (files.empty()) throw InputError("no inputs matched");
    Lexicon lexicon = load_lexicon(config.lexicon);
    std::vector<IdentifierRecord> records = detail::ingest_files(files, config);
    CorpusReport corpus = detail::analyze_records(records, lexicon, config);

    RenderOptions opts = config.render_options();
    if (config.format == OutputFormat::Machine)
        out << render_machine(corpus);
    else
        out << render_text(corpus, opts);
    return exit_code(corpus, opts);
}

/// analyze: corpus analytics only; never fails the build.
inline int run_analyze(const std::vector<std::string>& paths, const AppConfig& config,
                       std::ostream& out, std::ostream& err) {
    std::vector<std::filesystem::path> files = detail::collect_input_files(paths, config, err);
    if (files.empty()) throw InputError("no inputs matched");
    Lexicon lexicon = load_lexicon(config.lexicon);
    std::vector<IdentifierRecord> records = detail::ingest_files(files, config);
    CorpusReport corpus = detail::analyze_records(records, lexicon, config);

    RenderOptions opts = config.render_options();
    if (config.format == OutputFormat::Machine)
        out << render_machine(corpus);
    else
        out << render_analytics_text(corpus, opts);
    return 0;
}

namespace detail {

struct RuleDoc {
    const char* statement;
    const char* compliant;
    const char* non_compliant;
};

inline RuleDoc rule_doc(RuleId rule) {
    switch (rule) {
    case RuleId::R1Style:
        return {"The method name should use a standard naming style such as camelCase or "
                "underscore_case, applied consistently across the application.",
                "getFullName, getScriptState, call_with_default, garbage_collection, "
                "check_static_allocation_size",
                "getfullName, getscriptstate"};
    case RuleId::R2Grammar:
        return {"Method names with multiple words should be in a grammatically correct "
                "sentence structure.",
                "registerManagedResource", "managedResourceRegister"};
    case RuleId::R3Verb:
        return {"The method name should always contain a verb(s) or verb phrase that refers "
                "to the behavior of the method.",
                "manage_caching_sizes, computeProductBlockingSizes, get_cached_node",
                "x_cached_node"};
    case RuleId::R4Dictionary:
        return {"Developers should use only natural language dictionary words and/or "
                "familiar/domain-relevant terms.",
                "findLength", "abcdefg, cccc, aa2020"};
    case RuleId::R5FullWords:
        return {"The method name should use full words rather than a single letter to "
                "clearly indicate the task of the method.",
                "dbConnection", "c"};
    case RuleId::R6Slang:
        return {"The method name should not contain personal expressions, idioms, or "
                "unknown slang.",
                "computeProductBlockingSizes", "fido, cutting_corners, CurveBall"};
    case RuleId::R7Abbreviation:
        return {"The method name should contain only known or standard abbreviated terms; "
                "a poor abbreviation has multiple possible expansions or interpretations.",
                "getStr, pyConnection, get_algo, db_connection", "repr, getProtoNameNode"};
    case RuleId::R8Acronym:
        return {"The method name should contain only known or standard acronyms; a poor "
                "acronym has multiple possible expansions or is not used within the domain.",
                "GUI_interface, get_URL, get_FIFO, DOM_tree", "get_QWE, SendAAAAA"};
    case RuleId::R9PrefixSuffix:
        return {"The method name should not contain a prefix/suffix that is a term from "
                "the system.  Does not apply to languages such as C that do not have "
                "namespaces.",
                "getPath", "gimpItemGetPath, swift_stdlib_u_char"};
    case RuleId::R10Length:
        return {"The number of words in a method name should stay within a fixed maximum; "
                "test methods may run longer.",
                "manage_caching_sizes", "names longer than the configured maximum"};
    case RuleId::R11Hungarian:
        return {"Never use Hungarian notation: method names should not encode types in "
                "prefixes.  Disabled unless explicitly enabled.",
                "isValid, getName", "boolIsValid, stringGetName"};
    }
    return {"", "", ""};
}

}  // namespace detail

/// explain: the rule's statement, default weight, and examples.
inline std::string run_explain(std::string_view rule_text) {
    RuleId rule;
    if (!rule_id_from_string(rule_text, rule))
        throw ConfigError("unknown rule id: " + std::string(rule_text));
    detail::RuleDoc doc = detail::rule_doc(rule);
    std::ostringstream out;
    out << to_string(rule) << "\n";
    out << "  " << doc.statement << "\n";
    out << "  default weight: " << detail::format_fixed2(default_weight(rule)) << "\n";
    if (rule == RuleId::R10Length) {
        RuleConfig defaults;
        out << "  defaults: soft=" << defaults.soft_words << " max=" << defaults.max_words << "\n";
    }
    out << "  compliant: " << doc.compliant << "\n";
    out << "  non-compliant: " << doc.non_compliant << "\n";
    return out.str();
}

/// debug: tokenizer, tagger, and rule internals for a single name.
inline std::string run_debug(const std::string& name, const AppConfig& config) {
    if (!valid_identifier_name(name))
        throw ConfigError("not a valid identifier: \"" + name + "\"");
    Lexicon lexicon = load_lexicon(config.lexicon);

    IdentifierRecord record;
    record.name = name;
    record.kind = RecordKind::Method;
    record.language = "unknown";
    record.path = "<debug>";

    TokenizedName tokenized = split(name);
    TaggedName tagged = tag(tokenized, lexicon);
    NameReport report = evaluate(record, lexicon, config.rules, config.rules.style_override);

    std::ostringstream out;
    out << "name: " << name << "\n";
    out << "style: " << to_string(tokenized.style) << "\n";
    out << "tokens:\n";
    for (std::size_t i = 0; i < tokenized.tokens.size(); ++i) {
        const Token& t = tokenized.tokens[i];
        TokenClass cls = classify_token(t, lexicon);
        out << "  " << t.text << "  kind=" << to_string(t.kind) << "  pos="
            << to_string(tagged.tags[i]) << "  class=" << to_string(cls.value);
        if (!cls.expansions.empty()) {
            out << " {" << detail::join(cls.expansions, ", ") << "}";
        }
        out << "\n";
    }
    out << "pattern: " << to_string(report.pattern) << "\n";
    out << "rules:\n";
    for (RuleId r : kAllRules) {
        if (!report.applicable.count(r)) {
            out << "  " << to_string(r) << ": not applicable\n";
            continue;
        }
        const RuleFinding* hit = nullptr;
        for (const RuleFinding& f : report.findings)
            if (f.rule == r) hit = &f;
        if (hit)
            out << "  " << to_string(r) << ": " << to_string(hit->severity) << " " << hit->message
                << "\n";
        else
            out << "  " << to_string(r) << ": ok\n";
    }
    out << "score: " << detail::format_fixed4(report.score) << "\n";
    return out.str();
}

}  // namespace namelint
