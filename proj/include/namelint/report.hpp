#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "namelint/corpus.hpp"

namespace namelint {

enum class OutputFormat {
    Text,
    Machine,
};

enum class FailOn {
    Error,
    Warn,
    Never,
};

inline bool output_format_from_string(std::string_view text, OutputFormat& out) {
    if (text == "text") { out = OutputFormat::Text; return true; }
    if (text == "machine") { out = OutputFormat::Machine; return true; }
    return false;
}

inline bool fail_on_from_string(std::string_view text, FailOn& out) {
    if (text == "error") { out = FailOn::Error; return true; }
    if (text == "warn") { out = FailOn::Warn; return true; }
    if (text == "never") { out = FailOn::Never; return true; }
    return false;
}

struct RenderOptions {
    OutputFormat format = OutputFormat::Text;
    FailOn fail_on = FailOn::Error;
    int top_n = 10;
};

namespace detail {

struct FlatFinding {
    const NameReport* report;
    const RuleFinding* finding;
};

// Canonical finding order: path, line, rule id, then name.
inline std::vector<FlatFinding> sorted_findings(const CorpusReport& corpus) {
    std::vector<FlatFinding> out;
    for (const NameReport& r : corpus.reports)
        for (const RuleFinding& f : r.findings) out.push_back({&r, &f});
    std::sort(out.begin(), out.end(), [](const FlatFinding& a, const FlatFinding& b) {
        return std::make_tuple(a.report->record.path, a.report->record.line,
                               std::string_view(to_string(a.finding->rule)),
                               a.report->record.name) <
               std::make_tuple(b.report->record.path, b.report->record.line,
                               std::string_view(to_string(b.finding->rule)),
                               b.report->record.name);
    });
    return out;
}

inline std::string format_fixed4(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", value);
    return buf;
}

inline std::string format_fixed2(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", value);
    return buf;
}

// Canonical JSON writer: object keys already sort lexicographically in
// nlohmann's default map, floats render with exactly four decimals.
inline void canonical_dump(const nlohmann::json& node, std::string& out) {
    switch (node.type()) {
    case nlohmann::json::value_t::object: {
        out += '{';
        bool first = true;
        for (auto it = node.begin(); it != node.end(); ++it) {
            if (!first) out += ',';
            first = false;
            out += nlohmann::json(it.key()).dump();
            out += ':';
            canonical_dump(it.value(), out);
        }
        out += '}';
        break;
    }
    case nlohmann::json::value_t::array: {
        out += '[';
        bool first = true;
        for (const auto& item : node) {
            if (!first) out += ',';
            first = false;
            canonical_dump(item, out);
        }
        out += ']';
        break;
    }
    case nlohmann::json::value_t::number_float:
        out += format_fixed4(node.get<double>());
        break;
    default:
        out += node.dump();
        break;
    }
}

inline std::size_t severity_count(const CorpusReport& corpus, Severity severity) {
    std::size_t n = 0;
    for (const NameReport& r : corpus.reports)
        for (const RuleFinding& f : r.findings)
            if (f.severity == severity) ++n;
    return n;
}

}  // namespace detail

/// Canonical machine-readable rendering.  Equal reports produce identical
/// bytes: keys sorted, findings ordered by (path, line, rule), floats with
/// exactly four decimals, trailing newline.
inline std::string render_machine(const CorpusReport& corpus) {
    using nlohmann::json;
    json doc;
    doc["version"] = "1";

    json summary;
    summary["identifier_count"] = corpus.reports.size();
    std::size_t finding_count = 0;
    for (const NameReport& r : corpus.reports) finding_count += r.findings.size();
    summary["finding_count"] = finding_count;
    summary["error_count"] = detail::severity_count(corpus, Severity::Error);
    summary["warn_count"] = detail::severity_count(corpus, Severity::Warn);
    summary["info_count"] = detail::severity_count(corpus, Severity::Info);
    if (corpus.mean_score) summary["mean_score"] = *corpus.mean_score;
    if (corpus.dominant_style) summary["dominant_style"] = to_string(*corpus.dominant_style);
    doc["summary"] = std::move(summary);

    json findings = json::array();
    for (const auto& [report, finding] : detail::sorted_findings(corpus)) {
        json f;
        f["path"] = report->record.path;
        f["line"] = report->record.line;
        f["name"] = report->record.name;
        f["rule"] = to_string(finding->rule);
        f["severity"] = to_string(finding->severity);
        f["weight"] = finding->weight;
        f["message"] = finding->message;
        f["evidence"] = finding->evidence;
        findings.push_back(std::move(f));
    }
    doc["findings"] = std::move(findings);

    json analytics;
    json styles;
    for (NamingStyle s : {NamingStyle::Camel, NamingStyle::Pascal, NamingStyle::Snake,
                          NamingStyle::Kebab, NamingStyle::ScreamingSnake,
                          NamingStyle::SingleToken, NamingStyle::Mixed}) {
        auto it = corpus.style_counts.find(s);
        styles[to_string(s)] = it == corpus.style_counts.end() ? 0 : it->second;
    }
    analytics["style_counts"] = std::move(styles);

    json histogram = json::array();
    if (!corpus.length_histogram.empty()) {
        std::size_t max_words = corpus.length_histogram.rbegin()->first;
        for (std::size_t k = 1; k <= max_words; ++k) {
            auto it = corpus.length_histogram.find(k);
            json bucket;
            bucket["words"] = k;
            bucket["count"] = it == corpus.length_histogram.end() ? 0 : it->second;
            histogram.push_back(std::move(bucket));
        }
    }
    analytics["length_histogram"] = std::move(histogram);

    json totals;
    for (RuleId r : kAllRules) {
        auto it = corpus.finding_totals.find(r);
        totals[to_string(r)] = it == corpus.finding_totals.end() ? 0 : it->second;
    }
    analytics["rule_totals"] = std::move(totals);

    json prefixes = json::array();
    for (const auto& [token, count] : corpus.prefix_candidates) {
        json p;
        p["token"] = token;
        p["count"] = count;
        prefixes.push_back(std::move(p));
    }
    analytics["prefix_candidates"] = std::move(prefixes);
    doc["analytics"] = std::move(analytics);

    std::string out;
    detail::canonical_dump(doc, out);
    out += '\n';
    return out;
}

/// Human-readable rendering: one line per finding, then a summary block
/// with the same ordering as the machine format.
inline std::string render_text(const CorpusReport& corpus, const RenderOptions& opts) {
    std::string out;
    for (const auto& [report, finding] : detail::sorted_findings(corpus)) {
        out += report->record.path;
        out += ':';
        out += std::to_string(report->record.line);
        out += ": [";
        out += to_string(finding->rule);
        out += "] ";
        out += report->record.name;
        out += ": ";
        out += finding->message;
        out += " (";
        out += detail::format_fixed2(finding->weight);
        out += ")\n";
    }

    std::size_t finding_count = 0;
    for (const NameReport& r : corpus.reports) finding_count += r.findings.size();
    out += "summary\n";
    out += "  " + std::to_string(corpus.reports.size()) + " identifiers, " +
           std::to_string(finding_count) + " findings (" +
           std::to_string(detail::severity_count(corpus, Severity::Error)) + " error, " +
           std::to_string(detail::severity_count(corpus, Severity::Warn)) + " warn, " +
           std::to_string(detail::severity_count(corpus, Severity::Info)) + " info)\n";
    if (corpus.mean_score)
        out += "  mean score: " + detail::format_fixed4(*corpus.mean_score) + "\n";
    if (corpus.dominant_style)
        out += "  dominant style: " + std::string(to_string(*corpus.dominant_style)) + "\n";
    if (!corpus.length_histogram.empty()) {
        out += "  word-count histogram:\n";
        std::size_t max_words = corpus.length_histogram.rbegin()->first;
        for (std::size_t k = 1; k <= max_words; ++k) {
            auto it = corpus.length_histogram.find(k);
            std::size_t n = it == corpus.length_histogram.end() ? 0 : it->second;
            out += "    " + std::to_string(k) + ": " + std::to_string(n) + "\n";
        }
    }
    return out;
}

/// Analytics-only text rendering for the analyze command.
inline std::string render_analytics_text(const CorpusReport& corpus, const RenderOptions& opts) {
    std::string out;
    out += "style distribution\n";
    for (NamingStyle s : {NamingStyle::Camel, NamingStyle::Pascal, NamingStyle::Snake,
                          NamingStyle::Kebab, NamingStyle::ScreamingSnake,
                          NamingStyle::SingleToken, NamingStyle::Mixed}) {
        auto it = corpus.style_counts.find(s);
        std::size_t n = it == corpus.style_counts.end() ? 0 : it->second;
        if (n) out += "  " + std::string(to_string(s)) + ": " + std::to_string(n) + "\n";
    }
    if (corpus.dominant_style) {
        out += "dominant style: " + std::string(to_string(*corpus.dominant_style)) + "\n";
        std::size_t deviants = 0;
        for (const NameReport& r : corpus.reports) {
            NamingStyle s = r.tokenized.style;
            if (s == NamingStyle::SingleToken) continue;
            if (s != *corpus.dominant_style) ++deviants;
        }
        out += "deviants: " + std::to_string(deviants) + "\n";
    }
    if (!corpus.length_histogram.empty()) {
        out += "word-count histogram:\n";
        std::size_t max_words = corpus.length_histogram.rbegin()->first;
        for (std::size_t k = 1; k <= max_words; ++k) {
            auto it = corpus.length_histogram.find(k);
            std::size_t n = it == corpus.length_histogram.end() ? 0 : it->second;
            out += "  " + std::to_string(k) + ": " + std::to_string(n) + "\n";
        }
    }
    if (!corpus.prefix_candidates.empty()) {
        out += "prefix candidates (add to project terms if they name the system):\n";
        int shown = 0;
        for (const auto& [token, count] : corpus.prefix_candidates) {
            if (shown++ >= opts.top_n) break;
            out += "  " + token + ": " + std::to_string(count) + "\n";
        }
    }
    if (corpus.mean_score)
        out += "mean score: " + detail::format_fixed4(*corpus.mean_score) + "\n";
    return out;
}

/// 0 when no qualifying findings, 1 when some exist.  Exit 2 is reserved
/// for usage/config/input errors and set by the CLI.
inline int exit_code(const CorpusReport& corpus, const RenderOptions& opts) {
    if (opts.fail_on == FailOn::Never) return 0;
    for (const NameReport& r : corpus.reports) {
        for (const RuleFinding& f : r.findings) {
            if (f.severity == Severity::Error) return 1;
            if (opts.fail_on == FailOn::Warn && f.severity == Severity::Warn) return 1;
        }
    }
    return 0;
}

}  // namespace namelint
