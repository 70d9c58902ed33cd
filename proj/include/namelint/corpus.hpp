#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "namelint/rules.hpp"

namespace namelint {

// Corpus-level aggregates over per-name reports.
struct CorpusReport {
    std::vector<NameReport> reports;
    std::map<NamingStyle, std::size_t> style_counts;
    std::optional<NamingStyle> dominant_style;
    std::map<std::size_t, std::size_t> length_histogram;  // word count -> names
    std::vector<std::pair<std::string, std::size_t>> prefix_candidates;
    std::map<RuleId, std::size_t> finding_totals;
    std::optional<double> mean_score;
};

/// Counts leading tokens of multi-token names; candidates for the
/// project-term lexicon, surfaced as suggestions only.  Common verbs are
/// excluded to keep get/set noise out.
inline std::vector<std::pair<std::string, std::size_t>> prefix_frequency(
    const std::vector<IdentifierRecord>& records, std::size_t min_count = 2) {
    static const std::unordered_set<std::string> kCommonVerbs = {
        "get", "set", "is", "has", "add", "remove", "create", "delete", "find", "compute"};
    std::unordered_map<std::string, std::size_t> counts;
    for (const IdentifierRecord& rec : records) {
        TokenizedName tokenized = split(rec.name);
        if (tokenized.tokens.size() < 2) continue;
        const std::string& first = tokenized.tokens.front().normalized;
        if (kCommonVerbs.count(first)) continue;
        ++counts[first];
    }
    std::vector<std::pair<std::string, std::size_t>> out;
    for (auto& [token, count] : counts)
        if (count >= min_count) out.emplace_back(token, count);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return out;
}

/// Builds the corpus aggregates from per-name reports.
inline CorpusReport aggregate(std::vector<NameReport> reports) {
    CorpusReport out;
    out.reports = std::move(reports);

    double score_sum = 0.0;
    std::vector<IdentifierRecord> records;
    records.reserve(out.reports.size());
    for (const NameReport& r : out.reports) {
        ++out.style_counts[r.tokenized.style];
        ++out.length_histogram[r.tokenized.word_count()];
        for (const RuleFinding& f : r.findings) ++out.finding_totals[f.rule];
        score_sum += r.score;
        records.push_back(r.record);
    }
    if (!out.reports.empty()) out.mean_score = score_sum / static_cast<double>(out.reports.size());

    // Dominant style considers composition styles only; ties break in the
    // fixed enumeration order.
    std::size_t best = 0;
    for (NamingStyle s : {NamingStyle::Camel, NamingStyle::Pascal, NamingStyle::Snake,
                          NamingStyle::Kebab, NamingStyle::ScreamingSnake}) {
        auto it = out.style_counts.find(s);
        std::size_t n = it == out.style_counts.end() ? 0 : it->second;
        if (n > best) {
            best = n;
            out.dominant_style = s;
        }
    }

    out.prefix_candidates = prefix_frequency(records, 2);
    return out;
}

/// Re-runs the style rule for every multi-token name against the dominant
/// corpus style (or the configured override).  Only R1 findings change.
inline std::vector<NameReport> restyle_pass(std::vector<NameReport> reports, NamingStyle dominant,
                                            const RuleConfig& cfg) {
    for (NameReport& report : reports) {
        if (!report.applicable.count(RuleId::R1Style)) continue;
        std::erase_if(report.findings,
                      [](const RuleFinding& f) { return f.rule == RuleId::R1Style; });
        if (auto finding = check_style(report.tokenized, cfg, dominant))
            report.findings.insert(report.findings.begin(), std::move(*finding));
        detail::recompute_score(report, cfg);
    }
    return reports;
}

/// Combines two corpus reports: counts add, report lists concatenate,
/// derived fields are recomputed.
inline CorpusReport merge(const CorpusReport& a, const CorpusReport& b) {
    std::vector<NameReport> combined;
    combined.reserve(a.reports.size() + b.reports.size());
    combined.insert(combined.end(), a.reports.begin(), a.reports.end());
    combined.insert(combined.end(), b.reports.begin(), b.reports.end());
    return aggregate(std::move(combined));
}

}  // namespace namelint
