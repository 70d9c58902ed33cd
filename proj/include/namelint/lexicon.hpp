#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "namelint/embedded_data.hpp"
#include "namelint/errors.hpp"
#include "namelint/pos_tags.hpp"
#include "namelint/tokenizer.hpp"

namespace namelint {

// Word knowledge shared by every rule: dictionary, POS lexicon,
// abbreviation map, acronym/slang/project/domain term sets.
// Immutable after load; safe to share across threads.
struct Lexicon {
    std::unordered_set<std::string> dictionary;
    std::unordered_map<std::string, PosTagSet> pos;
    // abbr -> sorted unique expansions
    std::map<std::string, std::vector<std::string>> abbreviations;
    std::unordered_set<std::string> acronyms;  // stored uppercase
    // Slang entries as normalized token sequences plus a concatenated index
    // so "CurveBall" ([curve, ball]) still matches the entry "curveball".
    std::vector<std::vector<std::string>> slang_sequences;
    std::unordered_set<std::string> slang_single;
    std::unordered_set<std::string> slang_concat;
    std::size_t slang_max_window = 1;
    std::unordered_set<std::string> project_terms;
    std::unordered_set<std::string> domain_terms;

    // Sorted copy of the dictionary for the looks-like-abbreviation probe.
    std::vector<std::string> sorted_dictionary;

    void rebuild_indexes() {
        sorted_dictionary.assign(dictionary.begin(), dictionary.end());
        std::sort(sorted_dictionary.begin(), sorted_dictionary.end());
        slang_single.clear();
        slang_concat.clear();
        slang_max_window = 1;
        for (const auto& seq : slang_sequences) {
            std::string joined;
            for (const auto& w : seq) joined += w;
            slang_concat.insert(joined);
            if (seq.size() == 1) slang_single.insert(seq[0]);
            slang_max_window = std::max(slang_max_window, seq.size() + 1);
        }
    }

    // True when `text` is a proper prefix of some dictionary word at least
    // two characters longer.
    bool prefix_of_dictionary_word(std::string_view text) const {
        if (text.size() < 2) return false;
        const std::string probe(text);
        auto it = std::lower_bound(sorted_dictionary.begin(), sorted_dictionary.end(), probe);
        for (; it != sorted_dictionary.end(); ++it) {
            std::string_view w = *it;
            if (w.substr(0, text.size()) != text) break;
            if (w.size() >= text.size() + 2) return true;
        }
        return false;
    }
};

enum class TokenClassKind {
    Dictionary,
    Domain,
    KnownAbbreviation,
    AmbiguousAbbreviation,
    KnownAcronym,
    UnknownAcronym,
    Slang,
    Number,
    SingleLetter,
    Unknown,
};

inline const char* to_string(TokenClassKind k) {
    switch (k) {
    case TokenClassKind::Dictionary: return "DICTIONARY";
    case TokenClassKind::Domain: return "DOMAIN";
    case TokenClassKind::KnownAbbreviation: return "KNOWN_ABBREVIATION";
    case TokenClassKind::AmbiguousAbbreviation: return "AMBIGUOUS_ABBREVIATION";
    case TokenClassKind::KnownAcronym: return "KNOWN_ACRONYM";
    case TokenClassKind::UnknownAcronym: return "UNKNOWN_ACRONYM";
    case TokenClassKind::Slang: return "SLANG";
    case TokenClassKind::Number: return "NUMBER";
    case TokenClassKind::SingleLetter: return "SINGLE_LETTER";
    case TokenClassKind::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

struct TokenClass {
    TokenClassKind value = TokenClassKind::Unknown;
    std::vector<std::string> expansions;  // present only for abbreviation kinds
};

/// Classifies one token against the lexicon.
inline TokenClass classify_token(const Token& token, const Lexicon& lexicon) {
    TokenClass out;
    if (token.kind == TokenKind::Number) {
        out.value = TokenClassKind::Number;
        return out;
    }
    if (token.kind == TokenKind::SingleLetter) {
        out.value = TokenClassKind::SingleLetter;
        return out;
    }
    if (token.kind == TokenKind::Acronym) {
        std::string upper = token.text;
        for (char& c : upper) c = detail::to_upper_ch(c);
        out.value = lexicon.acronyms.count(upper) ? TokenClassKind::KnownAcronym
                                                  : TokenClassKind::UnknownAcronym;
        return out;
    }
    const std::string& w = token.normalized;
    if (lexicon.slang_single.count(w)) {
        out.value = TokenClassKind::Slang;
        return out;
    }
    if (lexicon.dictionary.count(w)) {
        out.value = TokenClassKind::Dictionary;
        return out;
    }
    if (lexicon.domain_terms.count(w)) {
        out.value = TokenClassKind::Domain;
        return out;
    }
    if (auto it = lexicon.abbreviations.find(w); it != lexicon.abbreviations.end()) {
        out.expansions = it->second;
        out.value = it->second.size() == 1 ? TokenClassKind::KnownAbbreviation
                                           : TokenClassKind::AmbiguousAbbreviation;
        return out;
    }
    out.value = TokenClassKind::Unknown;
    return out;
}

struct LexiconConfig {
    std::vector<std::filesystem::path> dictionary_files;
    std::vector<std::filesystem::path> pos_files;
    std::vector<std::filesystem::path> abbreviation_files;
    std::vector<std::filesystem::path> acronym_files;
    std::vector<std::filesystem::path> slang_files;
    std::vector<std::filesystem::path> project_term_files;
    std::vector<std::filesystem::path> domain_term_files;
    // Directories holding conventionally named lexicon files
    // (dictionary.txt, pos.txt, abbreviations.tsv, acronyms.txt, slang.txt,
    // project_terms.txt, domain_terms.txt).
    std::vector<std::filesystem::path> lexicon_dirs;
    std::vector<std::string> extra_project_terms;
};

namespace detail {

struct LexiconLine {
    std::string text;
    bool removal = false;
};

// Iterates meaningful lines of a lexicon source: trims, skips blanks and
// '#' comments, peels a leading '-' removal marker.
template <typename Fn>
inline void for_each_lexicon_line(std::string_view content, const std::string& origin, Fn&& fn) {
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= content.size()) {
        std::size_t end = content.find('\n', pos);
        if (end == std::string_view::npos) end = content.size();
        std::string_view line = content.substr(pos, end - pos);
        pos = end + 1;
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.remove_suffix(1);
        while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
            line.remove_prefix(1);
        if (line.empty() || line.front() == '#') continue;
        LexiconLine parsed;
        if (line.front() == '-') {
            parsed.removal = true;
            line.remove_prefix(1);
        }
        parsed.text.assign(line);
        fn(parsed, origin, lineno);
        if (end == content.size()) break;
    }
}

inline std::string read_file_or_throw(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open lexicon file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void parse_word_set(std::string_view content, const std::string& origin, bool lowercase,
                           std::unordered_set<std::string>& out) {
    for_each_lexicon_line(content, origin, [&](const LexiconLine& line, const std::string& org,
                                               std::size_t no) {
        std::string term = line.text;
        if (term.find(' ') != std::string::npos || term.find('\t') != std::string::npos)
            throw ConfigError(org + ":" + std::to_string(no) + ": expected a single term");
        for (char& c : term) c = lowercase ? to_lower_ch(c) : to_upper_ch(c);
        if (line.removal)
            out.erase(term);
        else
            out.insert(std::move(term));
    });
}

inline void parse_pos(std::string_view content, const std::string& origin,
                      std::unordered_map<std::string, PosTagSet>& out) {
    for_each_lexicon_line(content, origin, [&](const LexiconLine& line, const std::string& org,
                                               std::size_t no) {
        auto fail = [&](const char* why) {
            throw ConfigError(org + ":" + std::to_string(no) + ": " + why);
        };
        std::size_t sp = line.text.find(' ');
        if (line.removal && sp == std::string::npos) {
            out.erase(lower_copy(line.text));
            return;
        }
        if (sp == std::string::npos) fail("expected 'word TAG[,TAG...]'");
        std::string word = lower_copy(std::string_view(line.text).substr(0, sp));
        PosTagSet tags;
        std::string_view rest = std::string_view(line.text).substr(sp + 1);
        std::size_t start = 0;
        while (start <= rest.size()) {
            std::size_t comma = rest.find(',', start);
            if (comma == std::string_view::npos) comma = rest.size();
            std::string_view tag_text = rest.substr(start, comma - start);
            PosTag tag;
            if (!pos_tag_from_string(tag_text, tag)) fail("unknown POS tag");
            tags.add(tag);
            if (comma == rest.size()) break;
            start = comma + 1;
        }
        if (tags.empty()) fail("no tags given");
        out[word] = tags;  // user entries win wholesale
    });
}

inline void parse_abbreviations(std::string_view content, const std::string& origin,
                                std::map<std::string, std::vector<std::string>>& out,
                                std::set<std::string>& replaced_this_load) {
    for_each_lexicon_line(content, origin, [&](const LexiconLine& line, const std::string& org,
                                               std::size_t no) {
        if (line.removal) {
            out.erase(lower_copy(line.text));
            return;
        }
        std::size_t tab = line.text.find('\t');
        if (tab == std::string::npos)
            throw ConfigError(org + ":" + std::to_string(no) +
                              ": expected 'abbr<TAB>expansion'");
        std::string abbr = lower_copy(std::string_view(line.text).substr(0, tab));
        std::string expansion = lower_copy(std::string_view(line.text).substr(tab + 1));
        if (abbr.empty() || expansion.empty())
            throw ConfigError(org + ":" + std::to_string(no) + ": empty abbreviation or expansion");
        // First mention inside a user load replaces the default expansions.
        if (replaced_this_load.insert(abbr).second) out[abbr].clear();
        auto& list = out[abbr];
        if (std::find(list.begin(), list.end(), expansion) == list.end())
            list.push_back(expansion);
    });
}

inline void parse_slang(std::string_view content, const std::string& origin,
                        std::vector<std::vector<std::string>>& out) {
    for_each_lexicon_line(content, origin, [&](const LexiconLine& line, const std::string&,
                                               std::size_t) {
        std::vector<std::string> seq;
        std::istringstream words(line.text);
        std::string w;
        while (words >> w) {
            for (char& c : w) c = to_lower_ch(c);
            seq.push_back(w);
        }
        if (seq.empty()) return;
        if (line.removal) {
            out.erase(std::remove(out.begin(), out.end(), seq), out.end());
        } else if (std::find(out.begin(), out.end(), seq) == out.end()) {
            out.push_back(std::move(seq));
        }
    });
}

inline void load_defaults(Lexicon& lex) {
    parse_word_set(kDefaultDictionary, "<builtin dictionary>", true, lex.dictionary);
    parse_pos(kDefaultPosLexicon, "<builtin pos>", lex.pos);
    std::set<std::string> replaced;
    parse_abbreviations(kDefaultAbbreviations, "<builtin abbreviations>", lex.abbreviations,
                        replaced);
    parse_word_set(kDefaultAcronyms, "<builtin acronyms>", false, lex.acronyms);
    parse_slang(kDefaultSlang, "<builtin slang>", lex.slang_sequences);
    parse_word_set(kDefaultDomainTerms, "<builtin domain terms>", true, lex.domain_terms);
}

inline void validate_lexicon(const Lexicon& lex) {
    for (const auto& [abbr, expansions] : lex.abbreviations) {
        if (expansions.empty())
            throw ConfigError("abbreviation '" + abbr + "' has no expansion");
        for (const auto& expansion : expansions) {
            std::istringstream words(expansion);
            std::string w;
            while (words >> w) {
                if (!lex.dictionary.count(w) && !lex.domain_terms.count(w))
                    throw ConfigError("abbreviation '" + abbr + "' expands to '" + expansion +
                                      "', which is neither a dictionary nor a domain term");
            }
        }
    }
}

}  // namespace detail

/// The bundled default lexicon, parsed once.
inline const Lexicon& default_lexicon() {
    static const Lexicon instance = [] {
        Lexicon lex;
        detail::load_defaults(lex);
        lex.rebuild_indexes();
        detail::validate_lexicon(lex);
        return lex;
    }();
    return instance;
}

/// Loads the bundled defaults, then merges user files (user entries win;
/// a leading '-' removes a default entry).
inline Lexicon load_lexicon(const LexiconConfig& config) {
    Lexicon lex = default_lexicon();

    LexiconConfig effective = config;
    static const std::pair<const char*, std::vector<std::filesystem::path> LexiconConfig::*>
        kDirFiles[] = {
            {"dictionary.txt", &LexiconConfig::dictionary_files},
            {"pos.txt", &LexiconConfig::pos_files},
            {"abbreviations.tsv", &LexiconConfig::abbreviation_files},
            {"acronyms.txt", &LexiconConfig::acronym_files},
            {"slang.txt", &LexiconConfig::slang_files},
            {"project_terms.txt", &LexiconConfig::project_term_files},
            {"domain_terms.txt", &LexiconConfig::domain_term_files},
        };
    for (const auto& dir : config.lexicon_dirs) {
        if (!std::filesystem::is_directory(dir))
            throw ConfigError("lexicon path is not a directory: " + dir.string());
        for (const auto& [file, member] : kDirFiles) {
            std::filesystem::path candidate = dir / file;
            if (std::filesystem::exists(candidate)) (effective.*member).push_back(candidate);
        }
    }

    for (const auto& path : effective.dictionary_files)
        detail::parse_word_set(detail::read_file_or_throw(path), path.string(), true,
                               lex.dictionary);
    for (const auto& path : effective.pos_files)
        detail::parse_pos(detail::read_file_or_throw(path), path.string(), lex.pos);
    std::set<std::string> replaced;
    for (const auto& path : effective.abbreviation_files)
        detail::parse_abbreviations(detail::read_file_or_throw(path), path.string(),
                                    lex.abbreviations, replaced);
    for (const auto& path : effective.acronym_files)
        detail::parse_word_set(detail::read_file_or_throw(path), path.string(), false,
                               lex.acronyms);
    for (const auto& path : effective.slang_files)
        detail::parse_slang(detail::read_file_or_throw(path), path.string(), lex.slang_sequences);
    for (const auto& path : effective.project_term_files)
        detail::parse_word_set(detail::read_file_or_throw(path), path.string(), true,
                               lex.project_terms);
    for (const auto& path : effective.domain_term_files)
        detail::parse_word_set(detail::read_file_or_throw(path), path.string(), true,
                               lex.domain_terms);
    for (const auto& term : effective.extra_project_terms)
        lex.project_terms.insert(detail::lower_copy(term));

    lex.rebuild_indexes();
    detail::validate_lexicon(lex);
    return lex;
}

}  // namespace namelint
