#pragma once

#include <cctype>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace namelint {

enum class NamingStyle {
    Camel,
    Pascal,
    Snake,
    Kebab,
    ScreamingSnake,
    SingleToken,
    Mixed,
};

inline const char* to_string(NamingStyle s) {
    switch (s) {
    case NamingStyle::Camel: return "CAMEL";
    case NamingStyle::Pascal: return "PASCAL";
    case NamingStyle::Snake: return "SNAKE";
    case NamingStyle::Kebab: return "KEBAB";
    case NamingStyle::ScreamingSnake: return "SCREAMING_SNAKE";
    case NamingStyle::SingleToken: return "SINGLE_TOKEN";
    case NamingStyle::Mixed: return "MIXED";
    }
    return "MIXED";
}

inline bool style_from_string(std::string_view text, NamingStyle& out) {
    for (NamingStyle s : {NamingStyle::Camel, NamingStyle::Pascal, NamingStyle::Snake,
                          NamingStyle::Kebab, NamingStyle::ScreamingSnake,
                          NamingStyle::SingleToken, NamingStyle::Mixed}) {
        if (text == to_string(s)) {
            out = s;
            return true;
        }
    }
    return false;
}

enum class TokenKind {
    Word,
    Acronym,
    Number,
    SingleLetter,
};

inline const char* to_string(TokenKind k) {
    switch (k) {
    case TokenKind::Word: return "WORD";
    case TokenKind::Acronym: return "ACRONYM";
    case TokenKind::Number: return "NUMBER";
    case TokenKind::SingleLetter: return "SINGLE_LETTER";
    }
    return "WORD";
}

struct Token {
    std::string text;        // original slice
    std::string normalized;  // lowercased
    TokenKind kind = TokenKind::Word;
};

struct TokenizedName {
    std::string original;
    NamingStyle style = NamingStyle::SingleToken;
    std::vector<Token> tokens;
    // Leading/trailing underscore or dash runs are style markers, stripped
    // before splitting but kept as evidence for the style rule.
    std::string leading_markers;
    std::string trailing_markers;

    std::size_t word_count() const {
        std::size_t n = 0;
        for (const Token& t : tokens)
            if (t.kind != TokenKind::Number) ++n;
        return n;
    }
};

namespace detail {

inline bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_digit_ch(char c) { return c >= '0' && c <= '9'; }
inline bool is_letter(char c) { return is_upper(c) || is_lower(c); }
inline bool is_separator(char c) { return c == '_' || c == '-'; }
inline char to_lower_ch(char c) { return is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c; }
inline char to_upper_ch(char c) { return is_lower(c) ? static_cast<char>(c - 'a' + 'A') : c; }

inline std::string lower_copy(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = to_lower_ch(c);
    return out;
}

// Strips leading/trailing separator runs; returns the core slice.
inline std::string_view strip_markers(std::string_view name, std::string& leading,
                                      std::string& trailing) {
    std::size_t b = 0;
    while (b < name.size() && is_separator(name[b])) ++b;
    std::size_t e = name.size();
    while (e > b && is_separator(name[e - 1])) --e;
    leading.assign(name.substr(0, b));
    trailing.assign(name.substr(e));
    return name.substr(b, e - b);
}

// True when a word boundary falls before position i of a separator-free run.
inline bool boundary_before(std::string_view s, std::size_t i) {
    if (i == 0 || i >= s.size()) return false;
    char prev = s[i - 1];
    char cur = s[i];
    if (is_letter(prev) != is_letter(cur)) return true;  // letter<->digit
    if (is_lower(prev) && is_upper(cur)) return true;    // camel hump
    // Uppercase run followed by a lowercase letter splits before the run's
    // last letter: "URLValue" -> URL | Value.
    if (is_upper(prev) && is_upper(cur) && i + 1 < s.size() && is_lower(s[i + 1])) return true;
    return false;
}

inline Token make_token(std::string_view text) {
    Token t;
    t.text.assign(text);
    t.normalized = lower_copy(text);
    bool all_digit = true, all_upper = true;
    std::size_t letters = 0;
    for (char c : text) {
        if (!is_digit_ch(c)) all_digit = false;
        if (!is_upper(c)) all_upper = false;
        if (is_letter(c)) ++letters;
    }
    if (all_digit && !text.empty())
        t.kind = TokenKind::Number;
    else if (text.size() == 1 && letters == 1)
        t.kind = TokenKind::SingleLetter;
    else if (all_upper && text.size() >= 2)
        t.kind = TokenKind::Acronym;
    else
        t.kind = TokenKind::Word;
    return t;
}

}  // namespace detail

/// Classifies the composition style of an identifier.
inline NamingStyle detect_style(std::string_view name) {
    using namespace detail;
    std::string lead, trail;
    std::string_view core = strip_markers(name, lead, trail);
    if (core.empty()) return NamingStyle::SingleToken;

    bool has_underscore = core.find('_') != std::string_view::npos;
    bool has_dash = core.find('-') != std::string_view::npos;
    if (has_underscore && has_dash) return NamingStyle::Mixed;

    if (has_underscore || has_dash) {
        // A lower->upper transition inside a segment conflicts with the
        // separator style; pure acronym runs (DOM_tree) do not.
        bool all_segments_upper = true;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= core.size(); ++i) {
            if (i == core.size() || is_separator(core[i])) {
                std::string_view seg = core.substr(start, i - start);
                for (std::size_t j = 1; j < seg.size(); ++j)
                    if (is_lower(seg[j - 1]) && is_upper(seg[j])) return NamingStyle::Mixed;
                for (char c : seg)
                    if (is_lower(c)) all_segments_upper = false;
                start = i + 1;
            }
        }
        if (has_dash) return NamingStyle::Kebab;
        return all_segments_upper ? NamingStyle::ScreamingSnake : NamingStyle::Snake;
    }

    bool has_transition = false;
    for (std::size_t i = 1; i < core.size(); ++i) {
        if (boundary_before(core, i) && is_letter(core[i - 1]) && is_letter(core[i])) {
            has_transition = true;
            break;
        }
    }
    if (!has_transition) return NamingStyle::SingleToken;

    for (char c : core) {
        if (is_letter(c)) return is_lower(c) ? NamingStyle::Camel : NamingStyle::Pascal;
    }
    return NamingStyle::SingleToken;
}

/// Splits an identifier into typed word tokens.
inline TokenizedName split(std::string_view name) {
    using namespace detail;
    TokenizedName out;
    out.original.assign(name);
    out.style = detect_style(name);

    std::string_view core = strip_markers(name, out.leading_markers, out.trailing_markers);
    if (core.empty()) {
        // Degenerate names like "_" keep a single raw token.
        out.tokens.push_back(make_token(name));
        return out;
    }

    std::size_t start = 0;
    for (std::size_t i = 1; i <= core.size(); ++i) {
        bool at_end = i == core.size();
        if (at_end || is_separator(core[i]) || boundary_before(core, i)) {
            if (i > start) out.tokens.push_back(make_token(core.substr(start, i - start)));
            if (!at_end && is_separator(core[i])) {
                while (i + 1 < core.size() && is_separator(core[i + 1])) ++i;
                start = i + 1;
            } else {
                start = i;
            }
        }
    }
    if (out.tokens.empty()) out.tokens.push_back(make_token(core));
    return out;
}

/// Renders plain lowercase words in the given composition style.
inline std::string render_in_style(std::span<const std::string> words, NamingStyle style) {
    using namespace detail;
    std::string out;
    auto capitalize = [](const std::string& w) {
        std::string r = w;
        if (!r.empty()) r[0] = to_upper_ch(r[0]);
        return r;
    };
    for (std::size_t i = 0; i < words.size(); ++i) {
        switch (style) {
        case NamingStyle::Camel:
            out += (i == 0) ? lower_copy(words[i]) : capitalize(words[i]);
            break;
        case NamingStyle::Pascal:
            out += capitalize(words[i]);
            break;
        case NamingStyle::Snake:
            if (i) out += '_';
            out += lower_copy(words[i]);
            break;
        case NamingStyle::Kebab:
            if (i) out += '-';
            out += lower_copy(words[i]);
            break;
        case NamingStyle::ScreamingSnake: {
            if (i) out += '_';
            std::string w = words[i];
            for (char& c : w) c = to_upper_ch(c);
            out += w;
            break;
        }
        default:
            out += lower_copy(words[i]);
            break;
        }
    }
    return out;
}

}  // namespace namelint
