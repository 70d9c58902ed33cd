#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "namelint/lexicon.hpp"
#include "namelint/pos_tags.hpp"
#include "namelint/tokenizer.hpp"

namespace namelint {

struct TaggedName {
    TokenizedName tokenized;
    std::vector<PosTag> tags;  // same length as tokens
};

enum class GrammarPattern {
    VerbPhrase,
    VerbPhrasePp,
    Predicate,
    NounPhrase,
    SingleVerb,
    Other,
};

inline const char* to_string(GrammarPattern p) {
    switch (p) {
    case GrammarPattern::VerbPhrase: return "VERB_PHRASE";
    case GrammarPattern::VerbPhrasePp: return "VERB_PHRASE_PP";
    case GrammarPattern::Predicate: return "PREDICATE";
    case GrammarPattern::NounPhrase: return "NOUN_PHRASE";
    case GrammarPattern::SingleVerb: return "SINGLE_VERB";
    case GrammarPattern::Other: return "OTHER";
    }
    return "OTHER";
}

namespace detail {

inline const std::array<std::string_view, 9>& preposition_set() {
    static const std::array<std::string_view, 9> set = {"with", "to", "from", "for", "of",
                                                        "in",   "on", "by",   "at"};
    return set;
}

inline bool is_preposition_word(std::string_view w) {
    for (auto p : preposition_set())
        if (w == p) return true;
    return false;
}

inline const std::array<std::string_view, 6>& predicate_leads() {
    static const std::array<std::string_view, 6> set = {"is", "has", "can", "should", "was", "are"};
    return set;
}

inline bool ends_with(std::string_view w, std::string_view suffix) {
    return w.size() >= suffix.size() && w.substr(w.size() - suffix.size()) == suffix;
}

inline bool is_participle_form(std::string_view w) {
    return (ends_with(w, "ed") || ends_with(w, "ing")) && w.size() > 4;
}

// Morphological fallback: derive candidates for inflected forms from the
// base word's lexicon entry.
inline PosTagSet morph_candidates(const std::string& w, const Lexicon& lex) {
    PosTagSet out;
    auto base_tags = [&](const std::string& base) {
        auto it = lex.pos.find(base);
        return it == lex.pos.end() ? PosTagSet{} : it->second;
    };
    auto try_bases = [&](std::initializer_list<std::string> bases, auto&& derive) {
        for (const auto& b : bases) {
            PosTagSet t = base_tags(b);
            if (!t.empty()) {
                derive(t);
                return true;
            }
        }
        return false;
    };
    if (w.size() > 3 && ends_with(w, "ies")) {
        if (try_bases({w.substr(0, w.size() - 3) + "y"}, [&](PosTagSet t) {
                if (t.contains(PosTag::Noun)) out.add(PosTag::Noun);
                if (t.contains(PosTag::Verb)) out.add(PosTag::Verb);
            }))
            return out;
    }
    if (w.size() > 2 && w.back() == 's' && !ends_with(w, "ss")) {
        if (try_bases({w.substr(0, w.size() - 1), w.substr(0, w.size() - (ends_with(w, "es") ? 2 : 1))},
                      [&](PosTagSet t) {
                          if (t.contains(PosTag::Noun)) out.add(PosTag::Noun);
                          if (t.contains(PosTag::Verb)) out.add(PosTag::Verb);
                      }))
            return out;
    }
    if (w.size() > 4 && ends_with(w, "ing")) {
        std::string stem = w.substr(0, w.size() - 3);
        std::string undoubled = (stem.size() > 1 && stem.back() == stem[stem.size() - 2])
                                    ? stem.substr(0, stem.size() - 1)
                                    : stem;
        if (try_bases({stem, stem + "e", undoubled}, [&](PosTagSet t) {
                if (t.contains(PosTag::Verb)) {
                    out.add(PosTag::Verb);
                    out.add(PosTag::Adj);
                }
            }))
            return out;
    }
    if (w.size() > 3 && ends_with(w, "ed")) {
        std::string stem = w.substr(0, w.size() - 2);
        std::string undoubled = (stem.size() > 1 && stem.back() == stem[stem.size() - 2])
                                    ? stem.substr(0, stem.size() - 1)
                                    : stem;
        if (try_bases({stem, stem + "e", undoubled}, [&](PosTagSet t) {
                if (t.contains(PosTag::Verb)) {
                    out.add(PosTag::Verb);
                    out.add(PosTag::Adj);
                }
            }))
            return out;
    }
    return out;
}

inline PosTagSet suffix_heuristic(std::string_view w) {
    PosTagSet out;
    if (ends_with(w, "tion") || ends_with(w, "ment") || ends_with(w, "ness"))
        out.add(PosTag::Noun);
    else if (ends_with(w, "ize") || ends_with(w, "ify"))
        out.add(PosTag::Verb);
    else if (ends_with(w, "able") || ends_with(w, "ful"))
        out.add(PosTag::Adj);
    return out;
}

// Candidate tags for one token, before positional disambiguation.
inline PosTagSet candidate_tags(const Token& token, const TokenClass& cls, const Lexicon& lex) {
    PosTagSet out;
    if (token.kind == TokenKind::Number) {
        out.add(PosTag::Num);
        return out;
    }
    const std::string& w = token.normalized;
    if (is_preposition_word(w)) {
        out.add(PosTag::Prep);
        return out;
    }
    if (auto it = lex.pos.find(w); it != lex.pos.end()) return it->second;
    if (token.kind == TokenKind::SingleLetter) return out;  // UNK
    if (token.kind == TokenKind::Acronym || cls.value == TokenClassKind::Domain) {
        out.add(PosTag::Noun);
        return out;
    }
    if (cls.value == TokenClassKind::KnownAbbreviation ||
        cls.value == TokenClassKind::AmbiguousAbbreviation) {
        // Borrow the expansions' tags; ambiguous entries contribute a union.
        for (const auto& expansion : cls.expansions) {
            if (auto it = lex.pos.find(expansion); it != lex.pos.end()) {
                out.merge(it->second);
            } else {
                PosTagSet derived = morph_candidates(expansion, lex);
                if (derived.empty()) derived = suffix_heuristic(expansion);
                out.merge(derived);
            }
        }
        if (!out.empty()) return out;
    }
    PosTagSet derived = morph_candidates(w, lex);
    if (!derived.empty()) return derived;
    return suffix_heuristic(w);
}

}  // namespace detail

/// Assigns one POS tag per token.
///
/// Candidates come from the POS lexicon (acronym and domain tokens default
/// to NOUN, known abbreviations borrow their expansion's tags).  Ties are
/// broken in order: participle before a nounish token reads as an
/// adjective; position 0 prefers a verb; the last position prefers a noun;
/// a token after a preposition prefers NOUN/DET; remaining ties fall back
/// to the fixed priority NOUN > ADJ > VERB > ADV.  Words with no candidates
/// get suffix heuristics, then UNK.
inline TaggedName tag(const TokenizedName& tokenized, const Lexicon& lexicon) {
    using namespace detail;
    TaggedName out;
    out.tokenized = tokenized;
    const auto& tokens = tokenized.tokens;
    std::vector<PosTagSet> candidates(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        TokenClass cls = classify_token(tokens[i], lexicon);
        candidates[i] = candidate_tags(tokens[i], cls, lexicon);
    }

    out.tags.resize(tokens.size(), PosTag::Unk);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const PosTagSet& c = candidates[i];
        if (c.empty()) {
            out.tags[i] = PosTag::Unk;
            continue;
        }
        if (c.contains(PosTag::Num)) {
            out.tags[i] = PosTag::Num;
            continue;
        }
        bool next_nounish =
            i + 1 < tokens.size() && candidates[i + 1].contains(PosTag::Noun);
        if (c.contains(PosTag::Adj) && is_participle_form(tokens[i].normalized) && next_nounish) {
            out.tags[i] = PosTag::Adj;
            continue;
        }
        if (i == 0 && c.contains(PosTag::Verb)) {
            out.tags[i] = PosTag::Verb;
            continue;
        }
        if (i + 1 == tokens.size() && c.contains(PosTag::Noun)) {
            out.tags[i] = PosTag::Noun;
            continue;
        }
        if (i > 0 && out.tags[i - 1] == PosTag::Prep) {
            if (c.contains(PosTag::Noun)) {
                out.tags[i] = PosTag::Noun;
                continue;
            }
            if (c.contains(PosTag::Det)) {
                out.tags[i] = PosTag::Det;
                continue;
            }
        }
        PosTag chosen = PosTag::Unk;
        for (PosTag t : {PosTag::Noun, PosTag::Adj, PosTag::Verb, PosTag::Adv, PosTag::Prep,
                         PosTag::Det, PosTag::Pron, PosTag::Conj}) {
            if (c.contains(t)) {
                chosen = t;
                break;
            }
        }
        out.tags[i] = chosen;
    }
    return out;
}

/// Classifies the phrase shape of a tagged name.  First match wins.
inline GrammarPattern classify_pattern(const TaggedName& tagged) {
    using namespace detail;
    const auto& tags = tagged.tags;
    if (tags.empty()) return GrammarPattern::Other;

    if (tags.size() == 1 && tags[0] == PosTag::Verb) return GrammarPattern::SingleVerb;

    if (tags[0] == PosTag::Verb) {
        for (std::size_t i = 1; i < tags.size(); ++i) {
            if (tags[i] != PosTag::Prep) continue;
            for (std::size_t j = i + 1; j < tags.size(); ++j)
                if (tags[j] == PosTag::Noun) return GrammarPattern::VerbPhrasePp;
        }
    }

    if (tags[0] == PosTag::Verb && tags.back() == PosTag::Noun) {
        bool medial_ok = true;
        for (std::size_t i = 1; i + 1 < tags.size(); ++i) {
            if (tags[i] != PosTag::Adj && tags[i] != PosTag::Noun && tags[i] != PosTag::Num &&
                tags[i] != PosTag::Unk) {
                medial_ok = false;
                break;
            }
        }
        if (medial_ok) return GrammarPattern::VerbPhrase;
    }

    for (auto lead : predicate_leads())
        if (tagged.tokenized.tokens[0].normalized == lead) return GrammarPattern::Predicate;

    if (tags.back() == PosTag::Noun) {
        bool nominal = true;
        for (PosTag t : tags) {
            if (t != PosTag::Adj && t != PosTag::Noun && t != PosTag::Num && t != PosTag::Unk) {
                nominal = false;
                break;
            }
        }
        if (nominal) return GrammarPattern::NounPhrase;
    }

    return GrammarPattern::Other;
}

}  // namespace namelint
