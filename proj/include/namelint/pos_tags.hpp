#pragma once

#include <cstdint>
#include <string_view>

namespace namelint {

enum class PosTag : std::uint8_t {
    Verb,
    Noun,
    Adj,
    Adv,
    Prep,
    Det,
    Pron,
    Conj,
    Num,
    Unk,
};

inline const char* to_string(PosTag t) {
    switch (t) {
    case PosTag::Verb: return "VERB";
    case PosTag::Noun: return "NOUN";
    case PosTag::Adj: return "ADJ";
    case PosTag::Adv: return "ADV";
    case PosTag::Prep: return "PREP";
    case PosTag::Det: return "DET";
    case PosTag::Pron: return "PRON";
    case PosTag::Conj: return "CONJ";
    case PosTag::Num: return "NUM";
    case PosTag::Unk: return "UNK";
    }
    return "UNK";
}

inline bool pos_tag_from_string(std::string_view text, PosTag& out) {
    for (PosTag t : {PosTag::Verb, PosTag::Noun, PosTag::Adj, PosTag::Adv, PosTag::Prep,
                     PosTag::Det, PosTag::Pron, PosTag::Conj, PosTag::Num, PosTag::Unk}) {
        if (text == to_string(t)) {
            out = t;
            return true;
        }
    }
    return false;
}

// Small fixed-capacity tag set; candidate sets never exceed a handful.
class PosTagSet {
public:
    void add(PosTag t) { bits_ |= bit(t); }
    bool contains(PosTag t) const { return bits_ & bit(t); }
    bool empty() const { return bits_ == 0; }
    void merge(PosTagSet other) { bits_ |= other.bits_; }
    bool operator==(const PosTagSet&) const = default;

private:
    static std::uint16_t bit(PosTag t) { return static_cast<std::uint16_t>(1u << static_cast<unsigned>(t)); }
    std::uint16_t bits_ = 0;
};

}  // namespace namelint
