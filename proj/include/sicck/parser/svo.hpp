#pragma once

#include "sicck/core/lexicon.hpp"
#include "sicck/parser/grammar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sicck::parser {

/// Whitespace tokens; `norm` is the lowercased twin used for matching.
struct TokenList {
    std::vector<std::string> text;
    std::vector<std::string> norm;

    std::size_t size() const noexcept { return text.size(); }
};

/// Whitespace split with runs collapsed; contractions ("isn't") stay whole. Throws EmptyInput.
TokenList tokenize(std::string_view raw);

/// Half-open token range.
struct TokenSpan {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const noexcept { return end - begin; }
    friend bool operator==(const TokenSpan&, const TokenSpan&) = default;
};

/// A noun phrase: [begin, determiner_end) is the determiner region (articles, quantifier
/// phrases), then adjectives, then the noun compound ending at `end`.
struct NounPhraseSpan {
    TokenSpan span;
    std::size_t determiner_end = 0;
    std::size_t noun_begin = 0;

    friend bool operator==(const NounPhraseSpan&, const NounPhraseSpan&) = default;
};

struct SvoSentence {
    std::vector<std::string> tokens;    // lowercased
    std::vector<std::string> original;  // as written
    std::vector<PosTag> tags;

    NounPhraseSpan subject;
    TokenSpan verb;                         // auxiliary .. head verb, modifiers in between
    std::optional<std::size_t> head_verb;   // absent for copular predicates
    std::optional<NounPhraseSpan> object;
    std::optional<std::size_t> object_preposition;

    bool has_slot(Slot s) const noexcept { return s != Slot::Object || object.has_value(); }

    /// Tokens joined by single spaces, original casing.
    std::string render() const;

    /// Text of a token range, original casing.
    std::string text(TokenSpan span) const;

    friend bool operator==(const SvoSentence&, const SvoSentence&) = default;
};

/// Recovers subject, verb and object spans. Throws ParseOutOfCoverage for unknown words,
/// a missing verb, several clauses, or material the grammar does not cover.
SvoSentence parse_svo(const TokenList& tokens, const Grammar& grammar);

/// tokenize + parse_svo.
SvoSentence parse_sentence(std::string_view raw, const Grammar& grammar);

}  // namespace sicck::parser
