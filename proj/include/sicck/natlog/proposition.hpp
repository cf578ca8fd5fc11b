#pragma once

#include "sicck/parser/svo.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sicck::natlog {

enum class Quantifier : std::uint8_t { Every, Some, No, NotEvery, ExactlyOne, AllButOne, AtLeastOne, Definite };

inline constexpr Quantifier kAllQuantifiers[] = {Quantifier::Every,     Quantifier::Some,       Quantifier::No,
                                                 Quantifier::NotEvery,  Quantifier::ExactlyOne, Quantifier::AllButOne,
                                                 Quantifier::AtLeastOne, Quantifier::Definite};

std::string_view to_string(Quantifier q) noexcept;

/// Truth of "Q X are Y" given n = |X| and k = |X ∩ Y|.
bool quantifier_holds(Quantifier q, unsigned n, unsigned k) noexcept;

/// True if the quantifier presupposes a nonempty restrictor (every, all but one, bare articles).
bool presupposes_restrictor(Quantifier q) noexcept;

enum class Temporal : std::uint8_t { Now, Always, Never };

/// Quantified noun phrase. Predicates are keyed "n:<noun words>" and "a:<adjective>".
struct NounPhraseMeaning {
    Quantifier quantifier = Quantifier::Definite;
    bool negated = false;  // "not a man": negates this quantifier's whole scope
    std::string noun;
    std::vector<std::string> adjectives;

    friend bool operator==(const NounPhraseMeaning&, const NounPhraseMeaning&) = default;
};

/// subject-Q x. NEG? [ adverbs(x) ∧ object-Q y. TEMP verb(x, y) ]
/// or, without an object, subject-Q x. NEG? [ adverbs(x) ∧ TEMP verb(x) ].
/// Verbs are keyed "v:<words>/<arity>", adverbs "d:<adverb>".
struct QuantifiedProposition {
    NounPhraseMeaning subject;
    bool body_negated = false;
    Temporal temporal = Temporal::Now;
    std::vector<std::string> adverbs;
    std::string verb;
    std::optional<NounPhraseMeaning> object;

    friend bool operator==(const QuantifiedProposition&, const QuantifiedProposition&) = default;
};

/// Readable form for diagnostics, e.g. "Every x:[n:man a:old]. [v:sitting in/2 (Definite y:[n:field])]".
std::string describe(const QuantifiedProposition& p);

/// Maps determiners and verb-group words to the logical form. Throws InterpretationError for a
/// determiner or verb-group word it has no reading for.
QuantifiedProposition interpret(const parser::SvoSentence& sentence);

}  // namespace sicck::natlog
