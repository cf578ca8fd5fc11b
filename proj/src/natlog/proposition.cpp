#include "sicck/natlog/proposition.hpp"

#include "sicck/core/errors.hpp"
#include "sicck/core/text.hpp"

#include <fmt/format.h>

namespace sicck::natlog {

std::string_view to_string(Quantifier q) noexcept {
    switch (q) {
        case Quantifier::Every: return "Every";
        case Quantifier::Some: return "Some";
        case Quantifier::No: return "No";
        case Quantifier::NotEvery: return "NotEvery";
        case Quantifier::ExactlyOne: return "ExactlyOne";
        case Quantifier::AllButOne: return "AllButOne";
        case Quantifier::AtLeastOne: return "AtLeastOne";
        case Quantifier::Definite: return "Definite";
    }
    return "?";
}

bool quantifier_holds(Quantifier q, unsigned n, unsigned k) noexcept {
    switch (q) {
        case Quantifier::Every: return k == n;
        case Quantifier::Some:
        case Quantifier::AtLeastOne:
        case Quantifier::Definite: return k >= 1;
        case Quantifier::No: return k == 0;
        case Quantifier::NotEvery: return k < n;
        case Quantifier::ExactlyOne: return k == 1;
        case Quantifier::AllButOne: return k + 1 == n;
    }
    return false;
}

bool presupposes_restrictor(Quantifier q) noexcept {
    return q == Quantifier::Every || q == Quantifier::AllButOne || q == Quantifier::Definite;
}

namespace {

std::string np_text(const NounPhraseMeaning& np, char var) {
    std::string preds = np.noun;
    for (const auto& a : np.adjectives) preds += " " + a;
    return fmt::format("{}{} {}:[{}]", np.negated ? "not " : "", to_string(np.quantifier), var, preds);
}

struct DeterminerReading {
    std::string_view text;
    Quantifier quantifier;
};

constexpr DeterminerReading kReadings[] = {
    {"", Quantifier::Definite},
    {"a", Quantifier::Definite},
    {"an", Quantifier::Definite},
    {"the", Quantifier::Definite},
    {"two", Quantifier::Definite},
    {"every", Quantifier::Every},
    {"always", Quantifier::Every},
    {"every one of the", Quantifier::Every},
    {"some", Quantifier::AtLeastOne},
    {"at least one", Quantifier::AtLeastOne},
    {"at least two", Quantifier::AtLeastOne},
    {"exactly one", Quantifier::ExactlyOne},
    {"all but one", Quantifier::AllButOne},
    {"no", Quantifier::No},
    {"never", Quantifier::No},
    {"not every", Quantifier::NotEvery},
};

NounPhraseMeaning read_noun_phrase(const parser::SvoSentence& s, const parser::NounPhraseSpan& np) {
    std::vector<std::string> det(s.tokens.begin() + static_cast<std::ptrdiff_t>(np.span.begin),
                                 s.tokens.begin() + static_cast<std::ptrdiff_t>(np.determiner_end));
    NounPhraseMeaning out;
    // "not every" is its own quantifier; any other leading "not" negates the phrase
    if (!det.empty() && det.front() == "not" && !(det.size() == 2 && det[1] == "every")) {
        out.negated = true;
        det.erase(det.begin());
    }
    const std::string key = join(det, " ");
    bool found = false;
    for (const auto& r : kReadings) {
        if (r.text == key) {
            out.quantifier = r.quantifier;
            found = true;
            break;
        }
    }
    if (!found) throw InterpretationError(fmt::format("no reading for determiner '{}'", key));

    for (std::size_t i = np.determiner_end; i < np.noun_begin; ++i) out.adjectives.push_back("a:" + s.tokens[i]);
    std::vector<std::string> noun(s.tokens.begin() + static_cast<std::ptrdiff_t>(np.noun_begin),
                                  s.tokens.begin() + static_cast<std::ptrdiff_t>(np.span.end));
    out.noun = "n:" + join(noun, " ");
    return out;
}

}  // namespace

std::string describe(const QuantifiedProposition& p) {
    std::string body;
    for (const auto& a : p.adverbs) body += a + " & ";
    if (p.temporal == Temporal::Always) body += "always ";
    if (p.temporal == Temporal::Never) body += "never ";
    body += p.verb;
    if (p.object) body += " (" + np_text(*p.object, 'y') + ")";
    return fmt::format("{}. {}[{}]", np_text(p.subject, 'x'), p.body_negated ? "not " : "", body);
}

QuantifiedProposition interpret(const parser::SvoSentence& s) {
    using parser::PosTag;
    QuantifiedProposition out;
    out.subject = read_noun_phrase(s, s.subject);

    std::string head = "be";
    for (std::size_t i = s.verb.begin; i < s.verb.end; ++i) {
        const std::string& w = s.tokens[i];
        if (w == "isn't" || w == "aren't" || w == "not") {
            out.body_negated = !out.body_negated;
        } else if (w == "always" || w == "never") {
            if (out.temporal != Temporal::Now) throw InterpretationError("two temporal adverbs in one verb group");
            out.temporal = w == "always" ? Temporal::Always : Temporal::Never;
        } else if (s.tags[i] == PosTag::Adv) {
            out.adverbs.push_back("d:" + w);
        } else if (s.tags[i] == PosTag::Verb) {
            head = w;
        } else if (s.tags[i] != PosTag::Aux) {
            throw InterpretationError(fmt::format("no reading for '{}' in the verb group", w));
        }
    }

    // predicate material between the verb group and the object: prepositions, predicative
    // adjectives, intermediate nouns ("on the bag of")
    const std::size_t stop = s.object ? s.object->span.begin : s.tokens.size();
    std::vector<std::string> words{head};
    for (std::size_t i = s.verb.end; i < stop; ++i) {
        const PosTag t = s.tags[i];
        if (t == PosTag::Art || t == PosTag::Num || t == PosTag::Qnt) continue;
        words.push_back(s.tokens[i]);
    }
    out.verb = fmt::format("v:{}/{}", join(words, " "), s.object ? 2 : 1);
    if (s.object) out.object = read_noun_phrase(s, *s.object);
    return out;
}

}  // namespace sicck::natlog
