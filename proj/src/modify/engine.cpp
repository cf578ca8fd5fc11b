#include "sicck/modify/engine.hpp"

#include "sicck/core/errors.hpp"
#include "sicck/core/text.hpp"

#include <cctype>
#include <fmt/format.h>

namespace sicck::modify {

namespace {

using Tokens = std::vector<std::string>;
using Diff = std::ptrdiff_t;

bool starts_upper(const std::string& w) { return !w.empty() && std::isupper(static_cast<unsigned char>(w[0])); }

std::string with_first(std::string w, bool upper) {
    if (!w.empty()) {
        w[0] = static_cast<char>(upper ? std::toupper(static_cast<unsigned char>(w[0]))
                                       : std::tolower(static_cast<unsigned char>(w[0])));
    }
    return w;
}

bool is_indefinite(const std::string& lower) { return lower == "a" || lower == "an"; }

bool starts_with_vowel(const std::string& w) {
    return !w.empty() && std::string_view("aeiou").find(static_cast<char>(std::tolower(static_cast<unsigned char>(w[0])))) !=
                             std::string_view::npos;
}

/// "a"/"an" chosen for the word that follows, keeping the article's capitalisation.
std::string repaired_article(const std::string& article, const std::string& next) {
    return with_first(starts_with_vowel(next) ? "an" : "a", starts_upper(article));
}

Tokens words_of(std::string_view text) {
    Tokens out;
    for (auto w : split_whitespace(text)) out.emplace_back(w);
    return out;
}

void replace_range(Tokens& t, std::size_t begin, std::size_t end, const Tokens& with) {
    t.erase(t.begin() + static_cast<Diff>(begin), t.begin() + static_cast<Diff>(end));
    t.insert(t.begin() + static_cast<Diff>(begin), with.begin(), with.end());
}

Tokens edit_noun_phrase(const SvoSentence& s, const parser::NounPhraseSpan& np, const ModifierEntry& m) {
    Tokens t = s.original;
    const std::size_t b = np.span.begin;
    const std::size_t d = np.determiner_end;
    const Tokens text = words_of(m.rewrite.text);

    // [at, at + removed) is replaced by `added`
    std::size_t at = b;
    std::size_t removed = 0;
    Tokens added = text;
    switch (m.rewrite.kind) {
        case RewriteKind::Determiner: removed = d - b; break;
        case RewriteKind::Numeral:
            removed = d - b;
            added.emplace_back(d > b && s.tokens[d - 1] == "two" ? "two" : "one");
            break;
        case RewriteKind::Prefix: break;
        case RewriteKind::ArticleAdjective:
            if (d == b + 1 && is_indefinite(s.tokens[b])) {
                removed = 1;
                added.insert(added.begin(), repaired_article(t[b], text.front()));
                break;
            }
            [[fallthrough]];
        case RewriteKind::Adjective:
            at = d;
            if (d > b && is_indefinite(s.tokens[d - 1])) t[d - 1] = repaired_article(t[d - 1], text.front());
            break;
        case RewriteKind::Adverb:
            throw InadmissibleModifier(fmt::format("'{}' cannot modify a noun phrase", m.surface));
    }
    replace_range(t, at, at + removed, added);

    if (at == 0 && starts_upper(s.original[0])) {
        if (removed == 0) t[added.size()] = with_first(t[added.size()], false);
        t[0] = with_first(t[0], true);
    }
    return t;
}

Tokens edit_verb(const SvoSentence& s, const ModifierEntry& m) {
    Tokens t = s.original;
    const Tokens words = words_of(m.surface);
    replace_range(t, s.verb.begin + 1, s.verb.begin + 1, words);
    return t;
}

}  // namespace

SvoSentence apply_modifier(const SvoSentence& sentence, Slot slot, const ModifierEntry& modifier,
                           const Grammar& grammar) {
    if (!modifier.slots.contains(slot)) {
        throw InadmissibleModifier(fmt::format("'{}' is not admissible at the {} slot", modifier.surface, to_string(slot)));
    }
    Tokens edited;
    switch (slot) {
        case Slot::Subject: edited = edit_noun_phrase(sentence, sentence.subject, modifier); break;
        case Slot::Verb: edited = edit_verb(sentence, modifier); break;
        case Slot::Object:
            if (!sentence.object) {
                throw SlotMissing(fmt::format("'{}' has no object", sentence.render()));
            }
            edited = edit_noun_phrase(sentence, *sentence.object, modifier);
            break;
    }
    return parser::parse_sentence(join(edited, " "), grammar);
}

SlotSet ModificationRequest::slots() const {
    SlotSet out;
    for (const auto& e : edits) out.insert(e.slot);
    return out;
}

std::string ModificationRequest::surface() const {
    std::vector<std::string> parts;
    for (const auto& e : edits) parts.push_back(e.modifier.surface);
    return join(parts, "+");
}

ModifierType ModificationRequest::type() const {
    return edits.empty() ? ModifierType::Universal : edits.front().modifier.type;
}

namespace {

bool accepts(const SvoSentence& s, const ModificationRequest& r) {
    for (const auto& e : r.edits) {
        if (!s.has_slot(e.slot)) return false;
    }
    return true;
}

SvoSentence apply_all(SvoSentence s, const ModificationRequest& r, const Grammar& grammar) {
    for (const auto& e : r.edits) s = apply_modifier(s, e.slot, e.modifier, grammar);
    return s;
}

}  // namespace

std::vector<VariantPair> generate_variants(const SvoSentence& premise, const SvoSentence& hypothesis,
                                           const ModificationRequest& request, const Grammar& grammar) {
    if (request.edits.empty()) {
        return {VariantPair{premise, hypothesis, false, false}};
    }
    const bool on_p = request.target != Target::HypothesisOnly;
    const bool on_h = request.target != Target::PremiseOnly;
    const bool p_ok = on_p && accepts(premise, request);
    const bool h_ok = on_h && accepts(hypothesis, request);
    if ((request.target == Target::PremiseOnly && !p_ok) || (request.target == Target::HypothesisOnly && !h_ok) ||
        (!p_ok && !h_ok)) {
        throw SlotMissing(fmt::format("no side of the pair has the {} slot(s)", request.slots().code()));
    }

    std::vector<VariantPair> out;
    std::optional<SvoSentence> p2;
    std::optional<SvoSentence> h2;
    if (p_ok) p2 = apply_all(premise, request, grammar);
    if (h_ok) h2 = apply_all(hypothesis, request, grammar);
    if (p2) out.push_back({*p2, hypothesis, true, false});
    if (h2) out.push_back({premise, *h2, false, true});
    if (p2 && h2) out.push_back({*p2, *h2, true, true});
    return out;
}

std::vector<ModificationRequest> enumerate_combinations(const SvoSentence& premise, const SvoSentence& hypothesis,
                                                        const Lexicon& lexicon) {
    auto present = [&](Slot s) { return premise.has_slot(s) || hypothesis.has_slot(s); };
    std::vector<ModificationRequest> out;
    for (Slot s : kAllSlots) {
        if (!present(s)) continue;
        for (const auto& m : lexicon.modifiers_for_slot(s)) {
            out.push_back({{SlotEdit{s, m}}, Target::Both});
        }
    }
    if (!present(Slot::Object)) return out;
    for (Slot first : {Slot::Subject, Slot::Verb}) {
        const auto objects = lexicon.modifiers_for_slot(Slot::Object);
        for (const auto& a : lexicon.modifiers_for_slot(first)) {
            for (const auto& b : objects) {
                if (a.type != b.type) continue;
                out.push_back({{SlotEdit{first, a}, SlotEdit{Slot::Object, b}}, Target::Both});
            }
        }
    }
    return out;
}

}  // namespace sicck::modify
