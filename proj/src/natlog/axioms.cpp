#include "sicck/natlog/axioms.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace sicck::natlog {

std::string to_string(const Axiom& ax) {
    switch (ax.kind) {
        case Axiom::Kind::Subset: return fmt::format("subset({}, {})", ax.a, ax.b);
        case Axiom::Kind::Disjoint: return fmt::format("disjoint({}, {})", ax.a, ax.b);
        case Axiom::Kind::Cover: return fmt::format("cover({}, {})", ax.a, ax.b);
        case Axiom::Kind::Singleton: return fmt::format("singleton({})", ax.a);
        case Axiom::Kind::ConverseExclusive: return fmt::format("converse-exclusive({}, {}, {})", ax.relation, ax.a, ax.b);
    }
    return "?";
}

int arity(const std::string& predicate) noexcept { return predicate.ends_with("/2") ? 2 : 1; }

bool is_coreferent_relation(Relation r) noexcept { return r == Relation::Negation || r == Relation::Alternation; }

namespace {

struct PairedPredicates {
    std::string premise;
    std::string hypothesis;
};

std::vector<std::string> content_adjectives(const NounPhraseMeaning& np, const Lexicon& lexicon) {
    std::vector<std::string> out;
    for (const auto& a : np.adjectives) {
        if (!lexicon.is_modifier_content_word(a.substr(2))) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void pair_adjectives(const NounPhraseMeaning& p, const NounPhraseMeaning& h, const Lexicon& lexicon,
                     std::vector<PairedPredicates>& out) {
    const auto pa = content_adjectives(p, lexicon);
    const auto ha = content_adjectives(h, lexicon);
    std::vector<std::string> p_only, h_only;
    std::set_difference(pa.begin(), pa.end(), ha.begin(), ha.end(), std::back_inserter(p_only));
    std::set_difference(ha.begin(), ha.end(), pa.begin(), pa.end(), std::back_inserter(h_only));
    if (p_only.size() == 1 && h_only.size() == 1) out.push_back({p_only.front(), h_only.front()});
}

void add_relation_axioms(Relation r, const std::string& p, const std::string& h, std::vector<Axiom>& out) {
    const bool same_arity = arity(p) == arity(h);
    switch (r) {
        case Relation::ForwardEntailment:
            if (same_arity) out.push_back(Axiom::subset(p, h));
            break;
        case Relation::ReverseEntailment:
            if (same_arity) out.push_back(Axiom::subset(h, p));
            break;
        case Relation::Equivalence:
            if (same_arity) {
                out.push_back(Axiom::subset(p, h));
                out.push_back(Axiom::subset(h, p));
            }
            break;
        case Relation::Negation:
            out.push_back(Axiom::disjoint(p, h));
            if (same_arity) out.push_back(Axiom::cover(p, h));
            break;
        case Relation::Alternation: out.push_back(Axiom::disjoint(p, h)); break;
        case Relation::Cover:
            if (same_arity) out.push_back(Axiom::cover(p, h));
            break;
        case Relation::Independence: break;
    }
}

}  // namespace

std::vector<Axiom> derive_axioms(const QuantifiedProposition& p, const QuantifiedProposition& h, Relation seed,
                                 const Lexicon& lexicon) {
    std::vector<Axiom> out;
    if (is_coreferent_relation(seed)) {
        std::vector<std::string> nouns{p.subject.noun, h.subject.noun};
        if (p.object) nouns.push_back(p.object->noun);
        if (h.object) nouns.push_back(h.object->noun);
        std::sort(nouns.begin(), nouns.end());
        nouns.erase(std::unique(nouns.begin(), nouns.end()), nouns.end());
        for (auto& n : nouns) out.push_back(Axiom::singleton(n));
    }

    const bool role_swap = p.object && h.object && p.subject.noun != p.object->noun &&
                           p.subject.noun == h.object->noun && p.object->noun == h.subject.noun;
    if (role_swap) {
        // one described event with the participants' roles exchanged: exactly one direction holds
        if (is_coreferent_relation(seed) && p.verb == h.verb) {
            out.push_back(Axiom::converse_exclusive(p.verb, p.subject.noun, p.object->noun));
        }
        return out;
    }

    std::vector<PairedPredicates> pairs;
    if (p.subject.noun != h.subject.noun) pairs.push_back({p.subject.noun, h.subject.noun});
    if (p.object && h.object && p.object->noun != h.object->noun) pairs.push_back({p.object->noun, h.object->noun});
    if (p.verb != h.verb) pairs.push_back({p.verb, h.verb});
    pair_adjectives(p.subject, h.subject, lexicon, pairs);
    if (p.object && h.object) pair_adjectives(*p.object, *h.object, lexicon, pairs);

    for (const auto& pr : pairs) add_relation_axioms(seed, pr.premise, pr.hypothesis, out);
    return out;
}

}  // namespace sicck::natlog
