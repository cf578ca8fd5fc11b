#include "sicck/natlog/annotate.hpp"

#include "sicck/core/errors.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace sicck::natlog {

namespace {

bool is_singleton(const std::string& noun, const std::vector<Axiom>& axioms) {
    return std::any_of(axioms.begin(), axioms.end(),
                       [&](const Axiom& a) { return a.kind == Axiom::Kind::Singleton && a.a == noun; });
}

// "all but one" is decidable only when the restrictor is known to hold exactly one entity.
bool all_but_one_undetermined(const QuantifiedProposition& p, const std::vector<Axiom>& axioms) {
    auto check = [&](const NounPhraseMeaning& np) {
        return np.quantifier == Quantifier::AllButOne && (!np.adjectives.empty() || !is_singleton(np.noun, axioms));
    };
    return check(p.subject) || (p.object && check(*p.object));
}

Annotation fallback(std::string note) {
    Annotation a;
    a.fallback = true;
    a.note = std::move(note);
    return a;
}

}  // namespace

Annotation annotate_detailed(const parser::SvoSentence& premise, const parser::SvoSentence& hypothesis,
                             Relation seed_relation, const Lexicon& lexicon, const AnnotateOptions& options) {
    const auto p = interpret(premise);
    const auto h = interpret(hypothesis);
    const auto axioms = derive_axioms(p, h, seed_relation, lexicon);
    if (all_but_one_undetermined(p, axioms) || all_but_one_undetermined(h, axioms)) {
        return fallback("restrictor size of 'all but one' is undetermined");
    }
    ModelOptions mo;
    mo.max_entities = options.max_entities;
    mo.max_worlds = options.max_worlds;
    mo.presuppose_restrictors = !is_coreferent_relation(seed_relation);
    ModelSet models;
    try {
        models = enumerate_models(p, h, mo, axioms);
    } catch (const OracleBudgetError& e) {
        return fallback(e.what());
    }
    if (models.worlds == 0) return fallback("no world satisfies both sentences' presuppositions");
    Annotation out;
    out.relation = classify_relation(models.premise, models.hypothesis);
    out.worlds = models.worlds;
    return out;
}

GoldLabel annotate_pair(const parser::SvoSentence& premise, const parser::SvoSentence& hypothesis,
                        Relation seed_relation, const Lexicon& lexicon, const AnnotateOptions& options) {
    return annotate_detailed(premise, hypothesis, seed_relation, lexicon, options).relation;
}

Relation derive_seed_relation(const SeedPair& seed, const parser::Grammar& grammar, const Lexicon& lexicon,
                              const AnnotateOptions& options) {
    const auto p = parser::parse_sentence(seed.premise, grammar);
    const auto h = parser::parse_sentence(seed.hypothesis, grammar);
    Relation assumed = Relation::Independence;
    switch (seed.sick_label) {
        case NliLabel::Entailment: assumed = Relation::ForwardEntailment; break;
        case NliLabel::Neutral: assumed = Relation::Independence; break;
        case NliLabel::Contradiction: assumed = Relation::Alternation; break;
    }
    return annotate_detailed(p, h, assumed, lexicon, options).relation;
}

}  // namespace sicck::natlog
