#pragma once

#include "sicck/core/labels.hpp"
#include "sicck/core/lexicon.hpp"
#include "sicck/core/seeds.hpp"
#include "sicck/natlog/models.hpp"
#include "sicck/parser/svo.hpp"

#include <string>

namespace sicck::natlog {

struct AnnotateOptions {
    int max_entities = 4;
    std::size_t max_worlds = 4'000'000;
};

struct Annotation {
    Relation relation = Relation::Independence;
    bool fallback = false;   // Independence because the oracle could not decide
    std::string note;        // why the fallback fired
    std::size_t worlds = 0;  // size of the universe that was classified
};

/// Interprets both sentences, adds the axioms implied by the seed relation and classifies the
/// truth sets. Falls back to Independence when "all but one" has an undetermined restrictor size,
/// when the budget is exceeded, or when no world satisfies the presuppositions.
Annotation annotate_detailed(const parser::SvoSentence& premise, const parser::SvoSentence& hypothesis,
                             Relation seed_relation, const Lexicon& lexicon, const AnnotateOptions& options = {});

GoldLabel annotate_pair(const parser::SvoSentence& premise, const parser::SvoSentence& hypothesis,
                        Relation seed_relation, const Lexicon& lexicon, const AnnotateOptions& options = {});

/// Recomputes a seed's relation from its SICK label: Entailment and Neutral pairs are classified
/// with the corresponding axioms; Contradiction pairs are classified under the coreferent reading
/// with disjointness only, so the oracle decides between Negation and Alternation.
Relation derive_seed_relation(const SeedPair& seed, const parser::Grammar& grammar, const Lexicon& lexicon,
                              const AnnotateOptions& options = {});

}  // namespace sicck::natlog
