#pragma once

#include "sicck/core/lexicon.hpp"
#include "sicck/parser/svo.hpp"

#include <string>
#include <vector>

namespace sicck::modify {

using parser::Grammar;
using parser::SvoSentence;

/// Writes `modifier` into `slot` and re-parses the result.
/// Throws SlotMissing if the sentence has no such slot, InadmissibleModifier if the entry
/// does not list the slot.
SvoSentence apply_modifier(const SvoSentence& sentence, Slot slot, const ModifierEntry& modifier,
                           const Grammar& grammar);

struct SlotEdit {
    Slot slot = Slot::Subject;
    ModifierEntry modifier;

    friend bool operator==(const SlotEdit&, const SlotEdit&) = default;
};

enum class Target : std::uint8_t { PremiseOnly, HypothesisOnly, Both };

/// One or two slot edits applied together. No edits means the identity request.
struct ModificationRequest {
    std::vector<SlotEdit> edits;
    Target target = Target::Both;

    SlotSet slots() const;
    /// Edit surfaces joined with '+', e.g. "every+some". Empty for the identity request.
    std::string surface() const;
    /// Shared modifier type of the edits. Only meaningful when edits is nonempty.
    ModifierType type() const;

    friend bool operator==(const ModificationRequest&, const ModificationRequest&) = default;
};

struct VariantPair {
    SvoSentence premise;
    SvoSentence hypothesis;
    bool premise_modified = false;
    bool hypothesis_modified = false;
};

/// (P', H), (P, H'), (P', H') for Target::Both, skipping sides that lack a requested slot.
/// The identity request yields [(P, H)]. Throws SlotMissing when no side can take the edits,
/// or when a one-sided target names a side without the slot.
std::vector<VariantPair> generate_variants(const SvoSentence& premise, const SvoSentence& hypothesis,
                                           const ModificationRequest& request, const Grammar& grammar);

/// Requests for one seed pair: S, V, O, S+O, V+O crossed with the admissible entries. Two-slot
/// requests pair entries of the same modifier type. A slot is used when either sentence has it.
std::vector<ModificationRequest> enumerate_combinations(const SvoSentence& premise, const SvoSentence& hypothesis,
                                                        const Lexicon& lexicon);

}  // namespace sicck::modify
