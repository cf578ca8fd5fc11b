#pragma once

#include "sicck/core/labels.hpp"
#include "sicck/core/lexicon.hpp"
#include "sicck/natlog/proposition.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sicck::natlog {

/// Background knowledge restricting the model space. Arguments are predicate keys.
struct Axiom {
    enum class Kind : std::uint8_t {
        Subset,             // a ⊆ b, pointwise
        Disjoint,           // never both; a unary and a binary predicate may be mixed
        Cover,              // always at least one
        Singleton,          // exactly one entity carries noun a
        ConverseExclusive,  // relation r holds from a to b or from b to a, never both, never neither
    };

    Kind kind = Kind::Subset;
    std::string a;
    std::string b;
    std::string relation;  // ConverseExclusive only

    static Axiom subset(std::string a, std::string b) { return {Kind::Subset, std::move(a), std::move(b), {}}; }
    static Axiom disjoint(std::string a, std::string b) { return {Kind::Disjoint, std::move(a), std::move(b), {}}; }
    static Axiom cover(std::string a, std::string b) { return {Kind::Cover, std::move(a), std::move(b), {}}; }
    static Axiom singleton(std::string noun) { return {Kind::Singleton, std::move(noun), {}, {}}; }
    static Axiom converse_exclusive(std::string r, std::string a, std::string b) {
        return {Kind::ConverseExclusive, std::move(a), std::move(b), std::move(r)};
    }

    friend bool operator==(const Axiom&, const Axiom&) = default;
};

std::string to_string(const Axiom& axiom);

/// Arity of a predicate key: 2 for "v:.../2", otherwise 1.
int arity(const std::string& predicate) noexcept;

/// True for the seed relations read under the coreferent convention (both sentences describe the
/// same scene, so every noun denotes a single entity).
bool is_coreferent_relation(Relation seed_relation) noexcept;

/// Lexical axioms implied by the seed pair's relation. Predicates that differ between the premise
/// and the hypothesis are paired by role (subject noun, object noun, verb, the one differing adjective
/// of a phrase); modifier-lexicon content words are left out of the pairing.
std::vector<Axiom> derive_axioms(const QuantifiedProposition& premise, const QuantifiedProposition& hypothesis,
                                 Relation seed_relation, const Lexicon& lexicon);

}  // namespace sicck::natlog
