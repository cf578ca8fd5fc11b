#pragma once

#include "sicck/core/labels.hpp"
#include "sicck/kernels/kernels.hpp"
#include "sicck/natlog/axioms.hpp"
#include "sicck/natlog/proposition.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sicck::natlog {

/// Worlds where a proposition holds, as a bitset over an enumerated universe.
class TruthSet {
public:
    TruthSet() = default;
    TruthSet(std::uint64_t universe_id, std::size_t universe_size, std::vector<std::uint64_t> members);

    std::uint64_t universe_id() const noexcept { return universe_id_; }
    std::size_t universe_size() const noexcept { return size_; }
    const std::vector<std::uint64_t>& words() const noexcept { return members_; }

    bool contains(std::size_t world) const noexcept { return (members_[world / 64] >> (world % 64)) & 1u; }
    std::size_t count() const noexcept;

private:
    std::uint64_t universe_id_ = 0;
    std::size_t size_ = 0;
    std::vector<std::uint64_t> members_;
};

/// Table 3 conditions in priority order: Equivalence, FE, RE, Negation, Alternation, Cover, Independence.
Relation classify_profile(const kernels::SetProfile& profile) noexcept;

/// Throws UniverseMismatch if the sets come from different enumerations.
Relation classify_relation(const TruthSet& x, const TruthSet& y);

struct ModelOptions {
    int max_entities = 4;                  // entities per world, 1..5
    std::size_t max_worlds = 4'000'000;    // OracleBudgetError beyond this
    bool presuppose_restrictors = true;    // every / all but one / bare articles need a nonempty restrictor
};

struct ModelSet {
    TruthSet premise;
    TruthSet hypothesis;
    std::size_t worlds = 0;
};

/// Enumerates every world with 1..max_entities entities that satisfies the axioms and both
/// propositions' presuppositions, up to isomorphism, and evaluates both propositions in each.
/// Throws OracleBudgetError for max_entities outside [1, 5] or when the world count exceeds the budget.
ModelSet enumerate_models(const QuantifiedProposition& premise, const QuantifiedProposition& hypothesis,
                          const ModelOptions& options, const std::vector<Axiom>& axioms = {});

}  // namespace sicck::natlog
