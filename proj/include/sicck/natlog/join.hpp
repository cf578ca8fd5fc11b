#pragma once

#include "sicck/core/labels.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sicck::natlog {

/// Composition of relations: which R(x, z) are possible given R(x, y) and R(y, z).
class JoinTable {
public:
    /// Enumerates every triple of subsets (empty and full sets included) of universes of size
    /// 1..max_universe. Three sets cut a universe into 8 regions, so 8 already realizes every
    /// configuration and larger universes add nothing.
    static JoinTable compute(int max_universe = 8);

    /// The tab-separated text artifact (49 data rows). Throws ConfigError.
    static JoinTable parse(std::string_view text);
    std::string serialize() const;

    std::vector<Relation> lookup(Relation r1, Relation r2) const;
    bool allows(Relation r1, Relation r2, Relation r) const noexcept;

    friend bool operator==(const JoinTable&, const JoinTable&) = default;

private:
    std::array<std::array<std::uint8_t, 7>, 7> cells_{};  // bit i set: kAllRelations[i] possible
};

/// join over the complete table (universes up to 8).
std::vector<Relation> join_relations(Relation r1, Relation r2);

}  // namespace sicck::natlog
