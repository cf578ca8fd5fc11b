#pragma once

#include "sicck/core/labels.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace sicck {

struct SeedPair {
    int id = 0;
    NliLabel sick_label = NliLabel::Neutral;
    Relation relation = Relation::Independence;  // gold relation of the unmodified pair
    std::string premise;
    std::string hypothesis;

    friend bool operator==(const SeedPair&, const SeedPair&) = default;
};

/// The reviewed seed table (data/seeds.tsv).
class SeedTable {
public:
    SeedTable() = default;
    explicit SeedTable(std::vector<SeedPair> seeds);

    static SeedTable parse(std::string_view text);
    static SeedTable load(const std::filesystem::path& path);
    std::string serialize() const;

    const std::vector<SeedPair>& seeds() const noexcept { return seeds_; }

    /// Throws ConfigError for an unknown id.
    const SeedPair& at(int id) const;

private:
    std::vector<SeedPair> seeds_;
};

/// Gold relation of an unmodified seed pair. The label must agree with the seed's SICK label
/// (Entailment -> FE, Neutral -> Independence, Contradiction -> Negation or Alternation).
/// Throws ConfigError for an unknown seed or a label the table does not carry.
Relation seed_label_to_relation(NliLabel seed_label, int seed_id, const SeedTable& table);

}  // namespace sicck
