#pragma once

#include "sicck/core/labels.hpp"
#include "sicck/core/lexicon.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sicck {

/// One premise/hypothesis pair with its modification metadata.
struct DatasetRecord {
    std::string id;
    int seed_id = 0;
    std::string premise;
    std::string hypothesis;
    bool premise_modified = false;
    bool hypothesis_modified = false;
    SlotSet slots;
    std::optional<std::string> modifier_surface;
    std::optional<ModifierType> modifier_type;
    NliLabel seed_label = NliLabel::Neutral;
    std::optional<GoldLabel> gold_label;  // empty only for unlabeled rows of ingested data

    bool is_original() const noexcept { return !premise_modified && !hypothesis_modified; }

    friend bool operator==(const DatasetRecord&, const DatasetRecord&) = default;
};

/// Returns an empty string if the record satisfies the record invariants, otherwise a description.
std::string validate(const DatasetRecord& record);

}  // namespace sicck
