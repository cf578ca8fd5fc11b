#pragma once

#include "sicck/core/record.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sicck::dataset {

/// Counters from a generation run.
struct GenerationAudit {
    std::size_t requests = 0;           // modification requests enumerated
    std::size_t pairs_before_dedup = 0; // modified pairs produced
    std::size_t duplicates_removed = 0;
    std::size_t fallbacks = 0;          // pairs labelled Independence by the oracle's fallback

    friend bool operator==(const GenerationAudit&, const GenerationAudit&) = default;
};

struct CorpusManifest {
    std::size_t record_count = 0;
    std::size_t original_count = 0;
    std::size_t modified_count = 0;
    std::size_t labeled_count = 0;
    std::size_t unlabeled_count = 0;
    std::map<ModifierGroup, std::size_t> counts_by_modifier_type;  // modified records
    std::map<Slot, std::size_t> counts_by_slot;                    // a two-slot record counts for both
    std::map<std::string, std::size_t> counts_by_gold_label;       // canonical label text
    std::string source_checksum;                                   // "fnv1a64:<hex>" of the canonical serialization
    std::optional<GenerationAudit> generation;

    /// Sum of counts_by_modifier_type: the modified-pair total the type tables add up to.
    std::size_t modifier_type_total() const;
    /// Sum of counts_by_gold_label: the labelled total.
    std::size_t gold_label_total() const;

    friend bool operator==(const CorpusManifest&, const CorpusManifest&) = default;
};

/// Exact counts; independent of record order apart from the checksum.
CorpusManifest compute_stats(const std::vector<DatasetRecord>& records);

/// Pretty-printed JSON with a fixed key order, every label and group present (zeros included).
std::string manifest_to_json(const CorpusManifest& manifest);

/// Canonical label order for reports: the seven relations, then the two ambiguous labels.
const std::vector<std::string>& gold_label_names();

}  // namespace sicck::dataset
