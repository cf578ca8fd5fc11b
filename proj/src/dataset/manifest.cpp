#include "sicck/dataset/manifest.hpp"

#include "sicck/dataset/jsonl.hpp"

#include "sicck/core/text.hpp"

#include <fmt/format.h>
#include <json.hpp>

namespace sicck::dataset {

using json = nlohmann::ordered_json;

const std::vector<std::string>& gold_label_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (Relation r : kAllRelations) out.emplace_back(to_string(r));
        out.push_back(to_string(GoldLabel{AmbiguousLabel::negation_or_alternation()}));
        out.push_back(to_string(GoldLabel{AmbiguousLabel::cover_or_forward()}));
        return out;
    }();
    return names;
}

std::size_t CorpusManifest::modifier_type_total() const {
    std::size_t n = 0;
    for (const auto& [g, c] : counts_by_modifier_type) n += c;
    return n;
}

std::size_t CorpusManifest::gold_label_total() const {
    std::size_t n = 0;
    for (const auto& [l, c] : counts_by_gold_label) n += c;
    return n;
}

CorpusManifest compute_stats(const std::vector<DatasetRecord>& records) {
    CorpusManifest m;
    for (ModifierGroup g : kAllModifierGroups) m.counts_by_modifier_type[g] = 0;
    for (Slot s : kAllSlots) m.counts_by_slot[s] = 0;
    for (const auto& name : gold_label_names()) m.counts_by_gold_label[name] = 0;

    m.record_count = records.size();
    for (const auto& r : records) {
        if (r.is_original()) {
            ++m.original_count;
        } else {
            ++m.modified_count;
            if (r.modifier_type) ++m.counts_by_modifier_type[group_of(*r.modifier_type)];
            for (Slot s : r.slots.to_vector()) ++m.counts_by_slot[s];
        }
        if (r.gold_label) {
            ++m.labeled_count;
            ++m.counts_by_gold_label[to_string(*r.gold_label)];
        } else {
            ++m.unlabeled_count;
        }
    }
    m.source_checksum = fmt::format("fnv1a64:{:016x}", fnv1a64(serialize_records(records)));
    return m;
}

std::string manifest_to_json(const CorpusManifest& m) {
    json j;
    j["record_count"] = m.record_count;
    j["original_count"] = m.original_count;
    j["modified_count"] = m.modified_count;
    j["labeled_count"] = m.labeled_count;
    j["unlabeled_count"] = m.unlabeled_count;
    json types = json::object();
    for (ModifierGroup g : kAllModifierGroups) {
        const auto it = m.counts_by_modifier_type.find(g);
        types[std::string(to_string(g))] = it == m.counts_by_modifier_type.end() ? 0 : it->second;
    }
    j["counts_by_modifier_type"] = types;
    json slots = json::object();
    for (Slot s : kAllSlots) {
        const auto it = m.counts_by_slot.find(s);
        slots[std::string(to_string(s))] = it == m.counts_by_slot.end() ? 0 : it->second;
    }
    j["counts_by_slot"] = slots;
    json labels = json::object();
    for (const auto& name : gold_label_names()) {
        const auto it = m.counts_by_gold_label.find(name);
        labels[name] = it == m.counts_by_gold_label.end() ? 0 : it->second;
    }
    j["counts_by_gold_label"] = labels;
    // the three totals the published tables disagree on, side by side
    j["totals"] = {{"records", m.record_count},
                   {"modifier_type_sum", m.modifier_type_total()},
                   {"gold_label_sum", m.gold_label_total()}};
    j["source_checksum"] = m.source_checksum;
    if (m.generation) {
        j["generation"] = {{"requests", m.generation->requests},
                           {"pairs_before_dedup", m.generation->pairs_before_dedup},
                           {"duplicates_removed", m.generation->duplicates_removed},
                           {"oracle_fallbacks", m.generation->fallbacks}};
    }
    return j.dump(2) + "\n";
}

}  // namespace sicck::dataset
