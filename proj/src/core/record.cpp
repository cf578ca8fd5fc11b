#include "sicck/core/record.hpp"

namespace sicck {

std::string validate(const DatasetRecord& r) {
    if (r.id.empty()) return "empty id";
    if (r.seed_id < 1 || r.seed_id > 15) return "seed_id out of range [1,15]";
    if (r.premise.empty() || r.hypothesis.empty()) return "empty premise or hypothesis";
    if (r.is_original()) {
        if (!r.slots.empty()) return "unmodified record carries slots";
        if (r.modifier_surface || r.modifier_type) return "unmodified record carries a modifier";
        return {};
    }
    if (r.slots.empty()) return "modified record has no slot";
    if (!r.slots.is_valid_combination()) return "slot combination " + r.slots.code() + " is not one of S, V, O, SO, VO";
    if (!r.modifier_type) return "modified record has no modifier type";
    return {};
}

}  // namespace sicck
