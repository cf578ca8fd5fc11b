#include "sicck/dataset/jsonl.hpp"

#include "sicck/core/errors.hpp"
#include "sicck/core/text.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>

namespace sicck::dataset {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kKeys[] = {"id",         "seed_id",        "premise",          "hypothesis",
                                 "premise_modified", "hypothesis_modified", "slots", "modifier_surface",
                                 "modifier_type", "seed_label",  "gold_label"};

json to_json(const DatasetRecord& r) {
    json j;
    j["id"] = r.id;
    j["seed_id"] = r.seed_id;
    j["premise"] = r.premise;
    j["hypothesis"] = r.hypothesis;
    j["premise_modified"] = r.premise_modified;
    j["hypothesis_modified"] = r.hypothesis_modified;
    json slots = json::array();
    for (Slot s : r.slots.to_vector()) slots.push_back(std::string(to_string(s)));
    j["slots"] = slots;
    j["modifier_surface"] = r.modifier_surface ? json(*r.modifier_surface) : json(nullptr);
    j["modifier_type"] = r.modifier_type ? json(std::string(to_string(*r.modifier_type))) : json(nullptr);
    j["seed_label"] = std::string(to_string(r.seed_label));
    j["gold_label"] = r.gold_label ? json(to_string(*r.gold_label)) : json(nullptr);
    return j;
}

// Structural errors bubble up as std::runtime_error with a message; label errors stay LabelParseError.
DatasetRecord from_json(const json& j) {
    if (!j.is_object()) throw std::runtime_error("line is not a JSON object");
    for (const auto& [key, value] : j.items()) {
        if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys)) {
            throw std::runtime_error(fmt::format("unknown field '{}'", key));
        }
    }
    auto field = [&](const char* key) -> const json& {
        const auto it = j.find(key);
        if (it == j.end()) throw std::runtime_error(fmt::format("missing field '{}'", key));
        return *it;
    };
    auto text = [&](const char* key) {
        const auto& v = field(key);
        if (!v.is_string()) throw std::runtime_error(fmt::format("field '{}' must be a string", key));
        return v.get<std::string>();
    };
    auto flag = [&](const char* key) {
        const auto& v = field(key);
        if (!v.is_boolean()) throw std::runtime_error(fmt::format("field '{}' must be a boolean", key));
        return v.get<bool>();
    };
    auto optional_text = [&](const char* key) -> std::optional<std::string> {
        const auto& v = field(key);
        if (v.is_null()) return std::nullopt;
        if (!v.is_string()) throw std::runtime_error(fmt::format("field '{}' must be a string or null", key));
        return v.get<std::string>();
    };

    DatasetRecord r;
    r.id = text("id");
    const auto& seed = field("seed_id");
    if (!seed.is_number_integer()) throw std::runtime_error("field 'seed_id' must be an integer");
    r.seed_id = seed.get<int>();
    r.premise = text("premise");
    r.hypothesis = text("hypothesis");
    r.premise_modified = flag("premise_modified");
    r.hypothesis_modified = flag("hypothesis_modified");
    const auto& slots = field("slots");
    if (!slots.is_array()) throw std::runtime_error("field 'slots' must be an array");
    for (const auto& s : slots) {
        if (!s.is_string()) throw std::runtime_error("slot names must be strings");
        try {
            const Slot slot = parse_slot(s.get<std::string>());
            if (r.slots.contains(slot)) throw std::runtime_error("duplicate slot");
            r.slots.insert(slot);
        } catch (const ConfigError& e) {
            throw std::runtime_error(e.what());
        }
    }
    r.modifier_surface = optional_text("modifier_surface");
    if (auto t = optional_text("modifier_type")) {
        try {
            r.modifier_type = parse_modifier_type(*t);
        } catch (const ConfigError& e) {
            throw std::runtime_error(e.what());
        }
    }
    r.seed_label = parse_nli_label(text("seed_label"));
    if (auto g = optional_text("gold_label")) r.gold_label = parse_gold_label(*g);
    return r;
}

}  // namespace

std::string serialize_record(const DatasetRecord& record) {
    return to_json(record).dump(-1, ' ', false, json::error_handler_t::strict);
}

std::string serialize_records(const std::vector<DatasetRecord>& records) {
    std::string out;
    for (const auto& r : records) {
        out += serialize_record(r);
        out += '\n';
    }
    return out;
}

std::vector<DatasetRecord> parse_records(std::string_view text) {
    std::vector<DatasetRecord> out;
    std::vector<RowError> errors;
    std::size_t line_no = 0;
    for (std::string_view line : split_lines(text)) {
        ++line_no;
        if (trim(line).empty()) continue;
        try {
            auto record = from_json(json::parse(line));
            if (auto problem = validate(record); !problem.empty()) throw std::runtime_error(problem);
            out.push_back(std::move(record));
        } catch (const LabelParseError& e) {
            throw LabelParseError(fmt::format("line {}: {}", line_no, e.what()));
        } catch (const json::exception& e) {
            errors.push_back({line_no, fmt::format("invalid JSON: {}", e.what())});
        } catch (const std::runtime_error& e) {
            errors.push_back({line_no, e.what()});
        }
    }
    if (!errors.empty()) throw SchemaError(std::move(errors));
    return out;
}

}  // namespace sicck::dataset
