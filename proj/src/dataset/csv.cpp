#include "sicck/dataset/csv.hpp"

#include "sicck/core/errors.hpp"
#include "sicck/core/text.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <optional>

namespace sicck::dataset {

namespace {

constexpr std::string_view kFields[] = {"id",         "seed_id",        "premise",          "hypothesis",
                                        "premise_modified", "hypothesis_modified", "slots", "modifier_surface",
                                        "modifier_type", "seed_label", "gold_label"};
constexpr std::string_view kRequired[] = {"premise", "hypothesis", "seed_id", "gold_label"};

std::vector<std::string> split_row(std::string_view line, char delim, std::size_t lineno) {
    std::vector<std::string> out;
    std::string cell;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c != '"') {
                cell += c;
            } else if (i + 1 < line.size() && line[i + 1] == '"') {
                cell += '"';
                ++i;
            } else {
                quoted = false;
            }
        } else if (c == '"' && cell.empty()) {
            quoted = true;
        } else if (c == delim) {
            out.push_back(std::move(cell));
            cell.clear();
        } else {
            cell += c;
        }
    }
    if (quoted) throw ConfigError(fmt::format("line {}: unterminated quoted field", lineno));
    out.push_back(std::move(cell));
    return out;
}

bool parse_flag(std::string_view cell) {
    const std::string v = ascii_lower(trim(cell));
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError(fmt::format("'{}' is not a boolean", cell));
}

SlotSet parse_slots(std::string_view cell, std::string_view separator) {
    SlotSet out;
    std::string rest(trim(cell));
    std::vector<std::string> parts;
    if (separator.empty()) {
        parts.push_back(rest);
    } else {
        std::size_t pos = 0;
        while (true) {
            const auto next = rest.find(separator, pos);
            parts.push_back(rest.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
            if (next == std::string::npos) break;
            pos = next + separator.size();
        }
    }
    for (const auto& part : parts) {
        const auto p = trim(part);
        if (p.empty()) continue;
        try {
            out.insert(parse_slot(p));
        } catch (const ConfigError&) {
            // compact codes such as "SO" or "VO"
            for (char c : p) out.insert(parse_slot(std::string_view(&c, 1)));
        }
    }
    return out;
}

}  // namespace

ColumnMapping ColumnMapping::parse(std::string_view text) {
    ColumnMapping m;
    std::size_t lineno = 0;
    for (auto line : split_lines(text)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ConfigError(fmt::format("column config line {}: expected key = value", lineno));
        const std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
        if (key == "delimiter") {
            if (value == "tab" || value == "\\t") {
                m.delimiter = '\t';
            } else if (value.size() == 1) {
                m.delimiter = value[0];
            } else {
                throw ConfigError(fmt::format("column config line {}: delimiter must be one character", lineno));
            }
        } else if (key == "slot_separator") {
            m.slot_separator = value;
        } else if (key.starts_with("column.")) {
            const std::string field = key.substr(7);
            if (std::find(std::begin(kFields), std::end(kFields), field) == std::end(kFields)) {
                throw ConfigError(fmt::format("column config line {}: unknown field '{}'", lineno, field));
            }
            m.columns[field] = value;
        } else {
            throw ConfigError(fmt::format("column config line {}: unknown key '{}'", lineno, key));
        }
    }
    for (auto field : kRequired) {
        if (!m.columns.contains(std::string(field))) {
            throw ConfigError(fmt::format("column config does not map required field '{}'", field));
        }
    }
    return m;
}

ColumnMapping ColumnMapping::load(const std::filesystem::path& path) { return parse(read_file(path)); }

std::vector<std::vector<std::string>> read_delimited(std::string_view text, char delimiter) {
    std::vector<std::vector<std::string>> rows;
    std::size_t lineno = 0;
    for (auto line : split_lines(text)) {
        ++lineno;
        rows.push_back(split_row(line, delimiter, lineno));
    }
    return rows;
}

std::vector<DatasetRecord> parse_mapped(std::string_view text, const ColumnMapping& mapping, const SeedTable* seeds) {
    const bool infer_flags =
        !mapping.columns.contains("premise_modified") || !mapping.columns.contains("hypothesis_modified");
    if (infer_flags && seeds == nullptr) {
        throw ConfigError("modified flags are not mapped and no seed table was given to infer them");
    }

    const auto lines = split_lines(text);
    std::size_t first = 0;
    while (first < lines.size() && trim(lines[first]).empty()) ++first;
    if (first == lines.size()) return {};
    const auto header = split_row(lines[first], mapping.delimiter, first + 1);

    std::map<std::string, std::size_t> index;  // field -> column
    for (const auto& [field, name] : mapping.columns) {
        const auto it = std::find_if(header.begin(), header.end(), [&](const std::string& h) { return trim(h) == name; });
        if (it == header.end()) throw ConfigError(fmt::format("header has no column '{}' (for {})", name, field));
        index[field] = static_cast<std::size_t>(it - header.begin());
    }

    std::vector<DatasetRecord> out;
    std::vector<RowError> errors;
    for (std::size_t i = first + 1; i < lines.size(); ++i) {
        const std::size_t lineno = i + 1;
        if (trim(lines[i]).empty()) continue;
        try {
            const auto cells = split_row(lines[i], mapping.delimiter, lineno);
            auto cell = [&](const char* field) -> std::optional<std::string> {
                const auto it = index.find(field);
                if (it == index.end()) return std::nullopt;
                if (it->second >= cells.size()) throw ConfigError(fmt::format("row has no column '{}'", mapping.columns.at(field)));
                std::string v(trim(cells[it->second]));
                if (v.empty()) return std::nullopt;
                return v;
            };

            DatasetRecord r;
            r.id = cell("id").value_or(fmt::format("row-{}", lineno));
            const auto seed_text = cell("seed_id").value_or("");
            const auto [ptr, ec] = std::from_chars(seed_text.data(), seed_text.data() + seed_text.size(), r.seed_id);
            if (ec != std::errc{} || ptr != seed_text.data() + seed_text.size()) {
                throw ConfigError(fmt::format("seed_id '{}' is not an integer", seed_text));
            }
            r.premise = cell("premise").value_or("");
            r.hypothesis = cell("hypothesis").value_or("");
            if (infer_flags) {
                const auto& seed = seeds->at(r.seed_id);
                r.premise_modified = r.premise != seed.premise;
                r.hypothesis_modified = r.hypothesis != seed.hypothesis;
            } else {
                r.premise_modified = parse_flag(cell("premise_modified").value_or(""));
                r.hypothesis_modified = parse_flag(cell("hypothesis_modified").value_or(""));
            }
            if (const auto s = cell("slots")) r.slots = parse_slots(*s, mapping.slot_separator);
            r.modifier_surface = cell("modifier_surface");
            if (const auto t = cell("modifier_type")) r.modifier_type = parse_modifier_type(*t);
            if (const auto l = cell("seed_label")) {
                r.seed_label = parse_nli_label(*l);
            } else if (seeds != nullptr) {
                r.seed_label = seeds->at(r.seed_id).sick_label;
            }
            if (const auto g = cell("gold_label")) r.gold_label = parse_gold_label(*g);
            if (auto problem = validate(r); !problem.empty()) throw ConfigError(problem);
            out.push_back(std::move(r));
        } catch (const LabelParseError& e) {
            throw LabelParseError(fmt::format("line {}: {}", lineno, e.what()));
        } catch (const Error& e) {
            errors.push_back({lineno, e.what()});
        }
    }
    if (!errors.empty()) throw SchemaError(std::move(errors));
    return out;
}

}  // namespace sicck::dataset
