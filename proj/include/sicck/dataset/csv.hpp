#pragma once

#include "sicck/core/record.hpp"
#include "sicck/core/seeds.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sicck::dataset {

/// Column-mapping config for delimited files, as `key = value` lines ('#' starts a comment).
///
///   delimiter = ,              (a single character, or "tab")
///   slot_separator = +         (between slot names in one cell: "S+O", "subject+object")
///   column.<field> = <header>  (field is a DatasetRecord field name)
///
/// premise, hypothesis, seed_id and gold_label must be mapped. Without column.id rows get
/// "row-<line>". Without premise_modified/hypothesis_modified the flags are inferred by comparing
/// each side with the seed's text, which needs the seed table.
struct ColumnMapping {
    char delimiter = ',';
    std::string slot_separator = "+";
    std::map<std::string, std::string> columns;  // field -> header

    static ColumnMapping parse(std::string_view text);
    static ColumnMapping load(const std::filesystem::path& path);
};

/// One row per record (header first). Quoted fields may contain the delimiter and doubled quotes;
/// embedded newlines are not supported.
std::vector<std::vector<std::string>> read_delimited(std::string_view text, char delimiter);

/// Maps and validates every row, then reports all structural row errors together as SchemaError
/// (line numbers are 1-based file lines). An unknown label raises LabelParseError for its line.
std::vector<DatasetRecord> parse_mapped(std::string_view text, const ColumnMapping& mapping,
                                        const SeedTable* seeds);

}  // namespace sicck::dataset
