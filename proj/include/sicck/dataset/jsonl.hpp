#pragma once

#include "sicck/core/record.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace sicck::dataset {

/// One canonical line, without the trailing newline. Keys in fixed order, absent values as null.
std::string serialize_record(const DatasetRecord& record);

/// Canonical file: one record per line, each terminated by '\n'.
std::string serialize_records(const std::vector<DatasetRecord>& records);

/// Parses and validates a canonical file. Blank lines are skipped. Every row is checked before
/// failing: structural problems are reported together as SchemaError; label text that is not a
/// known relation raises LabelParseError naming the line.
std::vector<DatasetRecord> parse_records(std::string_view text);

}  // namespace sicck::dataset
