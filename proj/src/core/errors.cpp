#include "sicck/core/errors.hpp"

#include <fmt/format.h>

namespace sicck {

namespace {

std::string summarize(const std::vector<RowError>& rows) {
    if (rows.empty()) {
        return "schema error";
    }
    std::string out = fmt::format("{} invalid row(s); first at line {}: {}", rows.size(), rows.front().line,
                                  rows.front().message);
    return out;
}

}  // namespace

SchemaError::SchemaError(std::vector<RowError> rows) : Error(summarize(rows)), rows_(std::move(rows)) {}

}  // namespace sicck
