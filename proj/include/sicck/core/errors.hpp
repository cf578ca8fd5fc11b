#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace sicck {

// Root of every error the library throws. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SICCK_DECLARE_ERROR(Name)          \
    class Name : public Error {            \
    public:                                \
        using Error::Error;                \
    }

SICCK_DECLARE_ERROR(ConfigError);
SICCK_DECLARE_ERROR(EmptyInput);
SICCK_DECLARE_ERROR(ParseOutOfCoverage);
SICCK_DECLARE_ERROR(SlotMissing);
SICCK_DECLARE_ERROR(InadmissibleModifier);
SICCK_DECLARE_ERROR(InterpretationError);
SICCK_DECLARE_ERROR(OracleBudgetError);
SICCK_DECLARE_ERROR(UniverseMismatch);
SICCK_DECLARE_ERROR(LabelParseError);
SICCK_DECLARE_ERROR(AlignmentError);
SICCK_DECLARE_ERROR(FoldConfigError);
SICCK_DECLARE_ERROR(MissingReversePrediction);

#undef SICCK_DECLARE_ERROR

struct RowError {
    std::size_t line = 0;  // 1-based
    std::string message;
};

// Raised by ingestion after every row has been checked, carrying all row-level failures.
class SchemaError : public Error {
public:
    explicit SchemaError(std::vector<RowError> rows);

    const std::vector<RowError>& rows() const noexcept { return rows_; }

private:
    std::vector<RowError> rows_;
};

}  // namespace sicck
