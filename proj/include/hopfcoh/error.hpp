#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfcoh {

// Error names surfaced to users (CLI prints name() verbatim).
enum class ErrorCode {
    ZeroInverse,
    NotInvertible,
    BadPrime,
    BadFactor,
    BadField,
    FieldMismatch,
    DimensionMismatch,
    NotContained,
    NotAGroup,
    BadParameter,
    NotPrimitiveRoot,
    NotAssociative,
    IncompatibleAugmentation,
    NotAFiltration,
    Unsupported,
    HintNotNilpotent,
    HintNotRadical,
    BudgetExceeded,
    MissingAugmentation,
    BaseMismatch,
    NotSameTarget,
    LiftFailed,
    IncompatibleCoefficients,
    IncompatibleFiltration,
    ActionNotDescending,
    CapMismatch,
    NoProducts,
    WrongCharacteristic,
    ValidationFailed,
    ParseError,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }
    std::string_view name() const noexcept { return error_name(code_); }

private:
    ErrorCode code_;
};

// Parse failures carry a 1-based position.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& what)
        : Error(ErrorCode::ParseError,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line), column_(column)
    {
    }

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace hopfcoh
