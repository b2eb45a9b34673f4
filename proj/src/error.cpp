#include "hopfcoh/error.hpp"

namespace hopfcoh {

std::string_view error_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::BadPrime: return "BadPrime";
    case ErrorCode::BadFactor: return "BadFactor";
    case ErrorCode::BadField: return "BadField";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::NotPrimitiveRoot: return "NotPrimitiveRoot";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::IncompatibleAugmentation: return "IncompatibleAugmentation";
    case ErrorCode::NotAFiltration: return "NotAFiltration";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::HintNotNilpotent: return "HintNotNilpotent";
    case ErrorCode::HintNotRadical: return "HintNotRadical";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::MissingAugmentation: return "MissingAugmentation";
    case ErrorCode::BaseMismatch: return "BaseMismatch";
    case ErrorCode::NotSameTarget: return "NotSameTarget";
    case ErrorCode::LiftFailed: return "LiftFailed";
    case ErrorCode::IncompatibleCoefficients: return "IncompatibleCoefficients";
    case ErrorCode::IncompatibleFiltration: return "IncompatibleFiltration";
    case ErrorCode::ActionNotDescending: return "ActionNotDescending";
    case ErrorCode::CapMismatch: return "CapMismatch";
    case ErrorCode::NoProducts: return "NoProducts";
    case ErrorCode::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace hopfcoh
