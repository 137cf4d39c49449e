#include "flagcodes/error.hpp"

namespace flagcodes {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::MixedFields: return "MixedFields";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::BadDimensions: return "BadDimensions";
    case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
    case Errc::NotMonic: return "NotMonic";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NotADivisor: return "NotADivisor";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::NotNested: return "NotNested";
    case Errc::BadType: return "BadType";
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::AdditivityViolated: return "AdditivityViolated";
    case Errc::GcdConditionFailed: return "GcdConditionFailed";
    case Errc::KTooSmall: return "KTooSmall";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::NotExtending: return "NotExtending";
    case Errc::EmptyCode: return "EmptyCode";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace flagcodes
