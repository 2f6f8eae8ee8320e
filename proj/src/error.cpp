#include "diagwalk/error.hpp"

namespace diagwalk {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::MixedFields: return "MixedFields";
    case Errc::KDoesNotDivide: return "KDoesNotDivide";
    case Errc::BadDecomposition: return "BadDecomposition";
    case Errc::DependentBasis: return "DependentBasis";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::GraphTooLarge: return "GraphTooLarge";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::ProductTooLarge: return "ProductTooLarge";
    case Errc::LengthTableTooShort: return "LengthTableTooShort";
    case Errc::KNotInteger: return "KNotInteger";
    case Errc::BadParameters: return "BadParameters";
    case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
    case Errc::InvalidBasis: return "InvalidBasis";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace diagwalk
