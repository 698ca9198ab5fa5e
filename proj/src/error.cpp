#include "bentcert/error.hpp"

#include <cstdlib>
#include <string>

#include "bentcert/parallel.hpp"

namespace bentcert {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::UnsupportedSize: return "UnsupportedSize";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotABasis: return "NotABasis";
    case ErrorCode::PrimeMismatch: return "PrimeMismatch";
    case ErrorCode::SpecDimensionMismatch: return "SpecDimensionMismatch";
    case ErrorCode::UnknownCatalogEntry: return "UnknownCatalogEntry";
    case ErrorCode::PropertyMismatch: return "PropertyMismatch";
    case ErrorCode::TrivialCharacter: return "TrivialCharacter";
    case ErrorCode::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::NoOpPerturbation: return "NoOpPerturbation";
    case ErrorCode::NotPlanarBase: return "NotPlanarBase";
    case ErrorCode::NotPlanarEntry: return "NotPlanarEntry";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Workers Workers::from_env() {
  if (const char* env = std::getenv("BENTCERT_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return Workers{static_cast<unsigned>(n)};
    } catch (const std::exception&) {
    }
  }
  return Workers{1};
}

}  // namespace bentcert
