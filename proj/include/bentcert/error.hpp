#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bentcert {

enum class ErrorCode {
  NonPrime,
  ReducibleModulus,
  UnsupportedSize,
  ZeroInverse,
  FieldMismatch,
  IndexOutOfRange,
  DimensionMismatch,
  NotABasis,
  PrimeMismatch,
  SpecDimensionMismatch,
  UnknownCatalogEntry,
  PropertyMismatch,
  TrivialCharacter,
  EvenCharacteristic,
  EmptySet,
  HypothesisFailed,
  NoOpPerturbation,
  NotPlanarBase,
  NotPlanarEntry,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is reported as an Error carrying
/// a machine-readable code; the CLI maps codes to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bentcert
