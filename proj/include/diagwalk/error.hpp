#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace diagwalk {

enum class Errc {
  NotPrime,
  ReducibleModulus,
  FieldTooLarge,
  MixedFields,
  KDoesNotDivide,
  BadDecomposition,
  DependentBasis,
  VertexOutOfRange,
  GraphTooLarge,
  ArityMismatch,
  ProductTooLarge,
  LengthTableTooShort,
  KNotInteger,
  BadParameters,
  EnumerationTooLarge,
  InvalidBasis,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

// Every failure in the library is reported through this type; code() lets
// callers (the CLI in particular) map failures to exit statuses.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace diagwalk
