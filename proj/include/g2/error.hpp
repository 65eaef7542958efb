#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace g2 {

enum class Errc {
  CharTwo,
  NotPrime,
  WrongCharacteristic,
  SmallCharacteristic,
  FieldMismatch,
  DivisionByZero,
  ParseError,
  SingularMatrix,
  DegenerateCurve,
  NotACurve,
  ZeroScale,
  NotAnInvariant,
  DegreeMismatch,
  MissingCache,
  Unsupported,
  DegenerateDenominator,
  DegenerateConic,
  FactorizationLimit,
  PointNotOnConic,
  DegenerateOutput,
  WrongGroup,
  BadParameter,
  VerificationFailed,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace g2
