#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubext {

enum class Errc {
  NotPrime,
  SizeExceeded,
  FieldMismatch,
  DivisionByZero,
  DomainMismatch,
  ZeroPolynomial,
  ZeroDenominator,
  NegativeValuation,
  ZeroInput,
  PoleHit,
  SingularMatrix,
  ReducibleInput,
  WrongCharacteristic,
  DegenerateParameter,
  WrongFieldClass,
  ConstantExtension,
  NonIntegralGenus,
  Inseparable,
  InvalidArgument,
  SyntaxError,
  DegreeError,
  UnboundSymbol,
};

std::string_view errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace cubext
