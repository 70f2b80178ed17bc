#include "cubext/error.hpp"

namespace cubext {

std::string_view errc_name(Errc c) noexcept {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::SizeExceeded: return "SizeExceeded";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::DomainMismatch: return "DomainMismatch";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::NegativeValuation: return "NegativeValuation";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::PoleHit: return "PoleHit";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::ReducibleInput: return "ReducibleInput";
    case Errc::WrongCharacteristic: return "WrongCharacteristic";
    case Errc::DegenerateParameter: return "DegenerateParameter";
    case Errc::WrongFieldClass: return "WrongFieldClass";
    case Errc::ConstantExtension: return "ConstantExtension";
    case Errc::NonIntegralGenus: return "NonIntegralGenus";
    case Errc::Inseparable: return "Inseparable";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::DegreeError: return "DegreeError";
    case Errc::UnboundSymbol: return "UnboundSymbol";
  }
  return "Unknown";
}

}  // namespace cubext
