#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cubext/canon.hpp"

namespace cubext {

enum class Shape { Irreducible, LinTimesQuad, ThreeDistinct, LinTimesSquare, Triple };

std::string shape_name(Shape s);

/// Decomposition type of a monic cubic over a finite field.
struct DecompType {
  Shape shape = Shape::Irreducible;
  /// Distinct roots in the field, sorted.
  std::vector<FieldElem> roots;
  /// Monic factors whose product is the decomposed cubic; empty when not computed.
  std::vector<FPoly> factors;
};

inline bool operator==(const DecompType& a, const DecompType& b) { return a.shape == b.shape; }

/// Default field-size bound of brute_factor.
inline constexpr std::uint64_t kBruteBound = std::uint64_t{1} << 16;

/// X^3 - a.
DecompType decompose_pure(const Field& F, const FieldElem& a);
/// X^3 - 3X - a.
DecompType decompose_depressed(const Field& F, const FieldElem& a);
/// X^3 + aX + a^2, characteristic 3.
DecompType decompose_char3(const Field& F, const FieldElem& a);
/// X^3 + eX^2 + fX + g, with witnesses transported back from the canonical form.
DecompType decompose_any(const Field& F, const FieldElem& e, const FieldElem& f, const FieldElem& g);

/// Exhaustive root search; the reference answer for the routines above.
DecompType brute_factor(const FPoly& cubic, std::uint64_t bound = kBruteBound);
DecompType brute_factor(const Cubic<FieldElem>& cubic, std::uint64_t bound = kBruteBound);

}  // namespace cubext
