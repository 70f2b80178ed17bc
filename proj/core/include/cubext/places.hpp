#pragma once

#include <climits>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubext/polyring.hpp"

namespace cubext {

/// Valuation of the zero function.
inline constexpr long long kInfValuation = LLONG_MAX;

/// Residue field of a place with the embedding of F_q and the image of x.
struct ResidueData {
  Field field;
  Embedding embed;
  FieldElem root;  // a root of the carrier; zero at infinity
};

/// A place of F_q(x): a monic irreducible carrier or the place at infinity.
class Place {
 public:
  Place() = default;
  static Place finite(const FPoly& pi);
  static Place infinity(const Field& F);

  bool is_infinite() const;
  /// The carrier polynomial (fails at infinity).
  const FPoly& carrier() const;
  unsigned degree() const;
  const Field& base() const;
  /// q^deg as a 64-bit integer.
  std::uint64_t residue_order() const;
  /// Built on first use and shared between copies.
  const ResidueData& residue() const;

  /// Monic carrier in x, or "infinity".
  std::string name() const;

  friend bool operator==(const Place& a, const Place& b);

 private:
  struct Impl;
  std::shared_ptr<Impl> d_;
};

/// Infinity first, then by degree, then by carrier encoding.
bool place_less(const Place& a, const Place& b);

long long valuation(const RatFunc& a, const Place& P);
FieldElem reduce_at(const RatFunc& a, const Place& P);
RatFunc uniformizer(const Place& P);

using Divisor = std::vector<std::pair<Place, long long>>;
/// Support of a with multiplicities, sorted by place_less.
Divisor divisor_of(const RatFunc& a);

std::vector<Place> places_up_to(const Field& F, unsigned dmax);

// Local computations in F_q[x]/(pi). A residue class is represented by a
// polynomial of degree < deg pi (a constant at infinity).

/// Residue class of a with v_P(a) >= 0.
FPoly residue_class(const RatFunc& a, const Place& P);
/// Residue class of a * t^(-v_P(a)) for the uniformizer t, i.e. the leading Laurent coefficient.
FPoly leading_class(const RatFunc& a, const Place& P);
/// Lift of a residue class times t^k as a rational function.
RatFunc lift_class(const FPoly& r, long long k, const Place& P);
/// Multiplication in the residue ring.
FPoly class_mul(const FPoly& a, const FPoly& b, const Place& P);
/// The unique p-th root of a residue class (Frobenius inverse).
FPoly class_pth_root(const FPoly& r, const Place& P);
/// Image of a residue class in the residue field.
FieldElem class_to_field(const FPoly& r, const Place& P);

/// One Artin-Schreier stripping pass in characteristic p: while v_P(u) < 0 and
/// p divides it, cancel the leading term by w^p - w. Returns (u', w) with
/// u' = u - (w^p - w).
std::pair<RatFunc, RatFunc> artin_schreier_strip(const RatFunc& u, const Place& P);

/// A solution d of d^2 + d = u in F_q(x), characteristic 2.
std::optional<RatFunc> solve_artin_schreier_global(const RatFunc& u);

}  // namespace cubext
