#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "cubext/places.hpp"
#include "cubext/polyring.hpp"

namespace cubext {

/// X^3 + eX^2 + fX + g over a field element type E (FieldElem or RatFunc).
template <class E>
struct Cubic {
  E e, f, g;
};

template <class E>
struct Pure {
  E a;  // X^3 - a, p != 3
};
template <class E>
struct DepressedTrace {
  E a;  // X^3 - 3X - a, p != 3
};
template <class E>
struct Char3 {
  E a;  // X^3 + aX + a^2, p = 3
};
template <class E>
struct InseparablePure {
  E a;  // X^3 - a, p = 3
};
template <class E>
struct Reducible {
  E root;  // T = (X - root)(X^2 + bX + c)
  E b, c;
};

template <class E>
using CanonicalCubic = std::variant<Pure<E>, DepressedTrace<E>, Char3<E>, InseparablePure<E>, Reducible<E>>;

/// y -> (m11*y + m10) / (m01*y + m00). The maps returned by reduce_cubic send a
/// root of the canonical form to a root of the input cubic.
template <class E>
struct FracLinear {
  E m00, m01, m10, m11;
};

template <class E>
FracLinear<E> frac_identity(const typename E::Ring& ring) {
  return {ring.one(), ring.zero(), ring.zero(), ring.one()};
}

template <class E>
E frac_apply(const FracLinear<E>& M, const E& y);
template <class E>
FracLinear<E> frac_invert(const FracLinear<E>& M);
/// (A o B)(y) = A(B(y)).
template <class E>
FracLinear<E> frac_compose(const FracLinear<E>& A, const FracLinear<E>& B);
template <class E>
E frac_det(const FracLinear<E>& M);

template <class E>
std::pair<CanonicalCubic<E>, FracLinear<E>> reduce_cubic(const Cubic<E>& T);

/// The monic cubic of a canonical form (for Reducible: the product of its factors).
template <class E>
Poly<E> canonical_poly(const CanonicalCubic<E>& C, const typename E::Ring& ring);
template <class E>
Poly<E> cubic_poly(const Cubic<E>& T);

/// Numerator of T(M(y)) * (m01*y + m00)^3, a polynomial in y.
template <class E>
Poly<E> transform_numerator(const Cubic<E>& T, const FracLinear<E>& M);

std::string form_name(const CanonicalCubic<FieldElem>& C);
std::string form_name(const CanonicalCubic<RatFunc>& C);

// Purely cubic closure and square/cube tests.
std::optional<FieldElem> purely_cubic_root(const FieldElem& a);
std::optional<RatFunc> purely_cubic_root(const RatFunc& a);
std::optional<RatFunc> global_square_test(const RatFunc& a);
/// A cube root in F_q(x) (characteristic != 3).
std::optional<RatFunc> global_cube_root(const RatFunc& a);

/// A root of the canonical cubic in the base, if any.
std::optional<FieldElem> has_rational_root(const CanonicalCubic<FieldElem>& C);
std::optional<RatFunc> has_rational_root(const CanonicalCubic<RatFunc>& C);

bool is_galois(const CanonicalCubic<FieldElem>& C);
bool is_galois(const CanonicalCubic<RatFunc>& C);

template <class E>
E galois_param(const E& A, const E& B);

template <class E>
std::pair<E, FracLinear<E>> shanks_to_canonical(const E& a);

/// Every irreducible factor of the denominator has even degree (q = -1 mod 3).
bool galois_denominator_check(const RatFunc& a);

/// Artin-Schreier parameter ahat with -a = ahat^2 and the map z -> -ahat*z from
/// roots of X^3 - X - ahat to roots of X^3 + aX + a^2.
template <class E>
struct ArtinSchreierForm {
  E ahat;
  FracLinear<E> map;
};
std::optional<ArtinSchreierForm<FieldElem>> artin_schreier_normalize(const FieldElem& a);
std::optional<ArtinSchreierForm<RatFunc>> artin_schreier_normalize(const RatFunc& a);

/// a1 = c^3 * a2^j.
template <class E>
struct PureIsom {
  bool isomorphic = false;
  int j = 0;
  std::optional<E> c;
};
PureIsom<FieldElem> isom_pure(const FieldElem& a1, const FieldElem& a2);
PureIsom<RatFunc> isom_pure(const RatFunc& a1, const RatFunc& a2);

enum class Verdict { Isomorphic, NotIsomorphic, Unknown };

template <class E>
struct DepressedIsom {
  Verdict verdict = Verdict::Unknown;
  std::optional<E> alpha, beta;
  /// When both forms are purely cubic the question is answered by isom_pure.
  std::optional<PureIsom<E>> via_pure;
  std::optional<Place> separating;
  std::string reason;
};

template <class E>
struct Char3Isom {
  Verdict verdict = Verdict::Unknown;
  int j = 0;
  std::optional<E> w;
  std::optional<Place> separating;
  std::string reason;
};

DepressedIsom<FieldElem> isom_depressed(const FieldElem& a1, const FieldElem& a2, unsigned search_bound);
DepressedIsom<RatFunc> isom_depressed(const RatFunc& a1, const RatFunc& a2, unsigned search_bound);
Char3Isom<FieldElem> isom_char3(const FieldElem& a1, const FieldElem& a2, unsigned search_bound);
Char3Isom<RatFunc> isom_char3(const RatFunc& a1, const RatFunc& a2, unsigned search_bound);

/// The right-hand side of the depressed isomorphism criterion.
template <class E>
E depressed_isom_value(const E& a2, const E& alpha, const E& beta);
/// (j*a1^2 + w^3 + a1*w)^2 / a1^3.
template <class E>
E char3_isom_value(const E& a1, int j, const E& w);

std::uint64_t characteristic(const Field& F);
std::uint64_t characteristic(const RatFuncField& K);

}  // namespace cubext
