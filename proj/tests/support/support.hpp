#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cubext/arith.hpp"
#include "cubext/canon.hpp"
#include "cubext/ffcubic.hpp"

namespace cubext::testing {

using Rng = std::mt19937_64;

FieldElem random_elem(const Field& F, Rng& rng);
FieldElem random_nonzero(const Field& F, Rng& rng);
/// Degree exactly `deg` (deg >= 0), optionally monic.
FPoly random_poly(const Field& F, int deg, Rng& rng, bool monic = false);
/// num of degree <= dn, monic den of degree <= dd; never zero.
RatFunc random_ratfunc(const Field& F, int dn, int dd, Rng& rng);

FPoly xpoly(const Field& F, std::vector<long long> coeffs_low_first);
RatFunc xfunc(const Field& F, std::vector<long long> num_low_first, std::vector<long long> den_low_first = {1});
Place xplace(const Field& F, std::vector<long long> carrier_low_first);

// ---- independent oracles --------------------------------------------------

/// Roots of a polynomial by evaluating at every element of its field, with multiplicity.
std::vector<std::pair<FieldElem, int>> brute_roots(const FPoly& f);

/// Cyclic cubic Kummer genus of y^3 = a with a a squarefree polynomial over F_q, q = 1 mod 3:
/// the ramified places are the zeros of a plus infinity when 3 does not divide deg a.
long long kummer_genus_squarefree(const FPoly& a);

/// Artin-Schreier genus of y^3 - y = h over F_{3^m}(x), h given by its partial
/// fractions: a polynomial part and, for each listed linear place x - c, a
/// polynomial in 1/(x - c) without constant term. Each part is first reduced
/// modulo {w^3 - w}; the reduced pole orders m_P give g = sum (m_P + 1) - 2.
/// Returns nullopt when every part reduces to a constant.
struct AsPart {
  std::optional<FieldElem> center;  // nullopt for the polynomial part (pole at infinity)
  FPoly poly;                       // in the local variable
};
std::optional<long long> artin_schreier_genus(const std::vector<AsPart>& parts);
/// The element of F_q(x) described by the parts.
RatFunc as_parts_value(const Field& F, const std::vector<AsPart>& parts);

/// Elements c of the field with a = c^3 * b^j for some j in {1, 2}, by enumeration.
bool brute_pure_isomorphic(const FieldElem& a, const FieldElem& b);

// ---- a quadratic tower E[z]/(z^2 + s z + t) ---------------------------------

template <class E>
struct Quad {
  E s, t;  // z^2 = -s z - t
};

template <class E>
struct QElem {
  E c0, c1;  // c0 + c1 z
};

template <class E>
QElem<E> qadd(const QElem<E>& a, const QElem<E>& b) { return {a.c0 + b.c0, a.c1 + b.c1}; }
template <class E>
QElem<E> qsub(const QElem<E>& a, const QElem<E>& b) { return {a.c0 - b.c0, a.c1 - b.c1}; }
template <class E>
QElem<E> qmul(const Quad<E>& Q, const QElem<E>& a, const QElem<E>& b) {
  const E zz = a.c1 * b.c1;
  return {a.c0 * b.c0 - zz * Q.t, a.c0 * b.c1 + a.c1 * b.c0 - zz * Q.s};
}

/// Polynomials in y modulo the monic cubic y^3 = k2 y^2 + k1 y + k0, coefficients in the tower.
template <class E>
struct CubicQuotient {
  Quad<E> Q;
  QElem<E> k0, k1, k2;
  using V = std::vector<QElem<E>>;  // length 3, constant term first

  V mul(const V& a, const V& b) const {
    const QElem<E> zero{Q.s - Q.s, Q.s - Q.s};
    std::vector<QElem<E>> r(5, zero);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r[i + j] = qadd(r[i + j], qmul(Q, a[i], b[j]));
    for (int d = 4; d >= 3; --d) {
      const QElem<E> top = r[d];
      r[d] = zero;
      r[d - 1] = qadd(r[d - 1], qmul(Q, top, k2));
      r[d - 2] = qadd(r[d - 2], qmul(Q, top, k1));
      r[d - 3] = qadd(r[d - 3], qmul(Q, top, k0));
    }
    return {r[0], r[1], r[2]};
  }
};

template <class E>
bool qzero(const QElem<E>& a) { return a.c0.is_zero() && a.c1.is_zero(); }

}  // namespace cubext::testing
