#include "cubext/canon.hpp"

#include <algorithm>

namespace cubext {

std::uint64_t characteristic(const Field& F) { return F.characteristic(); }
std::uint64_t characteristic(const RatFuncField& K) { return K.fq.characteristic(); }

namespace {

template <class E>
E cst(const E& like, long long n) {
  return like.ring().from_int(n);
}

template <class E>
bool is_zero(const E& v) {
  return v.is_zero();
}

template <class V>
const auto& param_of(const V& v) {
  if constexpr (requires { v.root; }) return v.root;
  else return v.a;
}

template <class E>
E least_of(const E& a, const E& b) {
  if constexpr (std::is_same_v<E, RatFunc>) return ratfunc_less(b, a) ? b : a;
  else return b < a ? b : a;
}

void require_char_not3(std::uint64_t p) {
  if (p == 3) fail(Errc::WrongCharacteristic, "operation undefined in characteristic 3");
}

void require_char3(std::uint64_t p) {
  if (p != 3) fail(Errc::WrongCharacteristic, "operation needs characteristic 3");
}

}  // namespace

template <class E>
E frac_det(const FracLinear<E>& M) {
  return M.m11 * M.m00 - M.m10 * M.m01;
}

template <class E>
E frac_apply(const FracLinear<E>& M, const E& y) {
  E den = M.m01 * y + M.m00;
  if (den.is_zero()) fail(Errc::PoleHit, "fractional linear map evaluated at its pole");
  return (M.m11 * y + M.m10) / den;
}

template <class E>
FracLinear<E> frac_invert(const FracLinear<E>& M) {
  if (frac_det(M).is_zero()) fail(Errc::SingularMatrix, "singular fractional linear map");
  return {M.m11, -M.m01, -M.m10, M.m00};
}

template <class E>
FracLinear<E> frac_compose(const FracLinear<E>& A, const FracLinear<E>& B) {
  // Matrices [[m11, m10], [m01, m00]] multiply as A*B.
  FracLinear<E> r;
  r.m11 = A.m11 * B.m11 + A.m10 * B.m01;
  r.m10 = A.m11 * B.m10 + A.m10 * B.m00;
  r.m01 = A.m01 * B.m11 + A.m00 * B.m01;
  r.m00 = A.m01 * B.m10 + A.m00 * B.m00;
  return r;
}

template <class E>
std::pair<CanonicalCubic<E>, FracLinear<E>> reduce_cubic(const Cubic<E>& T) {
  const auto ring = T.e.ring();
  const std::uint64_t p = characteristic(ring);
  const E& e = T.e;
  const E& f = T.f;
  const E& g = T.g;
  auto c = [&](long long n) { return ring.from_int(n); };
  const FracLinear<E> id = frac_identity<E>(ring);

  auto reducible = [&](const E& r) -> std::pair<CanonicalCubic<E>, FracLinear<E>> {
    E b = e + r;
    E cc = f + r * b;
    return {Reducible<E>{r, b, cc}, id};
  };

  if (g.is_zero()) return reducible(ring.zero());

  if (p == 3) {
    if (f.is_zero()) {
      if (e.is_zero()) return {InseparablePure<E>{-g}, id};
      // X^3 + eX^2 + g: the substitution x = g/(e^2 z) gives z^3 + (g/e^3) z + (g/e^3)^2.
      E a = g / (e * e * e);
      return {Char3<E>{a}, FracLinear<E>{ring.zero(), e * e, g, ring.zero()}};
    }
    if (e.is_zero()) {
      if (g == f * f) return {Char3<E>{f}, id};
      E a = (g * g) / (f * f * f);
      return {Char3<E>{a}, FracLinear<E>{g, ring.zero(), ring.zero(), f * f}};
    }
    E N = -(f * f * e * e) + g * e * e * e + f * f * f;
    if (N.is_zero()) return reducible(f / e);
    E e2 = e * e, e4 = e2 * e2;
    E a = N / (e4 * e2);
    return {Char3<E>{a}, FracLinear<E>{ring.zero(), e4 * e, N, f * e4}};
  }

  const E degenerate = -(c(27) * g * g) - c(2) * f * f * f + c(9) * e * f * g;
  if (degenerate.is_zero()) return reducible(-(c(3) * g) / f);

  if (e.is_zero() && f.is_zero()) return {Pure<E>{-g}, id};
  if (e.is_zero() && f == c(-3)) return {DepressedTrace<E>{-g}, id};

  const E k = c(3) * e * g - f * f;
  if (k.is_zero()) {
    E a = (c(27) * g * g * g) / (-(c(27) * g * g) + f * f * f);
    E m = c(3) * g;
    return {Pure<E>{a}, FracLinear<E>{m, -f, ring.zero(), m}};
  }
  E num = c(27) * g * g - c(9) * e * f * g + c(2) * f * f * f;
  E a = c(-2) - (num * num) / (k * k * k);
  FracLinear<E> M;
  M.m11 = -(c(3) * g * k);
  M.m10 = c(3) * g * k;
  M.m01 = f * k;
  M.m00 = c(6) * e * f * g - f * f * f - c(27) * g * g;
  return {DepressedTrace<E>{a}, M};
}

template <class E>
Poly<E> cubic_poly(const Cubic<E>& T) {
  const auto ring = T.e.ring();
  return Poly<E>(ring, {T.g, T.f, T.e, ring.one()});
}

template <class E>
Poly<E> canonical_poly(const CanonicalCubic<E>& C, const typename E::Ring& ring) {
  const E z = ring.zero(), one = ring.one();
  return std::visit(
      [&](const auto& v) -> Poly<E> {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Pure<E>> || std::is_same_v<V, InseparablePure<E>>)
          return Poly<E>(ring, {-v.a, z, z, one});
        else if constexpr (std::is_same_v<V, DepressedTrace<E>>)
          return Poly<E>(ring, {-v.a, ring.from_int(-3), z, one});
        else if constexpr (std::is_same_v<V, Char3<E>>)
          return Poly<E>(ring, {v.a * v.a, v.a, z, one});
        else
          return Poly<E>(ring, {-v.root, one}) * Poly<E>(ring, {v.c, v.b, one});
      },
      C);
}

template <class E>
Poly<E> transform_numerator(const Cubic<E>& T, const FracLinear<E>& M) {
  const auto ring = T.e.ring();
  const Poly<E> top(ring, {M.m10, M.m11}), bot(ring, {M.m00, M.m01});
  const E coeff[4] = {T.g, T.f, T.e, ring.one()};
  Poly<E> acc(ring);
  for (int k = 0; k <= 3; ++k) acc += coeff[k] * (top.pow(k) * bot.pow(3 - k));
  return acc;
}

template <class E>
E galois_param(const E& A, const E& B) {
  E den = A * A + A * B + B * B;
  if (den.is_zero()) fail(Errc::ZeroDenominator, "A^2 + AB + B^2 vanishes");
  return (cst(A, 2) * A * A + cst(A, 2) * A * B - B * B) / den;
}

template <class E>
std::pair<E, FracLinear<E>> shanks_to_canonical(const E& a) {
  require_char_not3(characteristic(a.ring()));
  E d = a * a + cst(a, 3) * a + cst(a, 9);
  if (d.is_zero()) fail(Errc::DegenerateParameter, "a^2 + 3a + 9 vanishes");
  // w = (3 + a y) / (3 - (a+3) y)
  FracLinear<E> M{cst(a, 3), -(a + cst(a, 3)), cst(a, 3), a};
  if (frac_det(M).is_zero()) fail(Errc::DegenerateParameter, "the Shanks substitution is singular");
  E param = (cst(a, 2) * a * a + cst(a, 6) * a - cst(a, 9)) / d;
  return {param, M};
}

template <class E>
E depressed_isom_value(const E& a2, const E& alpha, const E& beta) {
  const E a2sq = a2 * a2;
  return -(cst(a2, 3) * a2 * alpha * alpha * beta) + a2 * beta * beta * beta + cst(a2, 6) * alpha +
         alpha * alpha * alpha * a2sq - cst(a2, 8) * alpha * alpha * alpha;
}

template <class E>
E char3_isom_value(const E& a1, int j, const E& w) {
  E t = cst(a1, j) * a1 * a1 + w * w * w + a1 * w;
  return (t * t) / (a1 * a1 * a1);
}

std::string form_name(const CanonicalCubic<FieldElem>& C) {
  static const char* names[] = {"pure", "depressed", "char3", "inseparable", "reducible"};
  return names[C.index()];
}
std::string form_name(const CanonicalCubic<RatFunc>& C) {
  static const char* names[] = {"pure", "depressed", "char3", "inseparable", "reducible"};
  return names[C.index()];
}

std::optional<FieldElem> purely_cubic_root(const FieldElem& a) {
  require_char_not3(a.field().characteristic());
  auto r = quadratic_roots(a, a.field().one());
  if (r.empty()) return std::nullopt;
  return r.front();
}

std::optional<RatFunc> purely_cubic_root(const RatFunc& a) {
  const Field& F = a.base();
  require_char_not3(F.characteristic());
  const RatFuncField K{F};
  if (F.characteristic() == 2) {
    if (a.is_zero()) return K.one();
    auto d = solve_artin_schreier_global((a * a).inv());
    if (!d) return std::nullopt;
    return a * *d;
  }
  auto s = global_square_test(a * a - K.from_int(4));
  if (!s) return std::nullopt;
  RatFunc half = K.from_int(2).inv();
  return least_of((-a + *s) * half, (-a - *s) * half);
}

namespace {

// a = u * prod pi^e; returns nothing unless n | e for every factor.
std::optional<std::pair<FieldElem, RatFunc>> split_power(const RatFunc& a, int n) {
  const Field& F = a.base();
  RatFunc root = RatFuncField{F}.one();
  for (auto& [pi, e] : factor_fq(a.num())) {
    if (e % n) return std::nullopt;
    root *= RatFunc(pi.pow(static_cast<std::uint64_t>(e / n)));
  }
  for (auto& [pi, e] : factor_fq(a.den())) {
    if (e % n) return std::nullopt;
    root /= RatFunc(pi.pow(static_cast<std::uint64_t>(e / n)));
  }
  return std::make_pair(a.num().lead(), root);
}

}  // namespace

std::optional<RatFunc> global_square_test(const RatFunc& a) {
  const Field& F = a.base();
  if (F.characteristic() == 2) fail(Errc::WrongCharacteristic, "square test needs odd characteristic");
  if (a.is_zero()) return a;
  auto sp = split_power(a, 2);
  if (!sp) return std::nullopt;
  auto sq = square_classify(sp->first);
  if (!sq.is_square) return std::nullopt;
  return RatFunc::constant(sq.roots.front()) * sp->second;
}

std::optional<RatFunc> global_cube_root(const RatFunc& a) {
  const Field& F = a.base();
  require_char_not3(F.characteristic());
  if (a.is_zero()) return a;
  auto sp = split_power(a, 3);
  if (!sp) return std::nullopt;
  auto cb = cube_classify(sp->first);
  if (!cb.is_cube) return std::nullopt;
  return RatFunc::constant(cb.roots.front()) * sp->second;
}

std::optional<FieldElem> has_rational_root(const CanonicalCubic<FieldElem>& C) {
  if (auto* r = std::get_if<Reducible<FieldElem>>(&C)) return r->root;
  const Field F = std::visit([](const auto& v) { return param_of(v).field(); }, C);
  auto roots = roots_in_field(canonical_poly<FieldElem>(C, F));
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

std::optional<RatFunc> has_rational_root(const CanonicalCubic<RatFunc>& C) {
  if (auto* r = std::get_if<Reducible<RatFunc>>(&C)) return r->root;
  if (auto* pc = std::get_if<Pure<RatFunc>>(&C)) return global_cube_root(pc->a);
  const RatFuncField K = std::visit([](const auto& v) { return param_of(v).ring(); }, C);
  auto roots = rational_roots(canonical_poly<RatFunc>(C, K));
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

bool is_galois(const CanonicalCubic<FieldElem>& C) {
  if (has_rational_root(C)) fail(Errc::ReducibleInput, "cubic is reducible");
  return std::visit(
      [](const auto& v) -> bool {
        using V = std::decay_t<decltype(v)>;
        const Field F = param_of(v).field();
        if constexpr (std::is_same_v<V, Pure<FieldElem>>) {
          return F.order() % 3 == 1;
        } else if constexpr (std::is_same_v<V, DepressedTrace<FieldElem>>) {
          if (F.characteristic() == 2) return trace_to_prime((v.a * v.a).inv() + F.one()) == 0;
          return square_classify(F.from_int(-27) * (v.a * v.a - F.from_int(4))).is_square;
        } else if constexpr (std::is_same_v<V, Char3<FieldElem>>) {
          return square_classify(-v.a).is_square;
        } else {
          return false;
        }
      },
      C);
}

bool is_galois(const CanonicalCubic<RatFunc>& C) {
  if (has_rational_root(C)) fail(Errc::ReducibleInput, "cubic is reducible");
  return std::visit(
      [](const auto& v) -> bool {
        using V = std::decay_t<decltype(v)>;
        const Field F = param_of(v).base();
        const RatFuncField K{F};
        if constexpr (std::is_same_v<V, Pure<RatFunc>>) {
          return F.order() % 3 == 1;
        } else if constexpr (std::is_same_v<V, DepressedTrace<RatFunc>>) {
          if (F.characteristic() == 2) return solve_artin_schreier_global((v.a * v.a).inv() + K.one()).has_value();
          return global_square_test(K.from_int(-27) * (v.a * v.a - K.from_int(4))).has_value();
        } else if constexpr (std::is_same_v<V, Char3<RatFunc>>) {
          return global_square_test(-v.a).has_value();
        } else {
          return false;
        }
      },
      C);
}

bool galois_denominator_check(const RatFunc& a) {
  if (a.base().order() % 3 != 2) fail(Errc::WrongFieldClass, "needs q = -1 mod 3");
  for (auto& [pi, e] : factor_fq(a.den()))
    if (pi.degree() % 2) return false;
  return true;
}

std::optional<ArtinSchreierForm<FieldElem>> artin_schreier_normalize(const FieldElem& a) {
  const Field& F = a.field();
  require_char3(F.characteristic());
  auto sq = square_classify(-a);
  if (!sq.is_square || a.is_zero()) return std::nullopt;
  FieldElem ahat = sq.roots.front();
  return ArtinSchreierForm<FieldElem>{ahat, {F.one(), F.zero(), F.zero(), -ahat}};
}

std::optional<ArtinSchreierForm<RatFunc>> artin_schreier_normalize(const RatFunc& a) {
  const RatFuncField K{a.base()};
  require_char3(a.base().characteristic());
  if (a.is_zero()) return std::nullopt;
  auto s = global_square_test(-a);
  if (!s) return std::nullopt;
  RatFunc ahat = least_of(*s, -*s);
  return ArtinSchreierForm<RatFunc>{ahat, {K.one(), K.zero(), K.zero(), -ahat}};
}

PureIsom<FieldElem> isom_pure(const FieldElem& a1, const FieldElem& a2) {
  require_char_not3(a1.field().characteristic());
  if (a1.is_zero() || a2.is_zero() || cube_classify(a1).is_cube || cube_classify(a2).is_cube)
    fail(Errc::ReducibleInput, "pure cubic with a cube parameter is reducible");
  for (int j = 1; j <= 2; ++j) {
    auto cb = cube_classify(a1 / a2.pow(static_cast<std::uint64_t>(j)));
    if (cb.is_cube) return {true, j, cb.roots.front()};
  }
  return {};
}

PureIsom<RatFunc> isom_pure(const RatFunc& a1, const RatFunc& a2) {
  require_char_not3(a1.base().characteristic());
  if (a1.is_zero() || a2.is_zero() || global_cube_root(a1) || global_cube_root(a2))
    fail(Errc::ReducibleInput, "pure cubic with a cube parameter is reducible");
  for (int j = 1; j <= 2; ++j) {
    auto c = global_cube_root(a1 / a2.pow(j));
    if (c) return {true, j, *c};
  }
  return {};
}

namespace {

bool depressed_irreducible(const FieldElem& a) {
  return !has_rational_root(CanonicalCubic<FieldElem>{DepressedTrace<FieldElem>{a}}).has_value();
}

}  // namespace

DepressedIsom<FieldElem> isom_depressed(const FieldElem& a1, const FieldElem& a2, unsigned) {
  const Field& F = a1.field();
  require_char_not3(F.characteristic());
  if (!depressed_irreducible(a1) || !depressed_irreducible(a2)) fail(Errc::ReducibleInput, "reducible input");
  DepressedIsom<FieldElem> out;
  if (a1 == a2 || a1 == -a2) {
    out.verdict = Verdict::Isomorphic;
    out.alpha = F.zero();
    out.beta = a1 == a2 ? F.one() : -F.one();
    return out;
  }
  auto c1 = purely_cubic_root(a1), c2 = purely_cubic_root(a2);
  if (c1.has_value() != c2.has_value()) {
    out.verdict = Verdict::NotIsomorphic;
    out.reason = "exactly one of the two extensions is purely cubic";
    return out;
  }
  if (c1) {
    out.via_pure = isom_pure(*c1, *c2);
    out.verdict = out.via_pure->isomorphic ? Verdict::Isomorphic : Verdict::NotIsomorphic;
    out.reason = "both extensions are purely cubic";
    return out;
  }
  for (const auto& al : enumerate(F)) {
    for (const auto& be : enumerate(F)) {
      if (!(al * al + a2 * al * be + be * be == F.one())) continue;
      if (depressed_isom_value(a2, al, be) == a1) {
        out.verdict = Verdict::Isomorphic;
        out.alpha = al;
        out.beta = be;
        return out;
      }
    }
  }
  out.verdict = Verdict::NotIsomorphic;
  out.reason = "exhaustive search over the conic";
  return out;
}

Char3Isom<FieldElem> isom_char3(const FieldElem& a1, const FieldElem& a2, unsigned) {
  const Field& F = a1.field();
  require_char3(F.characteristic());
  for (const auto& a : {a1, a2})
    if (a.is_zero() || has_rational_root(CanonicalCubic<FieldElem>{Char3<FieldElem>{a}}))
      fail(Errc::ReducibleInput, "reducible input");
  Char3Isom<FieldElem> out;
  for (int j = 1; j <= 2; ++j) {
    for (const auto& w : enumerate(F)) {
      if (char3_isom_value(a1, j, w) == a2) {
        out.verdict = Verdict::Isomorphic;
        out.j = j;
        out.w = w;
        return out;
      }
    }
  }
  out.verdict = Verdict::NotIsomorphic;
  out.reason = "exhaustive search over (j, w)";
  return out;
}

#define CUBEXT_INSTANTIATE(E)                                                                   \
  template E frac_det<E>(const FracLinear<E>&);                                                 \
  template E frac_apply<E>(const FracLinear<E>&, const E&);                                     \
  template FracLinear<E> frac_invert<E>(const FracLinear<E>&);                                  \
  template FracLinear<E> frac_compose<E>(const FracLinear<E>&, const FracLinear<E>&);           \
  template std::pair<CanonicalCubic<E>, FracLinear<E>> reduce_cubic<E>(const Cubic<E>&);        \
  template Poly<E> cubic_poly<E>(const Cubic<E>&);                                              \
  template Poly<E> canonical_poly<E>(const CanonicalCubic<E>&, const E::Ring&);                 \
  template Poly<E> transform_numerator<E>(const Cubic<E>&, const FracLinear<E>&);               \
  template E galois_param<E>(const E&, const E&);                                               \
  template std::pair<E, FracLinear<E>> shanks_to_canonical<E>(const E&);                        \
  template E depressed_isom_value<E>(const E&, const E&, const E&);                             \
  template E char3_isom_value<E>(const E&, int, const E&);

CUBEXT_INSTANTIATE(FieldElem)
CUBEXT_INSTANTIATE(RatFunc)

#undef CUBEXT_INSTANTIATE

}  // namespace cubext
