#include "cubext/arith.hpp"

#include <algorithm>

namespace cubext {

Signature Signature::of(std::vector<std::pair<int, int>> parts) {
  std::sort(parts.begin(), parts.end(), [](const auto& x, const auto& y) {
    return x.first != y.first ? x.first > y.first : x.second < y.second;
  });
  Signature s{std::move(parts)};
  if (s.degree() != 3) fail(Errc::InvalidArgument, "signature does not satisfy sum e*f = 3");
  return s;
}

int Signature::degree() const {
  int n = 0;
  for (auto [e, f] : parts) n += e * f;
  return n;
}

std::string Signature::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(parts[i].first) + ',' + std::to_string(parts[i].second);
  }
  return out + ')';
}

namespace sig {
Signature fully_ramified() { return Signature::of({{3, 1}}); }
Signature inert() { return Signature::of({{1, 3}}); }
Signature split() { return Signature::of({{1, 1}, {1, 1}, {1, 1}}); }
Signature lin_quad() { return Signature::of({{1, 1}, {1, 2}}); }
Signature partial() { return Signature::of({{2, 1}, {1, 1}}); }
}  // namespace sig

std::string behavior_name(Behavior b) {
  switch (b) {
    case Behavior::Split: return "split";
    case Behavior::Inert: return "inert";
    case Behavior::Ramified: return "ramified";
  }
  return "?";
}

namespace {

std::uint64_t char_of(const RatFunc& a) { return a.base().characteristic(); }

// Residue of the unit a * t^(-v_P(a)).
FieldElem unit_residue(const RatFunc& a, const Place& P) { return class_to_field(leading_class(a, P), P); }

Signature pure_residue_signature(const FieldElem& c) {
  const std::uint64_t Q = c.field().order();
  if (Q % 3 == 1) return c.pow((Q - 1) / 3).is_one() ? sig::split() : sig::inert();
  return sig::lin_quad();
}

Signature signature_pure_unchecked(const RatFunc& a, const Place& P) {
  const long long v = valuation(a, P);
  if (v % 3 != 0) return sig::fully_ramified();
  return pure_residue_signature(unit_residue(a, P));
}

Signature signature_depressed_unchecked(const RatFunc& a, const Place& P) {
  const long long v = valuation(a, P);
  if (v < 0) {
    if (v % 3 != 0) return sig::fully_ramified();
    return pure_residue_signature(unit_residue(a, P));
  }
  const FieldElem abar = reduce_at(a, P);
  switch (decompose_depressed(abar.field(), abar).shape) {
    case Shape::Irreducible: return sig::inert();
    case Shape::LinTimesQuad: return sig::lin_quad();
    case Shape::ThreeDistinct: return sig::split();
    case Shape::LinTimesSquare:
      switch (resolvent_place_behavior(a, P)) {
        case Behavior::Split: return sig::split();
        case Behavior::Inert: return sig::lin_quad();
        case Behavior::Ramified: return sig::partial();
      }
      break;
    case Shape::Triple: break;
  }
  fail(Errc::InvalidArgument, "unexpected residue decomposition");
}

Signature signature_char3_unchecked(const RatFunc& a, const Place& P) {
  const RatFunc c = char3_local_form(a, P);
  const long long v = valuation(c, P);
  if (v < 0) return sig::fully_ramified();
  if (v == 0) {
    const FieldElem cbar = reduce_at(c, P);
    switch (decompose_char3(cbar.field(), cbar).shape) {
      case Shape::Irreducible: return sig::inert();
      case Shape::ThreeDistinct: return sig::split();
      case Shape::LinTimesQuad: return sig::lin_quad();
      default: fail(Errc::InvalidArgument, "unexpected residue decomposition");
    }
  }
  if (v % 2) return sig::partial();
  return square_classify(-unit_residue(c, P)).is_square ? sig::split() : sig::lin_quad();
}

void require_irreducible(const CanonicalCubic<RatFunc>& C) {
  if (has_rational_root(C)) fail(Errc::ReducibleInput, "cubic is reducible over F_q(x)");
}

std::vector<RamifiedPlace> collect(const std::vector<RamifiedPlace>& a, const std::vector<RamifiedPlace>& b) {
  std::vector<RamifiedPlace> out = a;
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return place_less(x.place, y.place); });
  return out;
}

}  // namespace

std::pair<RatFunc, RatFunc> pure_local_form(const RatFunc& a, const Place& P) {
  if (a.is_zero()) fail(Errc::ZeroInput, "local form of zero");
  const long long v = valuation(a, P);
  long long k = v / 3;
  if (v % 3 < 0) --k;
  RatFunc c = uniformizer(P).pow(k);
  return {a / (c * c * c), c};
}

Signature signature_pure(const RatFunc& a, const Place& P) {
  if (char_of(a) == 3) fail(Errc::WrongCharacteristic, "pure form needs characteristic != 3");
  require_irreducible(Pure<RatFunc>{a});
  return signature_pure_unchecked(a, P);
}

Behavior resolvent_place_behavior(const RatFunc& a, const Place& P) {
  const Field& F = a.base();
  const RatFuncField K{F};
  if (F.characteristic() == 3) fail(Errc::WrongCharacteristic, "resolvent needs characteristic != 3");
  if (F.characteristic() != 2) {
    const RatFunc disc = K.from_int(-27) * (a * a - K.from_int(4));
    if (disc.is_zero()) fail(Errc::ReducibleInput, "a = +-2 gives a reducible cubic");
    if (valuation(disc, P) % 2) return Behavior::Ramified;
    return square_classify(unit_residue(disc, P)).is_square ? Behavior::Split : Behavior::Inert;
  }
  if (a.is_zero()) fail(Errc::ReducibleInput, "a = 0 gives a reducible cubic");
  const RatFunc u = (a * a).inv() + K.one();
  const RatFunc reduced = as_local_reduce(u, P).first;
  if (valuation(reduced, P) < 0) return Behavior::Ramified;
  const FieldElem r = reduce_at(reduced, P);
  return trace_to_prime(r) == 0 ? Behavior::Split : Behavior::Inert;
}

std::pair<RatFunc, RatFunc> as_local_reduce(const RatFunc& u, const Place& P) {
  if (char_of(u) != 2) fail(Errc::WrongCharacteristic, "Artin-Schreier reduction needs characteristic 2");
  return artin_schreier_strip(u, P);
}

Signature signature_depressed(const RatFunc& a, const Place& P) {
  if (char_of(a) == 3) fail(Errc::WrongCharacteristic, "depressed form needs characteristic != 3");
  require_irreducible(DepressedTrace<RatFunc>{a});
  return signature_depressed_unchecked(a, P);
}

RatFunc char3_local_form(const RatFunc& a, const Place& P) {
  if (char_of(a) != 3) fail(Errc::WrongCharacteristic, "char-3 local form needs characteristic 3");
  if (a.is_zero()) fail(Errc::ZeroInput, "char-3 local form of zero");
  RatFunc cur = a;
  for (;;) {
    const long long v = valuation(cur, P);
    if (v >= 0 || v % 3 != 0) return cur;
    const long long k = -v / 3;
    // Cancel the leading term of cur^2 (valuation -6k) against w^3 with w = r * t^(-2k).
    const FPoly lead = leading_class(cur * cur, P);
    const FPoly r = class_pth_root(FPoly::constant(cur.base().zero()) - lead, P);
    const RatFunc w = lift_class(r, -2 * k, P);
    const RatFunc s = cur * cur + w * w * w + cur * w;
    if (s.is_zero()) fail(Errc::InvalidArgument, "char-3 local reduction reached a degenerate parameter");
    cur = (s * s) / (cur * cur * cur);
  }
}

Signature signature_char3(const RatFunc& a, const Place& P) {
  if (char_of(a) != 3) fail(Errc::WrongCharacteristic, "char-3 form needs characteristic 3");
  require_irreducible(Char3<RatFunc>{a});
  return signature_char3_unchecked(a, P);
}

Extension Extension::unchecked(const CanonicalCubic<RatFunc>& form) {
  Extension E;
  E.form_ = form;
  E.base_ = std::visit(
      [](const auto& v) -> Field {
        if constexpr (requires { v.root; }) return v.root.base();
        else return v.a.base();
      },
      form);
  return E;
}

Extension Extension::make(const CanonicalCubic<RatFunc>& form) {
  if (std::holds_alternative<Reducible<RatFunc>>(form)) fail(Errc::ReducibleInput, "cubic is reducible over F_q(x)");
  if (std::holds_alternative<InseparablePure<RatFunc>>(form))
    fail(Errc::Inseparable, "X^3 - a in characteristic 3 is inseparable");
  Extension E = unchecked(form);
  const bool char3 = E.base_.characteristic() == 3;
  if (std::holds_alternative<Char3<RatFunc>>(form) != char3)
    fail(Errc::WrongCharacteristic, "form does not match the characteristic");
  require_irreducible(form);
  ConstantResult cr = is_constant_extension(E);
  if (cr.kind == ConstantResult::Kind::Constant) E.cert_ = ConstantDetected{cr.u};
  else if (cr.kind == ConstantResult::Kind::Geometric) E.cert_ = Certified{*cr.witness};
  return E;
}

RamificationReport ramification_report(const Extension& E) {
  RamificationReport R;
  const Field& F = E.base();
  const RatFuncField K{F};
  if (auto* pc = std::get_if<Pure<RatFunc>>(&E.form())) {
    for (auto& [P, v] : divisor_of(pc->a))
      if (v % 3) R.fully_ramified.push_back({P, 2});
    return R;
  }
  if (auto* dc = std::get_if<DepressedTrace<RatFunc>>(&E.form())) {
    const RatFunc& a = dc->a;
    for (auto& [P, v] : divisor_of(a))
      if (v < 0 && v % 3) R.fully_ramified.push_back({P, 2});
    std::vector<RamifiedPlace> S;
    if (F.characteristic() != 2) {
      const RatFunc disc = K.from_int(-27) * (a * a - K.from_int(4));
      for (long long sgn : {2, -2}) {
        const RatFunc shifted = a - K.from_int(sgn);
        if (shifted.is_zero()) fail(Errc::ReducibleInput, "a = +-2 gives a reducible cubic");
        for (auto& [P, v] : divisor_of(shifted))
          if (v > 0 && valuation(disc, P) % 2) S.push_back({P, 1});
      }
      S = collect(S, {});
    } else {
      const RatFunc u = (a * a).inv() + K.one();
      for (auto& [P, v] : divisor_of(a)) {
        if (v <= 0) continue;
        const long long m = valuation(as_local_reduce(u, P).first, P);
        if (m < 0) S.push_back({P, -m + 1});
      }
    }
    R.S = S;
    R.partially_ramified = S;
    return R;
  }
  if (auto* cc = std::get_if<Char3<RatFunc>>(&E.form())) {
    for (const auto& entry : divisor_of(cc->a)) {
      const Place& P = entry.first;
      const long long v = valuation(char3_local_form(cc->a, P), P);
      if (v < 0) R.S.push_back({P, -v + 2});
      else if (v % 2) R.T.push_back({P, 1});
    }
    R.fully_ramified = R.S;
    R.partially_ramified = R.T;
    return R;
  }
  fail(Errc::ReducibleInput, "no ramification report for this form");
}

ConstantResult is_constant_extension(const Extension& E) {
  ConstantResult out;
  if (auto* pc = std::get_if<Pure<RatFunc>>(&E.form())) {
    for (auto& [P, v] : divisor_of(pc->a)) {
      if (v % 3) {
        out.kind = ConstantResult::Kind::Geometric;
        out.witness = P;
        return out;
      }
    }
    const FieldElem u = pc->a.num().lead() / pc->a.den().lead();
    if (cube_classify(u).is_cube) fail(Errc::ReducibleInput, "pure parameter is a cube");
    out.kind = ConstantResult::Kind::Constant;
    out.u = u;
    return out;
  }
  const RamificationReport R = ramification_report(E);
  if (R.empty()) {
    out.kind = ConstantResult::Kind::Constant;
    return out;
  }
  out.kind = ConstantResult::Kind::Geometric;
  out.witness = collect(R.fully_ramified, R.partially_ramified).front().place;
  return out;
}

long long genus(const Extension& E) {
  if (std::holds_alternative<Reducible<RatFunc>>(E.form())) fail(Errc::ReducibleInput, "cubic is reducible");
  if (std::holds_alternative<InseparablePure<RatFunc>>(E.form())) fail(Errc::Inseparable, "inseparable cubic");
  const RamificationReport R = ramification_report(E);
  if (R.empty()) fail(Errc::ConstantExtension, "genus is defined for geometric extensions only");
  // Riemann-Hurwitz with g_K = 0: 2g - 2 = 3(2*0 - 2) + sum d * deg.
  const long long gK = 0;
  long long total = 0;
  for (const auto& list : {R.fully_ramified, R.partially_ramified})
    for (const auto& rp : list) total += rp.d * static_cast<long long>(rp.place.degree());
  const long long twice = 3 * (2 * gK - 2) + 2 + total;
  if (twice < 0 || twice % 2) fail(Errc::NonIntegralGenus, "Riemann-Hurwitz sum is not a nonnegative even integer");
  return twice / 2;
}

Signature signature(const Extension& E, const Place& P) {
  return std::visit(
      [&](const auto& v) -> Signature {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Pure<RatFunc>>) return signature_pure_unchecked(v.a, P);
        else if constexpr (std::is_same_v<V, DepressedTrace<RatFunc>>) return signature_depressed_unchecked(v.a, P);
        else if constexpr (std::is_same_v<V, Char3<RatFunc>>) return signature_char3_unchecked(v.a, P);
        else fail(Errc::ReducibleInput, "no signature for this form");
      },
      E.form());
}

}  // namespace cubext
