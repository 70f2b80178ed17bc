#include <algorithm>

#include "cubext/arith.hpp"
#include "cubext/canon.hpp"

namespace cubext {

namespace {

// Skip separation searches over places whose residue fields get this large.
constexpr std::uint64_t kSeparationLimit = 4096;

template <class SigFn>
std::optional<Place> separating_place(const Field& F, unsigned bound, SigFn&& sig_pair) {
  unsigned dmax = 0;
  std::uint64_t size = 1;
  while (dmax < bound && size * F.order() <= kSeparationLimit) {
    size *= F.order();
    ++dmax;
  }
  if (dmax == 0) return std::nullopt;
  for (const auto& P : places_up_to(F, dmax)) {
    auto [s1, s2] = sig_pair(P);
    if (!(s1 == s2)) return P;
  }
  return std::nullopt;
}

}  // namespace

DepressedIsom<RatFunc> isom_depressed(const RatFunc& a1, const RatFunc& a2, unsigned search_bound) {
  const Field& F = a1.base();
  const RatFuncField K{F};
  if (F.characteristic() == 3) fail(Errc::WrongCharacteristic, "depressed form needs characteristic != 3");
  for (const auto& a : {a1, a2})
    if (has_rational_root(CanonicalCubic<RatFunc>{DepressedTrace<RatFunc>{a}}))
      fail(Errc::ReducibleInput, "reducible input");
  DepressedIsom<RatFunc> out;
  if (a1 == a2 || a1 == -a2) {
    out.verdict = Verdict::Isomorphic;
    out.alpha = K.zero();
    out.beta = a1 == a2 ? K.one() : -K.one();
    return out;
  }
  auto c1 = purely_cubic_root(a1), c2 = purely_cubic_root(a2);
  if (c1.has_value() != c2.has_value()) {
    out.verdict = Verdict::NotIsomorphic;
    out.reason = "exactly one of the two extensions is purely cubic";
    return out;
  }
  if (c1) {
    // Over K(c) both become pure with parameters c1 and c2; over K itself the
    // generators y_i = u_i + 1/u_i with u_i^3 = c_i.
    out.via_pure = isom_pure(*c1, *c2);
    out.verdict = out.via_pure->isomorphic ? Verdict::Isomorphic : Verdict::NotIsomorphic;
    out.reason = "both extensions are purely cubic";
    return out;
  }

  // Points of alpha^2 + a2*alpha*beta + beta^2 = 1 other than (0, +-1) lie on the
  // lines beta = 1 + t*alpha through (0, 1).
  const KPoly T = KPoly::var(K);
  const KPoly one = KPoly::constant(K.one());
  const KPoly D = one + a2 * T + T * T;
  const KPoly A = -(KPoly::constant(a2) + K.from_int(2) * T);
  const KPoly B = one - T * T;
  const KPoly eq = K.from_int(-3) * a2 * (A * A * B) + a2 * (B * B * B) + K.from_int(6) * (A * D * D) +
                   (a2 * a2 - K.from_int(8)) * (A * A * A) - a1 * (D * D * D);
  std::vector<RatFunc> ts;
  try {
    if (eq.is_zero()) ts.push_back(K.zero());
    else ts = rational_roots(eq);
  } catch (const Error& e) {
    if (e.code() != Errc::SizeExceeded) throw;
    out.verdict = Verdict::Unknown;
    out.reason = "candidate enumeration exceeded its bound";
    return out;
  }
  for (const auto& t : ts) {
    const RatFunc d = D.eval(t);
    if (d.is_zero()) continue;
    const RatFunc alpha = A.eval(t) / d, beta = B.eval(t) / d;
    if (depressed_isom_value(a2, alpha, beta) == a1) {
      out.verdict = Verdict::Isomorphic;
      out.alpha = alpha;
      out.beta = beta;
      return out;
    }
  }
  out.verdict = Verdict::NotIsomorphic;
  out.reason = "no rational point of the conic satisfies the criterion";
  out.separating = separating_place(F, search_bound, [&](const Place& P) {
    Extension E1 = Extension::unchecked(DepressedTrace<RatFunc>{a1});
    Extension E2 = Extension::unchecked(DepressedTrace<RatFunc>{a2});
    return std::make_pair(signature(E1, P), signature(E2, P));
  });
  return out;
}

Char3Isom<RatFunc> isom_char3(const RatFunc& a1, const RatFunc& a2, unsigned search_bound) {
  const Field& F = a1.base();
  const RatFuncField K{F};
  if (F.characteristic() != 3) fail(Errc::WrongCharacteristic, "char-3 form needs characteristic 3");
  for (const auto& a : {a1, a2})
    if (a.is_zero() || has_rational_root(CanonicalCubic<RatFunc>{Char3<RatFunc>{a}}))
      fail(Errc::ReducibleInput, "reducible input");
  Char3Isom<RatFunc> out;
  // a2 * a1^3 = (j*a1^2 + w^3 + a1*w)^2, so a2 * a1^3 must be a square s^2 and
  // w a root of w^3 + a1*w + (j*a1^2 -+ s).
  const auto s = global_square_test(a2 * a1 * a1 * a1);
  if (s) {
    try {
      for (int j = 1; j <= 2; ++j) {
        std::vector<RatFunc> cands;
        for (const RatFunc& sv : {*s, -*s}) {
          const KPoly cubic(K, {K.from_int(j) * a1 * a1 - sv, a1, K.zero(), K.one()});
          for (const auto& w : rational_roots(cubic)) cands.push_back(w);
        }
        std::sort(cands.begin(), cands.end(), ratfunc_less);
        for (const auto& w : cands) {
          if (char3_isom_value(a1, j, w) == a2) {
            out.verdict = Verdict::Isomorphic;
            out.j = j;
            out.w = w;
            return out;
          }
        }
      }
    } catch (const Error& e) {
      if (e.code() != Errc::SizeExceeded) throw;
      out.verdict = Verdict::Unknown;
      out.reason = "candidate enumeration exceeded its bound";
      return out;
    }
  }
  out.verdict = Verdict::NotIsomorphic;
  out.reason = s ? "no rational w solves the criterion" : "a2 * a1^3 is not a square";
  out.separating = separating_place(F, search_bound, [&](const Place& P) {
    Extension E1 = Extension::unchecked(Char3<RatFunc>{a1});
    Extension E2 = Extension::unchecked(Char3<RatFunc>{a2});
    return std::make_pair(signature(E1, P), signature(E2, P));
  });
  return out;
}

}  // namespace cubext
