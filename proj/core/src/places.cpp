#include "cubext/places.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

namespace cubext {

struct Place::Impl {
  bool inf = false;
  FPoly pi;
  Field F;
  unsigned deg = 1;
  mutable std::once_flag once;
  mutable std::unique_ptr<ResidueData> res;
};

namespace {

constexpr std::uint64_t kPlaceEnumLimit = std::uint64_t{1} << 22;

bool poly_less(const FPoly& a, const FPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto& x = a.coeffs()[i];
    const auto& y = b.coeffs()[i];
    if (!(x == y)) return x < y;
  }
  return false;
}

FPoly strip_power(FPoly f, const FPoly& pi, int k) {
  for (int i = 0; i < k; ++i) f = f / pi;
  return f;
}

FPoly inverse_mod(const FPoly& a, const FPoly& m) {
  auto g = xgcd(a % m, m);
  if (g.g.degree() != 0) fail(Errc::DivisionByZero, "residue class not invertible");
  return g.s % m;
}

}  // namespace

Place Place::finite(const FPoly& pi) {
  if (!pi.is_monic() || !is_irreducible(pi)) fail(Errc::InvalidArgument, "place carrier must be monic irreducible");
  Place P;
  P.d_ = std::make_shared<Impl>();
  P.d_->pi = pi;
  P.d_->F = pi.ring();
  P.d_->deg = static_cast<unsigned>(pi.degree());
  return P;
}

Place Place::infinity(const Field& F) {
  Place P;
  P.d_ = std::make_shared<Impl>();
  P.d_->inf = true;
  P.d_->F = F;
  P.d_->deg = 1;
  return P;
}

bool Place::is_infinite() const { return d_->inf; }

const FPoly& Place::carrier() const {
  if (d_->inf) fail(Errc::InvalidArgument, "the infinite place has no carrier");
  return d_->pi;
}

unsigned Place::degree() const { return d_->deg; }
const Field& Place::base() const { return d_->F; }

std::uint64_t Place::residue_order() const {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < d_->deg; ++i) r *= d_->F.order();
  return r;
}

const ResidueData& Place::residue() const {
  std::call_once(d_->once, [this] {
    const Field& F = d_->F;
    if (d_->inf || d_->deg == 1) {
      Embedding id = make_embedding(F, F);
      FieldElem root = d_->inf ? F.zero() : -d_->pi.coeffs()[0];
      d_->res = std::make_unique<ResidueData>(ResidueData{F, id, root});
      return;
    }
    Field R = Field::make(F.characteristic(), F.degree() * d_->deg, kInternalMaxOrder);
    Embedding e = make_embedding(F, R);
    FieldElem root = roots_in_field(map_coeffs(d_->pi, e)).front();
    d_->res = std::make_unique<ResidueData>(ResidueData{R, e, root});
  });
  return *d_->res;
}

std::string Place::name() const { return d_->inf ? "infinity" : to_string(d_->pi, 'x'); }

bool operator==(const Place& a, const Place& b) {
  if (a.d_ == b.d_) return true;
  if (!a.d_ || !b.d_) return false;
  if (a.d_->inf != b.d_->inf) return false;
  if (a.d_->inf) return a.d_->F == b.d_->F;
  return a.d_->pi == b.d_->pi;
}

bool place_less(const Place& a, const Place& b) {
  if (a.is_infinite() != b.is_infinite()) return a.is_infinite();
  if (a.is_infinite()) return false;
  return poly_less(a.carrier(), b.carrier());
}

long long valuation(const RatFunc& a, const Place& P) {
  if (a.is_zero()) return kInfValuation;
  if (P.is_infinite()) return static_cast<long long>(a.den().degree()) - a.num().degree();
  const FPoly& pi = P.carrier();
  return static_cast<long long>(multiplicity(a.num(), pi)) - multiplicity(a.den(), pi);
}

FieldElem reduce_at(const RatFunc& a, const Place& P) {
  const long long v = valuation(a, P);
  if (v < 0) fail(Errc::NegativeValuation, "reduction at a pole");
  const ResidueData& R = P.residue();
  if (v > 0) return R.field.zero();
  if (P.is_infinite()) return a.num().lead() / a.den().lead();
  const FPoly& pi = P.carrier();
  FPoly n = strip_power(a.num(), pi, multiplicity(a.num(), pi));
  FPoly d = strip_power(a.den(), pi, multiplicity(a.den(), pi));
  return map_coeffs(n, R.embed).eval(R.root) / map_coeffs(d, R.embed).eval(R.root);
}

RatFunc uniformizer(const Place& P) {
  const Field& F = P.base();
  if (P.is_infinite()) return RatFuncField{F}.x().inv();
  return RatFunc(P.carrier());
}

Divisor divisor_of(const RatFunc& a) {
  if (a.is_zero()) fail(Errc::ZeroInput, "divisor of zero");
  Divisor out;
  std::vector<std::pair<FPoly, long long>> fin;
  for (auto& [pi, e] : factor_fq(a.num())) fin.emplace_back(pi, e);
  for (auto& [pi, e] : factor_fq(a.den())) fin.emplace_back(pi, -e);
  long long vinf = static_cast<long long>(a.den().degree()) - a.num().degree();
  if (vinf != 0) out.emplace_back(Place::infinity(a.base()), vinf);
  std::sort(fin.begin(), fin.end(), [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
  for (auto& [pi, e] : fin) out.emplace_back(Place::finite(pi), e);
  return out;
}

std::vector<Place> places_up_to(const Field& F, unsigned dmax) {
  if (dmax == 0) fail(Errc::InvalidArgument, "maximum degree must be at least 1");
  std::vector<Place> out{Place::infinity(F)};
  const std::uint64_t q = F.order();
  for (unsigned d = 1; d <= dmax; ++d) {
    std::uint64_t size = 1;
    for (unsigned i = 0; i < d; ++i) {
      size *= q;
      if (size > kPlaceEnumLimit) fail(Errc::SizeExceeded, "too many places to enumerate");
    }
    std::vector<FPoly> carriers;
    if (d == 1) {
      for (std::uint64_t c = 0; c < q; ++c)
        carriers.push_back(FPoly(F, {F.from_index(c), F.one()}));
    } else {
      // Minimal polynomials of the elements of exact degree d in F_{q^d}.
      Field B = Field::make(F.characteristic(), F.degree() * d, kInternalMaxOrder);
      Embedding e = make_embedding(F, B);
      std::unordered_map<std::uint64_t, std::uint64_t> back;
      for (std::uint64_t c = 0; c < q; ++c) back.emplace(e(F.from_index(c)).index(), c);
      for (std::uint64_t i = 0; i < B.order(); ++i) {
        FieldElem a = B.from_index(i);
        std::vector<FieldElem> orbit{a};
        bool least = true, exact = true;
        for (unsigned j = 1; j < d; ++j) {
          FieldElem nxt = orbit.back().pow(q);
          if (nxt == a) {
            exact = false;
            break;
          }
          if (nxt.index() < i) least = false;
          orbit.push_back(nxt);
        }
        if (!exact || !least) continue;
        Poly<FieldElem> m = FPoly::constant(B.one());
        for (const auto& r : orbit) m *= FPoly(B, {-r, B.one()});
        std::vector<FieldElem> c;
        for (const auto& v : m.coeffs()) c.push_back(F.from_index(back.at(v.index())));
        carriers.push_back(FPoly(F, std::move(c)));
      }
      std::sort(carriers.begin(), carriers.end(), poly_less);
    }
    for (auto& pi : carriers) {
      out.push_back(Place::finite(pi));
    }
  }
  return out;
}

FPoly residue_class(const RatFunc& a, const Place& P) {
  const long long v = valuation(a, P);
  if (v < 0) fail(Errc::NegativeValuation, "residue class at a pole");
  const Field& F = P.base();
  if (v > 0) return FPoly(F);
  return leading_class(a, P);
}

FPoly leading_class(const RatFunc& a, const Place& P) {
  if (a.is_zero()) fail(Errc::ZeroInput, "leading coefficient of zero");
  if (P.is_infinite()) return FPoly::constant(a.num().lead() / a.den().lead());
  const FPoly& pi = P.carrier();
  FPoly n = strip_power(a.num(), pi, multiplicity(a.num(), pi));
  FPoly d = strip_power(a.den(), pi, multiplicity(a.den(), pi));
  return ((n % pi) * inverse_mod(d, pi)) % pi;
}

RatFunc lift_class(const FPoly& r, long long k, const Place& P) {
  RatFunc base(r);
  if (base.is_zero()) return base;
  return base * uniformizer(P).pow(k);
}

FPoly class_mul(const FPoly& a, const FPoly& b, const Place& P) {
  if (P.is_infinite()) return a * b;
  return (a * b) % P.carrier();
}

FPoly class_pth_root(const FPoly& r, const Place& P) {
  const Field& F = P.base();
  const std::uint64_t q = F.order(), p = F.characteristic();
  if (P.is_infinite() || P.degree() == 1) {
    FPoly rr = P.is_infinite() ? r : r % P.carrier();
    return FPoly::constant(rr.coeff(0).pow(q / p));
  }
  const FPoly& pi = P.carrier();
  // Q/p = q^(d-1) * (q/p).
  FPoly s = r % pi;
  for (unsigned i = 1; i < P.degree(); ++i) s = powmod(s, q, pi);
  return powmod(s, q / p, pi);
}

FieldElem class_to_field(const FPoly& r, const Place& P) {
  const ResidueData& R = P.residue();
  if (P.is_infinite()) return r.coeff(0);
  return map_coeffs(r % P.carrier(), R.embed).eval(R.root);
}

std::pair<RatFunc, RatFunc> artin_schreier_strip(const RatFunc& u, const Place& P) {
  const Field& F = P.base();
  const long long p = static_cast<long long>(F.characteristic());
  RatFunc cur = u, w = RatFuncField{F}.zero();
  for (;;) {
    long long v = valuation(cur, P);
    if (v >= 0 || (-v) % p != 0) break;
    FPoly s = leading_class(cur, P);
    FPoly r = class_pth_root(s, P);
    RatFunc step = lift_class(r, v / p, P);
    cur = cur - (step.pow(p) - step);
    w = w + step;
  }
  return {cur, w};
}

std::optional<RatFunc> solve_artin_schreier_global(const RatFunc& u) {
  const Field& F = u.base();
  if (F.characteristic() != 2) fail(Errc::WrongCharacteristic, "global Artin-Schreier solver needs characteristic 2");
  RatFunc cur = u, d = RatFuncField{F}.zero();
  std::vector<Place> poles;
  for (auto& [pi, e] : factor_fq(u.den())) poles.push_back(Place::finite(pi));
  poles.push_back(Place::infinity(F));
  for (const auto& P : poles) {
    auto [nu, w] = artin_schreier_strip(cur, P);
    if (valuation(nu, P) < 0) return std::nullopt;
    cur = nu;
    d = d + w;
  }
  if (!cur.is_constant()) fail(Errc::InvalidArgument, "Artin-Schreier stripping left a pole");
  auto roots = solve_artin_schreier2(cur.constant_value());
  if (roots.empty()) return std::nullopt;
  return d + RatFunc::constant(roots.front());
}

}  // namespace cubext
