#include "support.hpp"

namespace cubext::testing {

FieldElem random_elem(const Field& F, Rng& rng) {
  return F.from_index(std::uniform_int_distribution<std::uint64_t>(0, F.order() - 1)(rng));
}

FieldElem random_nonzero(const Field& F, Rng& rng) {
  return F.from_index(std::uniform_int_distribution<std::uint64_t>(1, F.order() - 1)(rng));
}

FPoly random_poly(const Field& F, int deg, Rng& rng, bool monic) {
  std::vector<FieldElem> c;
  for (int i = 0; i < deg; ++i) c.push_back(random_elem(F, rng));
  c.push_back(monic ? F.one() : random_nonzero(F, rng));
  return FPoly(F, std::move(c));
}

RatFunc random_ratfunc(const Field& F, int dn, int dd, Rng& rng) {
  const int n = std::uniform_int_distribution<int>(0, dn)(rng);
  const int d = std::uniform_int_distribution<int>(0, dd)(rng);
  return RatFunc::make(random_poly(F, n, rng), random_poly(F, d, rng, true));
}

FPoly xpoly(const Field& F, std::vector<long long> c) {
  std::vector<FieldElem> v;
  for (long long k : c) v.push_back(F.from_int(k));
  return FPoly(F, std::move(v));
}

RatFunc xfunc(const Field& F, std::vector<long long> num, std::vector<long long> den) {
  return RatFunc::make(xpoly(F, std::move(num)), xpoly(F, std::move(den)));
}

Place xplace(const Field& F, std::vector<long long> carrier) { return Place::finite(xpoly(F, std::move(carrier))); }

std::vector<std::pair<FieldElem, int>> brute_roots(const FPoly& f) {
  std::vector<std::pair<FieldElem, int>> out;
  for (const auto& r : enumerate(f.ring())) {
    FPoly g = f;
    const FPoly lin(f.ring(), {-r, f.ring().one()});
    int k = 0;
    while (!g.is_zero() && g.eval(r).is_zero()) {
      g = g / lin;
      ++k;
    }
    if (k) out.emplace_back(r, k);
  }
  return out;
}

long long kummer_genus_squarefree(const FPoly& a) {
  const long long n = a.degree();
  return n % 3 == 0 ? n - 2 : n - 1;
}

namespace {

FieldElem cube_root_char3(const FieldElem& c) {
  FieldElem r = c;
  for (unsigned i = 1; i < c.field().degree(); ++i) r = r.pow(3);
  return r;
}

// Replace c*z^{3k} by c^{1/3} z^k from the top until the degree is prime to 3.
int reduced_degree(FPoly f) {
  for (;;) {
    const int d = f.degree();
    if (d <= 0) return 0;
    if (d % 3 != 0) return d;
    const FieldElem c = f.lead();
    f = f - FPoly::monomial(c, d) + FPoly::monomial(cube_root_char3(c), d / 3);
  }
}

}  // namespace

std::optional<long long> artin_schreier_genus(const std::vector<AsPart>& parts) {
  long long sum = 0;
  bool any = false;
  for (const auto& part : parts) {
    const int m = reduced_degree(part.poly);
    if (m > 0) {
      sum += m + 1;
      any = true;
    }
  }
  if (!any) return std::nullopt;
  return sum - 2;
}

RatFunc as_parts_value(const Field& F, const std::vector<AsPart>& parts) {
  const RatFuncField K{F};
  RatFunc out = K.zero();
  for (const auto& part : parts) {
    RatFunc var = K.x();
    if (part.center) var = (K.x() - RatFunc::constant(*part.center)).inv();
    RatFunc acc = K.zero();
    for (std::size_t i = part.poly.coeffs().size(); i-- > 0;) acc = acc * var + RatFunc::constant(part.poly.coeffs()[i]);
    out += acc;
  }
  return out;
}

bool brute_pure_isomorphic(const FieldElem& a, const FieldElem& b) {
  for (const auto& c : enumerate(a.field()))
    for (int j = 1; j <= 2; ++j)
      if (c.pow(3) * b.pow(j) == a) return true;
  return false;
}

}  // namespace cubext::testing
