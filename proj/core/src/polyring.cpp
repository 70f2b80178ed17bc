#include "cubext/polyring.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <random>

namespace cubext {

namespace {

constexpr int kMaxFactorDegree = 512;
constexpr std::uint64_t kSeed = 0x5eed'c0ffee'1234ULL;

FPoly xpoly(const Field& F) { return FPoly::var(F); }
FPoly cpoly(const FieldElem& c) { return FPoly::constant(c); }

bool poly_less(const FPoly& a, const FPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto& x = a.coeffs()[i];
    const auto& y = b.coeffs()[i];
    if (!(x == y)) return x < y;
  }
  return false;
}

FPoly random_poly(const Field& F, int deg_bound, std::mt19937_64& rng) {
  std::vector<FieldElem> c;
  c.reserve(deg_bound);
  for (int i = 0; i < deg_bound; ++i) c.push_back(F.from_index(rng() % F.order()));
  return FPoly(F, std::move(c));
}

// Equal-degree splitting of a squarefree monic product of degree-d irreducibles.
void edf(const FPoly& f, int d, std::mt19937_64& rng, std::vector<FPoly>& out) {
  if (f.degree() == d) {
    out.push_back(f.monic());
    return;
  }
  const Field& F = f.ring();
  const std::uint64_t q = F.order();
  const std::uint64_t p = F.characteristic();
  for (;;) {
    FPoly a = random_poly(F, f.degree(), rng);
    if (a.degree() <= 0) continue;
    FPoly g = gcd(a, f);
    if (g.degree() == 0) {
      if (p == 2) {
        // Absolute trace of a in F_q[x]/(f): sum of a^(2^i), i < k*d.
        unsigned k = F.degree();
        FPoly t = a, cur = a;
        for (unsigned i = 1; i < k * static_cast<unsigned>(d); ++i) {
          cur = (cur * cur) % f;
          t += cur;
        }
        g = gcd(t, f);
      } else {
        FPoly norm = a, cur = a;
        for (int i = 1; i < d; ++i) {
          cur = powmod(cur, q, f);
          norm = (norm * cur) % f;
        }
        FPoly b = powmod(norm, (q - 1) / 2, f);
        g = gcd(b - cpoly(F.one()), f);
      }
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      edf(g, d, rng, out);
      edf(f / g, d, rng, out);
      return;
    }
  }
}

std::vector<std::pair<FPoly, int>> ddf(FPoly f) {
  const Field& F = f.ring();
  const FPoly x = xpoly(F);
  std::vector<std::pair<FPoly, int>> out;
  FPoly h = x % f;
  int i = 0;
  while (f.degree() >= 2 * (i + 1)) {
    ++i;
    h = powmod(h, F.order(), f);
    FPoly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

// p-th root of a polynomial whose derivative vanishes.
FPoly pth_root(const FPoly& f) {
  const Field& F = f.ring();
  const std::uint64_t p = F.characteristic();
  const std::uint64_t e = F.order() / p;
  std::vector<FieldElem> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeffs()[i].pow(e));
  return FPoly(F, std::move(c));
}

void squarefree(const FPoly& f, int mult, std::vector<std::pair<FPoly, int>>& out) {
  const Field& F = f.ring();
  FPoly c = gcd(f, f.derivative());
  FPoly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    FPoly y = gcd(w, c);
    FPoly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree(pth_root(c.monic()), mult * static_cast<int>(F.characteristic()), out);
}

}  // namespace

std::string to_string(const FPoly& f, char var) {
  if (f.is_zero()) return "0";
  std::string out;
  int terms = 0;
  for (const auto& c : f.coeffs())
    if (!c.is_zero()) ++terms;
  for (int k = f.degree(); k >= 0; --k) {
    const FieldElem& c = f.coeffs()[k];
    if (c.is_zero()) continue;
    if (!out.empty()) out += '+';
    std::string cs = c.str();
    bool compound = cs.find('+') != std::string::npos;
    if (k == 0) {
      out += (compound && terms > 1) ? "(" + cs + ")" : cs;
      continue;
    }
    std::string mono(1, var);
    if (k > 1) mono += "^" + std::to_string(k);
    if (c.is_one()) out += mono;
    else if (compound) out += "(" + cs + ")*" + mono;
    else out += cs + "*" + mono;
  }
  return out;
}

FPoly powmod(FPoly a, std::uint64_t e, const FPoly& m) {
  FPoly r = cpoly(m.ring().one()) % m;
  a = a % m;
  while (e) {
    if (e & 1) r = (r * a) % m;
    e >>= 1;
    if (e) a = (a * a) % m;
  }
  return r;
}

std::vector<FieldElem> solve_artin_schreier2(const FieldElem& u) {
  const Field& F = u.field();
  if (F.characteristic() != 2) fail(Errc::WrongCharacteristic, "Artin-Schreier solver needs characteristic 2");
  if (trace_to_prime(u) != 0) return {};
  const unsigned m = F.degree();
  FieldElem y;
  if (m % 2 == 1) {
    // Half-trace.
    y = F.zero();
    FieldElem cur = u;
    for (unsigned i = 0; i <= (m - 1) / 2; ++i) {
      y += cur;
      cur = cur.pow(4);
    }
  } else {
    // Kernel/solve of the F_2-linear map Y -> Y^2 + Y on the bit encoding.
    std::vector<std::uint64_t> pv(m, 0), pc(m, 0);
    std::vector<bool> used(m, false);
    for (unsigned i = 0; i < m; ++i) {
      FieldElem e = F.from_index(std::uint64_t{1} << i);
      std::uint64_t v = (e * e + e).index(), comb = std::uint64_t{1} << i;
      for (unsigned b = m; b-- > 0;) {
        if (!((v >> b) & 1)) continue;
        if (used[b]) {
          v ^= pv[b];
          comb ^= pc[b];
        } else {
          used[b] = true;
          pv[b] = v;
          pc[b] = comb;
          break;
        }
      }
    }
    std::uint64_t t = u.index(), sol = 0;
    for (unsigned b = m; b-- > 0;) {
      if (!((t >> b) & 1)) continue;
      if (!used[b]) return {};
      t ^= pv[b];
      sol ^= pc[b];
    }
    y = F.from_index(sol);
  }
  std::vector<FieldElem> out{y, y + F.one()};
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FieldElem> quadratic_roots(const FieldElem& b, const FieldElem& c) {
  const Field& F = b.field();
  std::vector<FieldElem> out;
  if (F.characteristic() == 2) {
    if (b.is_zero()) return {c.pow(F.order() / 2)};
    for (const auto& y : solve_artin_schreier2(c / (b * b))) out.push_back(b * y);
  } else {
    FieldElem disc = b * b - F.from_int(4) * c;
    auto sq = square_classify(disc);
    if (!sq.is_square) return {};
    FieldElem half = F.from_int(2).inv();
    for (const auto& r : sq.roots) out.push_back((r - b) * half);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Factorization factor_fq(const FPoly& f) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "cannot factor the zero polynomial");
  if (f.degree() > kMaxFactorDegree) fail(Errc::SizeExceeded, "degree above factorisation bound");
  Factorization out;
  if (f.degree() == 0) return out;
  std::mt19937_64 rng(kSeed);
  std::vector<std::pair<FPoly, int>> sf;
  squarefree(f.monic(), 1, sf);
  for (auto& [g, e] : sf) {
    for (auto& [h, d] : ddf(g)) {
      std::vector<FPoly> parts;
      edf(h, d, rng, parts);
      for (auto& pi : parts) out.emplace_back(std::move(pi), e);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  // Merge repeated carriers (possible when the p-th root step re-finds a factor).
  Factorization merged;
  for (auto& pe : out) {
    if (!merged.empty() && merged.back().first == pe.first) merged.back().second += pe.second;
    else merged.push_back(std::move(pe));
  }
  return merged;
}

bool is_irreducible(const FPoly& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  const FPoly g = f.monic();
  const Field& F = f.ring();
  const FPoly x = xpoly(F);
  const int n = g.degree();
  std::vector<FPoly> frob{x % g};  // frob[i] = x^(q^i) mod g
  for (int i = 1; i <= n; ++i) frob.push_back(powmod(frob.back(), F.order(), g));
  if (!(frob[n] == x % g)) return false;
  for (int r = 2; r <= n; ++r) {
    if (n % r) continue;
    bool prime = true;
    for (int k = 2; k * k <= r; ++k)
      if (r % k == 0) prime = false;
    if (!prime) continue;
    if (gcd(frob[n / r] - x, g).degree() > 0) return false;
  }
  return true;
}

std::vector<FieldElem> roots_in_field(const FPoly& f) {
  if (f.degree() <= 0) return {};
  const Field& F = f.ring();
  FPoly m = f.monic();
  FPoly h = powmod(xpoly(F), F.order(), m);
  FPoly g = gcd(h - xpoly(F), m);
  std::vector<FieldElem> out;
  if (g.degree() <= 0) return out;
  std::mt19937_64 rng(kSeed);
  std::vector<FPoly> lin;
  edf(g, 1, rng, lin);
  for (const auto& l : lin) out.push_back(-l.coeffs()[0]);
  std::sort(out.begin(), out.end());
  return out;
}

FPoly deterministic_irreducible(const Field& F, unsigned d) {
  if (d == 0) fail(Errc::InvalidArgument, "degree must be positive");
  std::vector<FieldElem> c(d + 1, F.zero());
  c[d] = F.one();
  std::vector<std::uint64_t> idx(d, 0);
  for (;;) {
    for (unsigned i = 0; i < d; ++i) c[i] = F.from_index(idx[i]);
    FPoly f(F, c);
    if (is_irreducible(f)) return f;
    unsigned i = 0;
    while (i < d && idx[i] == F.order() - 1) idx[i++] = 0;
    if (i == d) fail(Errc::InvalidArgument, "no irreducible polynomial found");
    ++idx[i];
  }
}

FieldElem Embedding::operator()(const FieldElem& a) const {
  if (!(a.field() == from)) fail(Errc::FieldMismatch, "embedding applied outside its source field");
  if (from.degree() == 1) return to.from_index(a.index());
  FieldElem acc = to.zero();
  auto c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * gen_image + to.from_index(c[i]);
  return acc;
}

Embedding make_embedding(const Field& from, const Field& to) {
  if (from.characteristic() != to.characteristic() || to.degree() % from.degree() != 0)
    fail(Errc::FieldMismatch, "no embedding between these fields");
  if (from.degree() == 1) return {from, to, to.zero()};
  if (from == to) return {from, to, to.gen()};
  std::vector<FieldElem> mc;
  for (auto v : from.modulus()) mc.push_back(to.from_index(v));
  auto roots = roots_in_field(FPoly(to, mc));
  return {from, to, roots.front()};
}

FPoly map_coeffs(const FPoly& f, const Embedding& e) {
  std::vector<FieldElem> c;
  for (const auto& v : f.coeffs()) c.push_back(e(v));
  return FPoly(e.to, std::move(c));
}

int multiplicity(FPoly f, const FPoly& pi) {
  if (f.is_zero()) return INT_MAX;
  int k = 0;
  for (;;) {
    auto [q, r] = divmod(f, pi);
    if (!r.is_zero()) return k;
    f = std::move(q);
    ++k;
  }
}

namespace {

// Whether the minimum of vals[i] + i*w is attained at least twice.
bool newton_ok(const std::vector<long long>& vals, long long w) {
  long long best = LLONG_MAX;
  int count = 0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i] == LLONG_MAX) continue;
    long long v = vals[i] + static_cast<long long>(i) * w;
    if (v < best) {
      best = v;
      count = 1;
    } else if (v == best) {
      ++count;
    }
  }
  return count >= 2;
}

}  // namespace

std::vector<RatFunc> rational_roots(const KPoly& f, std::size_t max_candidates) {
  if (f.is_zero()) fail(Errc::ZeroPolynomial, "root search on the zero polynomial");
  const Field& F = f.ring().fq;
  const RatFuncField K{F};
  std::vector<RatFunc> roots;
  if (f.degree() <= 0) return roots;

  // Clear denominators and content.
  FPoly L = cpoly(F.one());
  for (const auto& c : f.coeffs()) L = (L * c.den()) / gcd(L, c.den());
  std::vector<FPoly> b;
  for (const auto& c : f.coeffs()) b.push_back(c.num() * (L / c.den()));
  FPoly content(F);
  for (const auto& v : b) content = gcd(content, v);
  for (auto& v : b) v = v / content;

  std::size_t shift = 0;
  while (b[shift].is_zero()) ++shift;
  if (shift > 0) roots.push_back(K.zero());
  b.erase(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(shift));
  const std::size_t n = b.size() - 1;
  if (n == 0) return roots;

  // Primes dividing the extreme coefficients, with admissible valuations of a root.
  std::vector<FPoly> primes;
  for (auto& [pi, e] : factor_fq(b[0])) primes.push_back(pi);
  for (auto& [pi, e] : factor_fq(b[n]))
    if (std::find(primes.begin(), primes.end(), pi) == primes.end()) primes.push_back(pi);
  std::vector<std::vector<long long>> choices;
  for (const auto& pi : primes) {
    std::vector<long long> vals;
    for (const auto& v : b) {
      int k = multiplicity(v, pi);
      vals.push_back(k == INT_MAX ? LLONG_MAX : k);
    }
    std::vector<long long> ok;
    for (long long w = -vals[n]; w <= vals[0]; ++w)
      if (newton_ok(vals, w)) ok.push_back(w);
    if (ok.empty()) return roots;
    choices.push_back(std::move(ok));
  }
  std::vector<long long> inf_vals;
  for (const auto& v : b) inf_vals.push_back(v.is_zero() ? LLONG_MAX : -static_cast<long long>(v.degree()));

  std::size_t combos = F.order() - 1;
  for (const auto& c : choices) {
    combos *= c.size();
    if (combos > max_candidates) fail(Errc::SizeExceeded, "too many rational-root candidates");
  }

  // Sample points in an extension field to filter candidates cheaply.
  unsigned k = 1;
  while (std::pow(static_cast<double>(F.order()), k) < 4096.0) ++k;
  const Field big = Field::make(F.characteristic(), F.degree() * k, kInternalMaxOrder);
  const Embedding emb = make_embedding(F, big);
  struct Sample {
    std::vector<FieldElem> bv, piv;
  };
  std::vector<Sample> samples;
  std::mt19937_64 rng(kSeed);
  for (int tries = 0; tries < 64 && samples.size() < 3; ++tries) {
    FieldElem x0 = big.from_index(rng() % big.order());
    Sample s;
    bool good = true;
    for (const auto& v : b) s.bv.push_back(map_coeffs(v, emb).eval(x0));
    if (s.bv[n].is_zero()) good = false;
    for (const auto& pi : primes) {
      s.piv.push_back(map_coeffs(pi, emb).eval(x0));
      if (s.piv.back().is_zero()) good = false;
    }
    if (good) samples.push_back(std::move(s));
  }

  std::vector<std::size_t> pos(primes.size(), 0);
  for (;;) {
    long long inf_w = 0;
    for (std::size_t j = 0; j < primes.size(); ++j) inf_w -= choices[j][pos[j]] * primes[j].degree();
    if (newton_ok(inf_vals, inf_w)) {
      std::vector<FieldElem> ratio;
      for (const auto& s : samples) {
        FieldElem r = big.one();
        for (std::size_t j = 0; j < primes.size(); ++j) {
          long long w = choices[j][pos[j]];
          r *= w >= 0 ? s.piv[j].pow(static_cast<std::uint64_t>(w)) : s.piv[j].inv().pow(static_cast<std::uint64_t>(-w));
        }
        ratio.push_back(r);
      }
      FPoly M = cpoly(F.one()), D = cpoly(F.one());
      bool built = false;
      for (std::uint64_t ui = 1; ui < F.order(); ++ui) {
        const FieldElem u = F.from_index(ui);
        const FieldElem ub = emb(u);
        bool pass = true;
        for (std::size_t si = 0; si < samples.size() && pass; ++si) {
          FieldElem t0 = ub * ratio[si], acc = big.zero();
          for (std::size_t i = n + 1; i-- > 0;) acc = acc * t0 + samples[si].bv[i];
          pass = acc.is_zero();
        }
        if (!pass) continue;
        if (!built) {
          for (std::size_t j = 0; j < primes.size(); ++j) {
            long long w = choices[j][pos[j]];
            if (w > 0) M *= primes[j].pow(static_cast<std::uint64_t>(w));
            if (w < 0) D *= primes[j].pow(static_cast<std::uint64_t>(-w));
          }
          built = true;
        }
        RatFunc t = RatFunc::make(u * M, D);
        if (f.eval(t).is_zero()) roots.push_back(t);
      }
    }
    std::size_t j = 0;
    while (j < pos.size() && ++pos[j] == choices[j].size()) pos[j++] = 0;
    if (j == pos.size()) break;
  }
  std::sort(roots.begin(), roots.end(), ratfunc_less);
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace cubext
