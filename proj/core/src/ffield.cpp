#include "cubext/ffield.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <mutex>

namespace cubext {

namespace detail {

struct FieldData {
  std::uint64_t p = 0;
  unsigned m = 0;
  std::uint64_t s = 0;
  std::vector<std::uint64_t> mod;  // monic, constant term first
  std::vector<std::uint64_t> pw;   // p^0 .. p^m
  // Log tables for small fields; exp_ is doubled so log sums need no reduction.
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

}  // namespace detail

namespace {

using detail::FieldData;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr unsigned kMaxDegree = 64;
constexpr u64 kMaxChar = u64{1} << 31;
constexpr u64 kTableLimit = u64{1} << 16;

using Digits = std::array<u64, 2 * kMaxDegree>;

inline u64 addmod(u64 a, u64 b, u64 p) {
  u64 r = a + b;
  return r >= p ? r - p : r;
}
inline u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

void decode(const FieldData& d, u64 v, Digits& out) {
  for (unsigned i = 0; i < d.m; ++i) {
    out[i] = v % d.p;
    v /= d.p;
  }
}

u64 encode(const FieldData& d, const u64* c) {
  u64 v = 0;
  for (unsigned i = d.m; i-- > 0;) v = v * d.p + c[i];
  return v;
}

u64 raw_add(const FieldData& d, u64 a, u64 b) {
  if (d.m == 1) return addmod(a, b, d.p);
  if (d.p == 2) return a ^ b;
  u64 r = 0;
  for (unsigned i = 0; i < d.m; ++i) {
    u64 x = a % d.p, y = b % d.p;
    a /= d.p;
    b /= d.p;
    r += addmod(x, y, d.p) * d.pw[i];
  }
  return r;
}

u64 raw_neg(const FieldData& d, u64 a) {
  if (d.p == 2) return a;
  if (d.m == 1) return a == 0 ? 0 : d.p - a;
  u64 r = 0;
  for (unsigned i = 0; i < d.m; ++i) {
    u64 x = a % d.p;
    a /= d.p;
    r += (x == 0 ? 0 : d.p - x) * d.pw[i];
  }
  return r;
}

u64 raw_mul_generic(const FieldData& d, u64 a, u64 b) {
  if (d.m == 1) return mulmod(a, b, d.p);
  Digits x{}, y{}, c{};
  decode(d, a, x);
  decode(d, b, y);
  const unsigned m = d.m;
  for (unsigned i = 0; i < m; ++i) {
    if (x[i] == 0) continue;
    for (unsigned j = 0; j < m; ++j) c[i + j] = addmod(c[i + j], mulmod(x[i], y[j], d.p), d.p);
  }
  for (unsigned k = 2 * m - 2; k >= m; --k) {
    u64 lead = c[k];
    if (lead == 0) continue;
    c[k] = 0;
    for (unsigned i = 0; i < m; ++i)
      c[k - m + i] = submod(c[k - m + i], mulmod(lead, d.mod[i], d.p), d.p);
  }
  return encode(d, c.data());
}

u64 raw_mul(const FieldData& d, u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  if (!d.log_.empty()) return d.exp_[d.log_[a] + d.log_[b]];
  return raw_mul_generic(d, a, b);
}

u64 raw_pow(const FieldData& d, u64 a, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = raw_mul(d, r, a);
    a = raw_mul(d, a, a);
    e >>= 1;
  }
  return r;
}

// Dense polynomials over F_p, constant term first, for the modulus search.
using RawPoly = std::vector<u64>;

void trim(RawPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

RawPoly raw_polymod(RawPoly a, const RawPoly& f, u64 p) {
  trim(a);
  const std::size_t n = f.size() - 1;
  const u64 inv_lead = [&] {
    u64 r = 1, b = f.back(), e = p - 2;
    while (e) {
      if (e & 1) r = mulmod(r, b, p);
      b = mulmod(b, b, p);
      e >>= 1;
    }
    return r;
  }();
  while (a.size() > n) {
    u64 c = mulmod(a.back(), inv_lead, p);
    std::size_t shift = a.size() - 1 - n;
    for (std::size_t i = 0; i <= n; ++i) a[shift + i] = submod(a[shift + i], mulmod(c, f[i], p), p);
    trim(a);
  }
  return a;
}

RawPoly raw_mulmod(const RawPoly& a, const RawPoly& b, const RawPoly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  RawPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = addmod(c[i + j], mulmod(a[i], b[j], p), p);
  return raw_polymod(std::move(c), f, p);
}

RawPoly raw_powmod(RawPoly a, u64 e, const RawPoly& f, u64 p) {
  RawPoly r{1};
  a = raw_polymod(std::move(a), f, p);
  while (e) {
    if (e & 1) r = raw_mulmod(r, a, f, p);
    a = raw_mulmod(a, a, f, p);
    e >>= 1;
  }
  return r;
}

RawPoly raw_gcd(RawPoly a, RawPoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = raw_polymod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// x^(p^k) mod f by repeated p-th powering.
RawPoly frob_iter(const RawPoly& f, u64 p, unsigned k) {
  RawPoly r{0, 1};
  for (unsigned i = 0; i < k; ++i) r = raw_powmod(r, p, f, p);
  return r;
}

bool raw_irreducible(const RawPoly& f, u64 p) {
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  if (m == 1) return true;
  RawPoly full = frob_iter(f, p, m);
  RawPoly x{0, 1};
  trim(full);
  if (raw_polymod(x, f, p) != full) return false;
  for (unsigned r = 2; r <= m; ++r) {
    if (m % r) continue;
    bool prime = true;
    for (unsigned k = 2; k * k <= r; ++k)
      if (r % k == 0) prime = false;
    if (!prime) continue;
    RawPoly h = frob_iter(f, p, m / r);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = submod(h[1], 1, p);
    trim(h);
    RawPoly g = raw_gcd(f, h, p);
    if (g.size() != 1) return false;
  }
  return true;
}

u64 inverse_mod(u64 a, u64 n) {
  // Inverse of a modulo n, assuming gcd(a, n) = 1; returns 0 when n = 1.
  if (n == 1) return 0;
  __int128 t = 0, nt = 1, r = n, nr = a % n;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += n;
  return static_cast<u64>(t);
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 k = 2; k * k <= n; ++k) {
    if (n % k) continue;
    out.push_back(k);
    while (n % k == 0) n /= k;
  }
  if (n > 1) out.push_back(n);
  return out;
}

void build_tables(FieldData& d) {
  const u64 n = d.s - 1;
  const auto fac = prime_factors(n);
  u64 g = 0;
  for (u64 c = 1; c < d.s; ++c) {
    bool ok = true;
    for (u64 r : fac)
      if (raw_pow(d, c, n / r) == 1) ok = false;
    if (ok) {
      g = c;
      break;
    }
  }
  d.log_.assign(d.s, 0);
  d.exp_.assign(2 * n, 0);
  u64 v = 1;
  for (u64 i = 0; i < n; ++i) {
    d.exp_[i] = static_cast<std::uint32_t>(v);
    d.exp_[i + n] = static_cast<std::uint32_t>(v);
    d.log_[v] = static_cast<std::uint32_t>(i);
    v = raw_mul_generic(d, v, g);
  }
}

const FieldData& req(const Field& F) {
  if (!F.valid()) fail(Errc::InvalidArgument, "uninitialised field");
  return *F.data();
}

void same_field(const FieldElem& a, const FieldElem& b) {
  if (a.field().data() != b.field().data() && !(a.field() == b.field()))
    fail(Errc::FieldMismatch, "operands live in different fields");
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (u64 k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

std::vector<std::uint64_t> least_irreducible_mod_p(std::uint64_t p, unsigned m) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (m == 0) fail(Errc::InvalidArgument, "degree must be positive");
  RawPoly f(m + 1, 0);
  f[m] = 1;
  for (;;) {
    if (raw_irreducible(f, p)) return f;
    // Next candidate in encoding order: increment the base-p number c_0..c_{m-1}.
    unsigned i = 0;
    while (i < m && f[i] == p - 1) f[i++] = 0;
    if (i == m) fail(Errc::InvalidArgument, "no irreducible found");
    ++f[i];
  }
}

Field Field::make(std::uint64_t p, unsigned m, std::uint64_t max_order) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (m == 0) fail(Errc::InvalidArgument, "extension degree must be positive");
  if (p >= kMaxChar || m > kMaxDegree) fail(Errc::SizeExceeded, "field too large");
  u128 s = 1;
  for (unsigned i = 0; i < m; ++i) {
    s *= p;
    if (s > max_order) fail(Errc::SizeExceeded, "field order exceeds the configured bound");
  }
  static std::mutex cache_mutex;
  static std::map<std::pair<u64, unsigned>, std::shared_ptr<const FieldData>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (auto it = cache.find({p, m}); it != cache.end()) return Field(it->second);
  auto d = std::make_shared<FieldData>();
  d->p = p;
  d->m = m;
  d->s = static_cast<u64>(s);
  d->mod = least_irreducible_mod_p(p, m);
  d->pw.resize(m + 1);
  d->pw[0] = 1;
  for (unsigned i = 1; i <= m; ++i) d->pw[i] = d->pw[i - 1] * p;
  if (d->s > 2 && d->s <= kTableLimit) build_tables(*d);
  cache.emplace(std::make_pair(p, m), d);
  return Field(std::move(d));
}

std::uint64_t Field::characteristic() const { return req(*this).p; }
unsigned Field::degree() const { return req(*this).m; }
std::uint64_t Field::order() const { return req(*this).s; }
std::span<const std::uint64_t> Field::modulus() const { return req(*this).mod; }

FieldElem Field::zero() const { return FieldElem(*this, 0); }
FieldElem Field::one() const { return FieldElem(*this, 1); }

FieldElem Field::from_int(long long n) const {
  const u64 p = characteristic();
  long long r = n % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return FieldElem(*this, static_cast<u64>(r));
}

FieldElem Field::from_index(std::uint64_t i) const { return FieldElem(*this, i); }

FieldElem Field::from_coeffs(std::span<const std::uint64_t> c) const {
  const auto& d = req(*this);
  RawPoly a(c.begin(), c.end());
  for (auto& v : a) v %= d.p;
  a = raw_polymod(std::move(a), d.mod, d.p);
  a.resize(d.m, 0);
  return FieldElem(*this, encode(d, a.data()));
}

FieldElem Field::gen() const {
  const auto& d = req(*this);
  if (d.m == 1) return zero();
  return FieldElem(*this, d.p);
}

bool operator==(const Field& a, const Field& b) {
  if (a.d_ == b.d_) return true;
  if (!a.d_ || !b.d_) return false;
  return a.d_->p == b.d_->p && a.d_->m == b.d_->m;
}

std::string Field::name() const {
  const auto& d = req(*this);
  return d.m == 1 ? std::to_string(d.p) : std::to_string(d.p) + "^" + std::to_string(d.m);
}

FieldElem::FieldElem(Field f, std::uint64_t index) : f_(std::move(f)), v_(index) {
  if (v_ >= req(f_).s) fail(Errc::InvalidArgument, "element index out of range");
}

std::vector<std::uint64_t> FieldElem::coeffs() const {
  const auto& d = req(f_);
  std::vector<u64> out(d.m);
  u64 v = v_;
  for (unsigned i = 0; i < d.m; ++i) {
    out[i] = v % d.p;
    v /= d.p;
  }
  return out;
}

bool FieldElem::is_prime_field() const { return v_ < req(f_).p; }

FieldElem FieldElem::operator-() const { return FieldElem(f_, raw_neg(req(f_), v_), 0); }

FieldElem FieldElem::pow(std::uint64_t e) const {
  const auto& d = req(f_);
  if (v_ == 0) return FieldElem(f_, e == 0 ? 1 : 0, 0);
  if (!d.log_.empty()) {
    u64 l = static_cast<u64>(static_cast<u128>(d.log_[v_]) * (e % (d.s - 1)) % (d.s - 1));
    return FieldElem(f_, d.exp_[l], 0);
  }
  return FieldElem(f_, raw_pow(d, v_, e), 0);
}

FieldElem FieldElem::inv() const {
  if (v_ == 0) fail(Errc::DivisionByZero, "inverse of zero");
  const auto& d = req(f_);
  if (!d.log_.empty()) return FieldElem(f_, d.exp_[(d.s - 1 - d.log_[v_]) % (d.s - 1)], 0);
  return FieldElem(f_, raw_pow(d, v_, d.s - 2), 0);
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  same_field(a, b);
  return FieldElem(a.f_, raw_add(req(a.f_), a.v_, b.v_), 0);
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  same_field(a, b);
  const auto& d = req(a.f_);
  return FieldElem(a.f_, raw_add(d, a.v_, raw_neg(d, b.v_)), 0);
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  same_field(a, b);
  return FieldElem(a.f_, raw_mul(req(a.f_), a.v_, b.v_), 0);
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) {
  same_field(a, b);
  return a * b.inv();
}

bool operator==(const FieldElem& a, const FieldElem& b) { return a.v_ == b.v_ && a.f_ == b.f_; }

std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b) { return a.v_ <=> b.v_; }

std::string FieldElem::str() const {
  if (v_ == 0) return "0";
  const auto c = coeffs();
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]) + "*";
    out += 't';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::uint64_t trace_to_prime(const FieldElem& x) {
  FieldElem acc = x, y = x;
  for (unsigned i = 1; i < x.field().degree(); ++i) {
    y = y.frobenius();
    acc += y;
  }
  return acc.index();
}

namespace {

// One r-th root of x for prime r in {2,3}, or nothing when x is not an r-th power.
std::optional<FieldElem> rth_root(const FieldElem& x, u64 r) {
  const Field& F = x.field();
  const u64 n = F.order() - 1;
  if (x.is_zero()) return x;
  if (n % r != 0) return x.pow(inverse_mod(r % n == 0 ? r : r % n, n));
  if (!x.pow(n / r).is_one()) return std::nullopt;
  u64 t = n;
  unsigned e = 0;
  while (t % r == 0) {
    t /= r;
    ++e;
  }
  FieldElem z;
  for (u64 i = 2; i < F.order(); ++i) {
    FieldElem c = F.from_index(i);
    if (!c.pow(n / r).is_one()) {
      z = c;
      break;
    }
  }
  const FieldElem c = z.pow(t);  // generates the Sylow r-subgroup
  const u64 d = inverse_mod(r % t, t);
  const FieldElem y = x.pow(d);
  const FieldElem target = (y.pow(r) / x).inv();  // want h with h^r = target
  u64 rpow_e1 = 1;
  for (unsigned i = 1; i < e; ++i) rpow_e1 *= r;
  const FieldElem zeta = c.pow(rpow_e1);
  u64 L = 0, rk = 1;
  FieldElem cinv = c.inv();
  for (unsigned k = 0; k < e; ++k) {
    FieldElem cur = target * cinv.pow(L);
    u64 ex = 1;
    for (unsigned i = k + 1; i < e; ++i) ex *= r;
    FieldElem digit = cur.pow(ex);
    u64 l = 0;
    FieldElem zp = F.one();
    while (!(zp == digit)) {
      zp *= zeta;
      ++l;
      if (l >= r) fail(Errc::InvalidArgument, "root extraction failed");
    }
    L += l * rk;
    rk *= r;
  }
  return y * c.pow(L / r);
}

std::vector<FieldElem> all_roots(const FieldElem& root, u64 r) {
  const Field& F = root.field();
  const u64 n = F.order() - 1;
  std::vector<FieldElem> out{root};
  if (!root.is_zero() && n % r == 0) {
    FieldElem zeta;
    for (u64 i = 2; i < F.order(); ++i) {
      FieldElem c = F.from_index(i);
      FieldElem w = c.pow(n / r);
      if (!w.is_one()) {
        zeta = w;
        break;
      }
    }
    FieldElem cur = root;
    for (u64 i = 1; i < r; ++i) {
      cur *= zeta;
      out.push_back(cur);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SquareClass square_classify(const FieldElem& x) {
  auto r = rth_root(x, 2);
  if (!r) return {};
  return {true, all_roots(*r, 2)};
}

CubeClass cube_classify(const FieldElem& x) {
  auto r = rth_root(x, 3);
  if (!r) return {};
  return {true, all_roots(*r, 3)};
}

std::optional<FieldElem> primitive_cube_root_of_unity(const Field& F) {
  if (F.order() % 3 != 1) return std::nullopt;
  for (const auto& w : cube_classify(F.one()).roots)
    if (!w.is_one()) return w;
  return std::nullopt;
}

std::vector<FieldElem> enumerate(const Field& F) {
  std::vector<FieldElem> out;
  out.reserve(F.order());
  for (u64 i = 0; i < F.order(); ++i) out.push_back(F.from_index(i));
  return out;
}

}  // namespace cubext
