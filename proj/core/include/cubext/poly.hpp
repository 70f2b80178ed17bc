#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "cubext/error.hpp"
#include "cubext/ffield.hpp"

namespace cubext {

/// Dense univariate polynomial over a field-like coefficient type R.
/// R must expose `Ring`, `ring()`, `is_zero()`, `inv()` and the field operators;
/// the Ring must expose zero(), one() and from_int().
template <class R>
class Poly {
 public:
  using Coeff = R;
  using Ring = typename R::Ring;

  Poly() = default;
  explicit Poly(Ring ring) : ring_(std::move(ring)) {}
  Poly(Ring ring, std::vector<R> c) : ring_(std::move(ring)), c_(std::move(c)) { normalize(); }

  static Poly constant(const R& c) { return Poly(c.ring(), {c}); }
  static Poly monomial(const R& c, std::size_t k) {
    std::vector<R> v(k + 1, c.ring().zero());
    v[k] = c;
    return Poly(c.ring(), std::move(v));
  }
  static Poly var(const Ring& ring) { return monomial(ring.one(), 1); }

  const Ring& ring() const { return ring_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == ring_.one(); }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_.zero(); }
  const R& lead() const {
    if (c_.empty()) fail(Errc::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    check(a, b);
    const Poly& big = a.c_.size() >= b.c_.size() ? a : b;
    const Poly& small = a.c_.size() >= b.c_.size() ? b : a;
    Poly r = big;
    for (std::size_t i = 0; i < small.c_.size(); ++i) r.c_[i] += small.c_[i];
    r.normalize();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    check(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.ring_);
    std::vector<R> c(a.c_.size() + b.c_.size() - 1, a.ring_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(a.ring_, std::move(c));
  }
  friend Poly operator*(const R& s, const Poly& a) {
    if (s.is_zero()) return Poly(a.ring_);
    Poly r = a;
    for (auto& v : r.c_) v = s * v;
    r.normalize();
    return r;
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  /// Quotient and remainder; the divisor's leading coefficient must be invertible.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    check(a, b);
    if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(a.ring_), a};
    std::vector<R> rem = a.c_;
    std::vector<R> q(a.c_.size() - b.c_.size() + 1, a.ring_.zero());
    const R inv_lead = b.c_.back().inv();
    const std::size_t n = b.c_.size() - 1;
    for (std::size_t k = rem.size(); k-- > n;) {
      if (rem[k].is_zero()) continue;
      R coef = rem[k] * inv_lead;
      q[k - n] = coef;
      for (std::size_t i = 0; i <= n; ++i) rem[k - n + i] -= coef * b.c_[i];
    }
    rem.resize(n);
    return {Poly(a.ring_, std::move(q)), Poly(a.ring_, std::move(rem))};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  R eval(const R& x) const {
    R acc = ring_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(ring_);
    std::vector<R> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      d.push_back(ring_.from_int(static_cast<long long>(i)) * c_[i]);
    return Poly(ring_, std::move(d));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return lead().inv() * *this;
  }

  Poly pow(std::uint64_t e) const {
    Poly r = constant(ring_.one());
    Poly b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  /// Substitute another polynomial for the variable.
  Poly compose(const Poly& g) const {
    Poly acc(ring_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(c_[i]);
    return acc;
  }

 private:
  static void check(const Poly& a, const Poly& b) {
    if (!(a.ring_ == b.ring_)) fail(Errc::DomainMismatch, "polynomials over different domains");
  }
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  Ring ring_;
  std::vector<R> c_;
};

/// Monic gcd (zero when both inputs vanish).
template <class R>
Poly<R> gcd(Poly<R> a, Poly<R> b) {
  while (!b.is_zero()) {
    Poly<R> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class R>
struct XGcd {
  Poly<R> g, s, t;  // g = s*a + t*b, g monic
};

template <class R>
XGcd<R> xgcd(const Poly<R>& a, const Poly<R>& b) {
  const auto& ring = a.ring();
  Poly<R> r0 = a, r1 = b;
  Poly<R> s0 = Poly<R>::constant(ring.one()), s1(ring);
  Poly<R> t0(ring), t1 = Poly<R>::constant(ring.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<R> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<R> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  R li = r0.lead().inv();
  return {li * r0, li * s0, li * t0};
}

using FPoly = Poly<FieldElem>;

/// Render with descending powers of `var`, e.g. "x^2+(1+t)*x+3".
std::string to_string(const FPoly& f, char var = 'x');

}  // namespace cubext
