#include "cubext/ratfunc.hpp"

#include <algorithm>

namespace cubext {

namespace {

void same_base(const RatFunc& a, const RatFunc& b) {
  if (!(a.base() == b.base())) fail(Errc::FieldMismatch, "rational functions over different fields");
}

FPoly one_poly(const Field& F) { return FPoly::constant(F.one()); }

bool coeff_less(const FPoly& a, const FPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto& x = a.coeffs()[i];
    const auto& y = b.coeffs()[i];
    if (!(x == y)) return x < y;
  }
  return false;
}

}  // namespace

RatFunc RatFuncField::zero() const { return RatFunc(FPoly(fq)); }
RatFunc RatFuncField::one() const { return RatFunc::constant(fq.one()); }
RatFunc RatFuncField::from_int(long long n) const { return RatFunc::constant(fq.from_int(n)); }
RatFunc RatFuncField::x() const { return RatFunc(FPoly::var(fq)); }

RatFunc::RatFunc(const FPoly& num) : k_{num.ring()}, num_(num), den_(one_poly(num.ring())) {}

RatFunc RatFunc::make(const FPoly& num, const FPoly& den) {
  if (den.is_zero()) fail(Errc::ZeroDenominator, "zero denominator");
  if (!(num.ring() == den.ring())) fail(Errc::DomainMismatch, "numerator and denominator over different fields");
  RatFunc r(RatFuncField{num.ring()}, num, den);
  r.reduce();
  return r;
}

RatFunc RatFunc::constant(const FieldElem& c) { return RatFunc(FPoly::constant(c)); }

void RatFunc::reduce() {
  if (num_.is_zero()) {
    den_ = one_poly(k_.fq);
    return;
  }
  if (den_.degree() > 0) {
    FPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
  }
  if (!den_.is_monic()) {
    FieldElem li = den_.lead().inv();
    num_ = li * num_;
    den_ = li * den_;
  }
}

FieldElem RatFunc::constant_value() const {
  if (!is_constant()) fail(Errc::InvalidArgument, "not a constant");
  return num_.is_zero() ? k_.fq.zero() : num_.coeffs()[0];
}

int RatFunc::height() const { return std::max(num_.degree(), den_.degree()); }

RatFunc RatFunc::operator-() const { return RatFunc(k_, -num_, den_); }

RatFunc RatFunc::inv() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero rational function");
  RatFunc r(k_, den_, num_);
  FieldElem li = r.den_.lead().inv();
  r.num_ = li * r.num_;
  r.den_ = li * r.den_;
  return r;
}

RatFunc RatFunc::pow(long long e) const {
  if (e < 0) return inv().pow(-e);
  return RatFunc(k_, num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e)));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  same_base(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    RatFunc r(a.k_, a.num_ + b.num_, a.den_);
    if (a.den_.degree() > 0) r.reduce();
    else if (r.num_.is_zero()) r.den_ = one_poly(a.base());
    return r;
  }
  RatFunc r(a.k_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  r.reduce();
  return r;
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  same_base(a, b);
  if (a.is_zero() || b.is_zero()) return a.k_.zero();
  if (a.den_.degree() == 0 && b.den_.degree() == 0) return RatFunc(a.k_, a.num_ * b.num_, a.den_);
  // Cross-cancel before multiplying to keep degrees small.
  FPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  RatFunc r(a.k_, (a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
  r.reduce();
  return r;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inv(); }

std::string RatFunc::str() const {
  std::string n = to_string(num_, 'x');
  if (den_.degree() == 0) return n;
  std::string d = to_string(den_, 'x');
  auto compound = [](const std::string& s) { return s.find_first_of("+-") != std::string::npos; };
  if (compound(n)) n = "(" + n + ")";
  if (compound(d) || d.find('*') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

bool ratfunc_less(const RatFunc& a, const RatFunc& b) {
  if (a.height() != b.height()) return a.height() < b.height();
  if (!(a.den() == b.den())) return coeff_less(a.den(), b.den());
  return coeff_less(a.num(), b.num());
}

}  // namespace cubext
