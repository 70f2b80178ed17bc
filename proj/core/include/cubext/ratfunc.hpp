#pragma once

#include <string>

#include "cubext/poly.hpp"

namespace cubext {

class RatFunc;

/// Context object for K = F_q(x); plays the Ring role for Poly<RatFunc>.
struct RatFuncField {
  Field fq;

  RatFunc zero() const;
  RatFunc one() const;
  RatFunc from_int(long long n) const;
  RatFunc x() const;

  friend bool operator==(const RatFuncField& a, const RatFuncField& b) { return a.fq == b.fq; }
};

/// Reduced fraction num/den over F_q with monic denominator.
class RatFunc {
 public:
  using Ring = RatFuncField;

  RatFunc() = default;
  /// Polynomial embedding (denominator 1).
  explicit RatFunc(const FPoly& num);
  static RatFunc make(const FPoly& num, const FPoly& den);
  static RatFunc constant(const FieldElem& c);

  const RatFuncField& ring() const { return k_; }
  const Field& base() const { return k_.fq; }
  const FPoly& num() const { return num_; }
  const FPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.degree() == 0 && num_.degree() == 0 && num_.lead().is_one(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return den_.degree() == 0 && num_.degree() <= 0; }
  /// Value of a constant function.
  FieldElem constant_value() const;
  /// max(deg num, deg den).
  int height() const;

  RatFunc operator-() const;
  RatFunc inv() const;
  RatFunc pow(long long e) const;

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "num/den" in descending powers of x; just "num" when den = 1.
  std::string str() const;

 private:
  RatFunc(RatFuncField k, FPoly num, FPoly den) : k_(std::move(k)), num_(std::move(num)), den_(std::move(den)) {}
  void reduce();

  RatFuncField k_;
  FPoly num_, den_;
};

/// Deterministic total order (height, then coefficient encodings).
bool ratfunc_less(const RatFunc& a, const RatFunc& b);

using KPoly = Poly<RatFunc>;

}  // namespace cubext
