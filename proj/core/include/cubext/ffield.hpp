#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cubext/error.hpp"

namespace cubext {

namespace detail {
struct FieldData;
}

class FieldElem;

/// Default upper bound on the order of a user-facing field.
inline constexpr std::uint64_t kDefaultMaxOrder = std::uint64_t{1} << 20;
/// Bound used for residue fields and other internal constructions.
inline constexpr std::uint64_t kInternalMaxOrder = std::uint64_t{1} << 62;

bool is_prime(std::uint64_t n) noexcept;

/// The finite field F_{p^m}, modelled as F_p[t]/(mu) with mu the least monic
/// irreducible of degree m. Elements are stored by integer encoding: the
/// coefficient of t^i is the i-th base-p digit. That encoding also defines the
/// total order used for every "least element" choice.
class Field {
 public:
  Field() = default;

  static Field make(std::uint64_t p, unsigned m, std::uint64_t max_order = kDefaultMaxOrder);

  std::uint64_t characteristic() const;
  unsigned degree() const;
  std::uint64_t order() const;
  /// Coefficients of the modulus, constant term first, length m+1.
  std::span<const std::uint64_t> modulus() const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(long long n) const;
  FieldElem from_index(std::uint64_t i) const;
  FieldElem from_coeffs(std::span<const std::uint64_t> c) const;
  /// The class of t (equal to 0 when m = 1, since the modulus is then t).
  FieldElem gen() const;

  bool valid() const { return d_ != nullptr; }
  const detail::FieldData* data() const { return d_.get(); }

  friend bool operator==(const Field& a, const Field& b);

  std::string name() const;

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> d_;
};

class FieldElem {
 public:
  using Ring = Field;

  FieldElem() = default;
  FieldElem(Field f, std::uint64_t index);

  const Field& field() const { return f_; }
  const Field& ring() const { return f_; }
  std::uint64_t index() const { return v_; }
  std::vector<std::uint64_t> coeffs() const;

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  /// True when the element lies in the prime field.
  bool is_prime_field() const;

  FieldElem operator-() const;
  FieldElem pow(std::uint64_t e) const;
  FieldElem inv() const;
  FieldElem frobenius() const { return pow(f_.characteristic()); }

  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b);

  /// Ascending powers of t, e.g. "2+t^2".
  std::string str() const;

 private:
  FieldElem(Field f, std::uint64_t v, int) : f_(std::move(f)), v_(v) {}
  Field f_;
  std::uint64_t v_ = 0;
};

std::uint64_t trace_to_prime(const FieldElem& x);

struct SquareClass {
  bool is_square = false;
  std::vector<FieldElem> roots;  // sorted, empty when not a square
};
SquareClass square_classify(const FieldElem& x);

struct CubeClass {
  bool is_cube = false;
  std::vector<FieldElem> roots;  // sorted, empty when not a cube
};
CubeClass cube_classify(const FieldElem& x);

std::optional<FieldElem> primitive_cube_root_of_unity(const Field& F);

/// All elements in encoding order.
std::vector<FieldElem> enumerate(const Field& F);

/// Lowest-encoded monic irreducible of degree m over F_p, constant term first.
std::vector<std::uint64_t> least_irreducible_mod_p(std::uint64_t p, unsigned m);

}  // namespace cubext
