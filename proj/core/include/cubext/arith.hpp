#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cubext/canon.hpp"
#include "cubext/ffcubic.hpp"
#include "cubext/places.hpp"

namespace cubext {

/// Multiset of (e, f) pairs over a place of K, sorted by e descending then f ascending.
struct Signature {
  std::vector<std::pair<int, int>> parts;

  static Signature of(std::vector<std::pair<int, int>> parts);
  int degree() const;
  /// "(2,1;1,1)"
  std::string str() const;
  friend bool operator==(const Signature&, const Signature&) = default;
};

namespace sig {
Signature fully_ramified();   // (3,1)
Signature inert();            // (1,3)
Signature split();            // (1,1;1,1;1,1)
Signature lin_quad();         // (1,1;1,2)
Signature partial();          // (2,1;1,1)
}  // namespace sig

enum class Behavior { Split, Inert, Ramified };
std::string behavior_name(Behavior b);

struct Certified {
  Place place;  // a ramified place
};
struct ConstantDetected {
  std::optional<FieldElem> u;  // the constant non-cube for pure forms
};
struct Uncertified {};
using Certificate = std::variant<Certified, ConstantDetected, Uncertified>;

/// A separable cubic extension of F_q(x) given by an irreducible canonical form.
class Extension {
 public:
  /// Checks irreducibility and the characteristic, then decides the constant-field question.
  static Extension make(const CanonicalCubic<RatFunc>& form);
  /// No checks; the certificate stays Uncertified.
  static Extension unchecked(const CanonicalCubic<RatFunc>& form);

  const CanonicalCubic<RatFunc>& form() const { return form_; }
  const Field& base() const { return base_; }
  std::uint64_t q() const { return base_.order(); }
  const Certificate& certificate() const { return cert_; }

 private:
  CanonicalCubic<RatFunc> form_;
  Field base_;
  Certificate cert_ = Uncertified{};
};

struct RamifiedPlace {
  Place place;
  long long d = 0;  // differential exponent
};

struct RamificationReport {
  std::vector<RamifiedPlace> fully_ramified;
  std::vector<RamifiedPlace> partially_ramified;
  /// The family-specific sets: for DepressedTrace S is the partial set; for Char3
  /// S is the fully ramified set and T the partial one.
  std::vector<RamifiedPlace> S, T;
  bool empty() const { return fully_ramified.empty() && partially_ramified.empty(); }
};

/// (a / c^3, c) with v_P(a / c^3) in {0, 1, 2}.
std::pair<RatFunc, RatFunc> pure_local_form(const RatFunc& a, const Place& P);
Signature signature_pure(const RatFunc& a, const Place& P);

/// Behaviour of P in the quadratic resolvent field of X^3 - 3X - a.
Behavior resolvent_place_behavior(const RatFunc& a, const Place& P);
/// Characteristic 2: (u - (w^2 + w), w) with the valuation at P pushed up as far as possible.
std::pair<RatFunc, RatFunc> as_local_reduce(const RatFunc& u, const Place& P);
Signature signature_depressed(const RatFunc& a, const Place& P);

/// Terminal parameter of the char-3 local reduction at P.
RatFunc char3_local_form(const RatFunc& a, const Place& P);
Signature signature_char3(const RatFunc& a, const Place& P);

RamificationReport ramification_report(const Extension& E);

struct ConstantResult {
  enum class Kind { Constant, Geometric, Unknown } kind = Kind::Unknown;
  std::optional<FieldElem> u;
  std::optional<Place> witness;
};
ConstantResult is_constant_extension(const Extension& E);

long long genus(const Extension& E);
Signature signature(const Extension& E, const Place& P);

}  // namespace cubext
