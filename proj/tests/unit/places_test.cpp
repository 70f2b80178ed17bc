#include "doctest.h"

#include "cubext/places.hpp"
#include "support.hpp"

using namespace cubext;
using cubext::testing::xfunc;
using cubext::testing::xplace;
using cubext::testing::xpoly;

namespace {

Field small_field(std::uint64_t q) {
  if (q == 4) return Field::make(2, 2);
  if (q == 8) return Field::make(2, 3);
  if (q == 9) return Field::make(3, 2);
  return Field::make(q, 1);
}

}  // namespace

TEST_CASE("valuations") {
  const Field F5 = Field::make(5, 1);
  CHECK(valuation(xfunc(F5, {1, 0, 1}, {0, 1}), xplace(F5, {0, 1})) == -1);
  CHECK(valuation(xfunc(F5, {0, 1, 0, 1}), Place::infinity(F5)) == -3);
  CHECK(valuation(xfunc(F5, {-1, 0, 1}), xplace(F5, {-1, 1})) == 1);
  CHECK(valuation(RatFuncField{F5}.zero(), Place::infinity(F5)) == kInfValuation);
}

TEST_CASE("residue fields") {
  const Field F3 = Field::make(3, 1);
  const Place P = xplace(F3, {1, 0, 1});
  CHECK(P.residue().field.order() == 9);
  CHECK(map_coeffs(P.carrier(), P.residue().embed).eval(P.residue().root).is_zero());
  CHECK(xplace(Field::make(7, 1), {0, 1}).residue().field.order() == 7);
  CHECK(Place::infinity(Field::make(2, 2)).residue().field.order() == 4);
  CHECK_THROWS_AS(xplace(F3, {1, 0, 0, 1}), Error);  // x^3 + 1 = (x + 1)^3
}

TEST_CASE("reduction at a place") {
  const Field F3 = Field::make(3, 1);
  CHECK(reduce_at(xfunc(F3, {1, 1}, {2, 1}), xplace(F3, {0, 1})) == F3.from_int(2));
  const Field F5 = Field::make(5, 1);
  CHECK(reduce_at(xfunc(F5, {1, 0, 1}, {0, 0, 1}), Place::infinity(F5)) == F5.one());
  CHECK(reduce_at(xfunc(F5, {0, 1, 1}, {0, 1}), xplace(F5, {0, 1})) == F5.one());
  CHECK_THROWS_AS(reduce_at(xfunc(F5, {1}, {0, 1}), xplace(F5, {0, 1})), Error);
  CHECK(reduce_at(xfunc(F5, {1}, {0, 1}), Place::infinity(F5)).is_zero());
}

TEST_CASE("uniformizers") {
  const Field F5 = Field::make(5, 1);
  CHECK(uniformizer(xplace(F5, {-1, 1})) == xfunc(F5, {-1, 1}));
  CHECK(uniformizer(Place::infinity(F5)) == xfunc(F5, {1}, {0, 1}));
  CHECK(valuation(uniformizer(Place::infinity(F5)), Place::infinity(F5)) == 1);
  const Field F3 = Field::make(3, 1);
  const Place P = xplace(F3, {1, 0, 1});
  CHECK(valuation(uniformizer(P), P) == 1);
}

TEST_CASE("divisors") {
  const Field F5 = Field::make(5, 1);
  const Divisor d1 = divisor_of(xfunc(F5, {0, 1}));
  REQUIRE(d1.size() == 2);
  CHECK(d1[0] == std::make_pair(Place::infinity(F5), -1LL));
  CHECK(d1[1] == std::make_pair(xplace(F5, {0, 1}), 1LL));

  const Divisor d2 = divisor_of(xfunc(F5, {0, -1, 1}));
  REQUIRE(d2.size() == 3);
  CHECK(d2[0].second == -2);
  CHECK(d2[1] == std::make_pair(xplace(F5, {0, 1}), 1LL));
  CHECK(d2[2] == std::make_pair(xplace(F5, {-1, 1}), 1LL));

  const Field F3 = Field::make(3, 1);
  const Divisor d3 = divisor_of(xfunc(F3, {1, 0, 1}, {0, 0, 0, 1}));
  REQUIRE(d3.size() == 3);
  CHECK(d3[0] == std::make_pair(Place::infinity(F3), 1LL));
  CHECK(d3[1] == std::make_pair(xplace(F3, {0, 1}), -3LL));
  CHECK(d3[2] == std::make_pair(xplace(F3, {1, 0, 1}), 1LL));
  CHECK_THROWS_AS(divisor_of(RatFuncField{F3}.zero()), Error);
}

TEST_CASE("place enumeration") {
  const Field F2 = Field::make(2, 1);
  auto names = [](const std::vector<Place>& v) {
    std::vector<std::string> out;
    for (const auto& P : v) out.push_back(P.name());
    return out;
  };
  CHECK(names(places_up_to(F2, 1)) == std::vector<std::string>{"infinity", "x", "x+1"});
  CHECK(names(places_up_to(F2, 2)) == std::vector<std::string>{"infinity", "x", "x+1", "x^2+x+1"});
  CHECK(names(places_up_to(Field::make(3, 1), 1)) == std::vector<std::string>{"infinity", "x", "x+1", "x+2"});
  // Monic irreducibles of degree 3 over F_4: (4^3 - 4) / 3 = 20.
  CHECK(places_up_to(Field::make(2, 2), 3).size() == 1 + 4 + 6 + 20);
}

TEST_CASE("degree formula and product rule on random functions") {
  cubext::testing::Rng rng(3);
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    const Field F = small_field(q);
    for (int i = 0; i < 1000; ++i) {
      RatFunc a = cubext::testing::random_ratfunc(F, 6, 6, rng);
      if (a.is_zero()) continue;
      long long sum = 0;
      for (const auto& [P, v] : divisor_of(a)) {
        CHECK(valuation(a, P) == v);
        sum += v * static_cast<long long>(P.degree());
      }
      CHECK(sum == 0);
      if (i % 10) continue;
      const RatFunc b = cubext::testing::random_ratfunc(F, 4, 4, rng);
      if (b.is_zero()) continue;
      for (const auto& P : places_up_to(F, 2)) {
        CHECK(valuation(a * b, P) == valuation(a, P) + valuation(b, P));
        CHECK(valuation(a + b, P) >= std::min(valuation(a, P), valuation(b, P)));
        if (valuation(a, P) >= 0 && valuation(b, P) >= 0) {
          CHECK(reduce_at(a * b, P) == reduce_at(a, P) * reduce_at(b, P));
          CHECK(reduce_at(a + b, P) == reduce_at(a, P) + reduce_at(b, P));
        }
      }
    }
  }
}
