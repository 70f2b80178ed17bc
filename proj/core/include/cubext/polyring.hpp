#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cubext/ratfunc.hpp"

namespace cubext {

/// Roots of X^2 + bX + c in the field of b and c, sorted, without repetition.
std::vector<FieldElem> quadratic_roots(const FieldElem& b, const FieldElem& c);

/// Solutions of Y^2 + Y = u in characteristic 2 (none or two).
std::vector<FieldElem> solve_artin_schreier2(const FieldElem& u);

using Factorization = std::vector<std::pair<FPoly, int>>;

/// Monic irreducible factors with multiplicity, sorted by degree then encoding.
Factorization factor_fq(const FPoly& f);

bool is_irreducible(const FPoly& f);

/// Distinct roots in the coefficient field, sorted.
std::vector<FieldElem> roots_in_field(const FPoly& f);

/// Lowest-encoded monic irreducible of degree d over F.
FPoly deterministic_irreducible(const Field& F, unsigned d);

/// a^e mod m.
FPoly powmod(FPoly a, std::uint64_t e, const FPoly& m);

/// Embedding of a subfield: t maps to the least root of the source modulus.
struct Embedding {
  Field from, to;
  FieldElem gen_image;
  FieldElem operator()(const FieldElem& a) const;
};
Embedding make_embedding(const Field& from, const Field& to);

/// Map a polynomial's coefficients through an embedding.
FPoly map_coeffs(const FPoly& f, const Embedding& e);

/// Distinct roots in F_q(x) of a nonzero polynomial over F_q(x), sorted by
/// ratfunc_less. Candidate numerators and denominators come from the divisors
/// of the extreme coefficients, pruned by the Newton polygon at every prime.
/// Throws SizeExceeded when more than `max_candidates` candidates survive.
std::vector<RatFunc> rational_roots(const KPoly& f, std::size_t max_candidates = 2'000'000);

/// Multiplicity of the monic irreducible pi in the nonzero polynomial f.
int multiplicity(FPoly f, const FPoly& pi);

}  // namespace cubext
