#include "cubext/ffcubic.hpp"

#include <algorithm>

namespace cubext {

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::Irreducible: return "irreducible";
    case Shape::LinTimesQuad: return "linear*quadratic";
    case Shape::ThreeDistinct: return "three-distinct";
    case Shape::LinTimesSquare: return "linear*square";
    case Shape::Triple: return "triple";
  }
  return "?";
}

namespace {

void check_field(const Field& F, const FieldElem& a) {
  if (!(a.field() == F)) fail(Errc::FieldMismatch, "parameter is not in the given field");
}

FPoly linear(const FieldElem& r) { return FPoly(r.field(), {-r, r.field().one()}); }

// Roots with multiplicity (found among `candidates`), then the leftover factor.
DecompType witnesses(const FPoly& f, Shape shape, std::vector<FieldElem> candidates) {
  DecompType out;
  out.shape = shape;
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  FPoly rest = f;
  for (const auto& r : candidates) {
    bool used = false;
    for (;;) {
      auto [q, rem] = divmod(rest, linear(r));
      if (!rem.is_zero() || rest.degree() < 1) break;
      rest = q;
      out.factors.push_back(linear(r));
      used = true;
    }
    if (used) out.roots.push_back(r);
  }
  if (rest.degree() > 0) out.factors.push_back(rest);
  return out;
}

// Cube test of (a + delta)/2 with delta^2 = a^2 - 4, in F or in its quadratic extension.
bool half_trace_point_is_cube(const Field& F, const FieldElem& a) {
  Field B = F;
  Embedding emb = make_embedding(F, F);
  if (F.order() % 3 != 1) {
    B = Field::make(F.characteristic(), F.degree() * 2, kInternalMaxOrder);
    emb = make_embedding(F, B);
  }
  FieldElem ab = emb(a);
  auto sq = square_classify(ab * ab - B.from_int(4));
  FieldElem z = (ab + sq.roots.front()) / B.from_int(2);
  return cube_classify(z).is_cube;
}

}  // namespace

DecompType decompose_pure(const Field& F, const FieldElem& a) {
  check_field(F, a);
  if (F.characteristic() == 3) fail(Errc::WrongCharacteristic, "pure form needs characteristic != 3");
  const FPoly f(F, {-a, F.zero(), F.zero(), F.one()});
  Shape s;
  if (a.is_zero()) s = Shape::Triple;
  else if (F.order() % 3 == 1) s = a.pow((F.order() - 1) / 3).is_one() ? Shape::ThreeDistinct : Shape::Irreducible;
  else s = Shape::LinTimesQuad;
  return witnesses(f, s, s == Shape::Irreducible ? std::vector<FieldElem>{} : roots_in_field(f));
}

DecompType decompose_depressed(const Field& F, const FieldElem& a) {
  check_field(F, a);
  const std::uint64_t p = F.characteristic();
  if (p == 3) fail(Errc::WrongCharacteristic, "depressed form needs characteristic != 3");
  const FPoly f(F, {-a, F.from_int(-3), F.zero(), F.one()});
  Shape s;
  if (a == F.from_int(2) || a == F.from_int(-2)) {
    s = Shape::LinTimesSquare;
  } else if (p != 2) {
    FieldElem disc = F.from_int(-27) * (a * a - F.from_int(4));
    if (!square_classify(disc).is_square) s = Shape::LinTimesQuad;
    else s = half_trace_point_is_cube(F, a) ? Shape::ThreeDistinct : Shape::Irreducible;
  } else {
    if (trace_to_prime((a * a).inv()) != trace_to_prime(F.one())) {
      s = Shape::LinTimesQuad;
    } else {
      Field B = F;
      Embedding emb = make_embedding(F, F);
      if (F.degree() % 2) {
        B = Field::make(2, F.degree() * 2, kInternalMaxOrder);
        emb = make_embedding(F, B);
      }
      FieldElem root = quadratic_roots(emb(a), B.one()).front();
      s = cube_classify(root).is_cube ? Shape::ThreeDistinct : Shape::Irreducible;
    }
  }
  return witnesses(f, s, s == Shape::Irreducible ? std::vector<FieldElem>{} : roots_in_field(f));
}

DecompType decompose_char3(const Field& F, const FieldElem& a) {
  check_field(F, a);
  if (F.characteristic() != 3) fail(Errc::WrongCharacteristic, "char-3 form needs characteristic 3");
  const FPoly f(F, {a * a, a, F.zero(), F.one()});
  Shape s;
  if (a.is_zero()) {
    s = Shape::Triple;
  } else {
    auto sq = square_classify(-a);
    if (!sq.is_square) s = Shape::LinTimesQuad;
    else s = trace_to_prime(sq.roots.front()) != 0 ? Shape::Irreducible : Shape::ThreeDistinct;
  }
  return witnesses(f, s, s == Shape::Irreducible ? std::vector<FieldElem>{} : roots_in_field(f));
}

DecompType decompose_any(const Field& F, const FieldElem& e, const FieldElem& f, const FieldElem& g) {
  check_field(F, e);
  check_field(F, f);
  check_field(F, g);
  const Cubic<FieldElem> T{e, f, g};
  const FPoly input = cubic_poly(T);
  auto [C, M] = reduce_cubic(T);

  if (auto* red = std::get_if<Reducible<FieldElem>>(&C)) {
    auto qr = quadratic_roots(red->b, red->c);
    Shape s;
    if (qr.empty()) s = Shape::LinTimesQuad;
    else if (qr.size() == 1) s = qr.front() == red->root ? Shape::Triple : Shape::LinTimesSquare;
    else s = std::find(qr.begin(), qr.end(), red->root) != qr.end() ? Shape::LinTimesSquare : Shape::ThreeDistinct;
    qr.push_back(red->root);
    return witnesses(input, s, qr);
  }

  Shape s;
  if (auto* v = std::get_if<Pure<FieldElem>>(&C)) s = decompose_pure(F, v->a).shape;
  else if (auto* v = std::get_if<DepressedTrace<FieldElem>>(&C)) s = decompose_depressed(F, v->a).shape;
  else if (auto* v = std::get_if<Char3<FieldElem>>(&C)) s = decompose_char3(F, v->a).shape;
  else s = Shape::Triple;  // X^3 - a with Frobenius bijective: a single root of multiplicity 3

  std::vector<FieldElem> mapped;
  if (s != Shape::Irreducible) {
    for (const auto& y : roots_in_field(canonical_poly(C, F))) {
      FieldElem x = frac_apply(M, y);
      if (!input.eval(x).is_zero()) fail(Errc::InvalidArgument, "transported root does not satisfy the cubic");
      mapped.push_back(x);
    }
  }
  return witnesses(input, s, mapped);
}

DecompType brute_factor(const FPoly& cubic, std::uint64_t bound) {
  const Field& F = cubic.ring();
  if (F.order() > bound) fail(Errc::SizeExceeded, "field too large for exhaustive search");
  if (cubic.degree() != 3 || !cubic.is_monic()) fail(Errc::DegreeError, "expected a monic cubic");
  std::vector<FieldElem> roots;
  for (const auto& y : enumerate(F))
    if (cubic.eval(y).is_zero()) roots.push_back(y);
  DecompType out = witnesses(cubic, Shape::Irreducible, roots);
  std::size_t linear_count = 0;
  for (const auto& fac : out.factors) linear_count += fac.degree() == 1;
  if (roots.empty()) out.shape = Shape::Irreducible;
  else if (linear_count == 1) out.shape = Shape::LinTimesQuad;
  else if (roots.size() == 3) out.shape = Shape::ThreeDistinct;
  else if (roots.size() == 2) out.shape = Shape::LinTimesSquare;
  else out.shape = Shape::Triple;
  return out;
}

DecompType brute_factor(const Cubic<FieldElem>& cubic, std::uint64_t bound) {
  return brute_factor(cubic_poly(cubic), bound);
}

}  // namespace cubext
