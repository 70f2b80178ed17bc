#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cubext/canon.hpp"

namespace cubext::cli {

/// "p" or "p^m".
Field parse_field_spec(std::string_view spec, std::uint64_t max_order = kDefaultMaxOrder);

struct Node {
  enum class Kind { Int, VarX, VarT, VarBigX, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind = Kind::Int;
  std::string digits;      // Int literals and Pow exponents, leading zeros stripped
  std::size_t pos = 0;     // offset of the node's first token
  std::vector<std::shared_ptr<const Node>> kids;
};
using Ast = std::shared_ptr<const Node>;

/// Structural equality; positions are ignored.
bool same_tree(const Ast& a, const Ast& b);

/// expr := term (('+'|'-') term)*; term := unary (('*'|'/') unary)*;
/// unary := '-' unary | power; power := base ('^' uint)?;
/// base := int | 'x' | 't' | 'X' | '(' expr ')'.
Ast parse(std::string_view source);

/// Text that parses back to the same tree, with as few parentheses as possible.
std::string render(const Ast& ast);

bool mentions(const Ast& ast, Node::Kind kind);

/// Value in F_q ('x' and 'X' unbound).
FieldElem eval_fq(const Ast& ast, const Field& F);
/// Value in F_q(x) ('X' unbound).
RatFunc eval_fqx(const Ast& ast, const Field& F);

/// A cubic in X, normalised to be monic. The base is F_q(x) when 'x' occurs and F_q otherwise.
struct ParsedCubic {
  bool over_function_field = false;
  Cubic<FieldElem> fq;
  Cubic<RatFunc> fqx;
  /// The same cubic lifted to F_q(x) (equal to fqx when over_function_field).
  Cubic<RatFunc> lifted() const;
};
ParsedCubic eval_cubic(const Ast& ast, const Field& F);

}  // namespace cubext::cli
