#include "cubext/cli/parse.hpp"

#include <cctype>
#include <charconv>

namespace cubext::cli {

namespace {

constexpr std::uint64_t kMaxExponent = 4096;

[[noreturn]] void syntax(std::size_t pos, const std::string& what) {
  fail(Errc::SyntaxError, what + " at position " + std::to_string(pos));
}

std::uint64_t parse_uint(std::string_view s, std::size_t pos) {
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) syntax(pos, "malformed integer '" + std::string(s) + "'");
  return v;
}

std::string strip_zeros(std::string_view d) {
  std::size_t i = 0;
  while (i + 1 < d.size() && d[i] == '0') ++i;
  return std::string(d.substr(i));
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Ast run() {
    skip();
    if (i_ >= s_.size()) syntax(i_, "empty expression");
    Ast e = expr();
    skip();
    if (i_ < s_.size()) syntax(i_, std::string("unexpected '") + s_[i_] + "'");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }

  static Ast make(Node::Kind k, std::size_t pos, std::vector<Ast> kids, std::string digits = {}) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->pos = pos;
    n->kids = std::move(kids);
    n->digits = std::move(digits);
    return n;
  }

  Ast expr() {
    Ast left = term();
    for (;;) {
      if (peek('+') || peek('-')) {
        const char op = s_[i_];
        ++i_;
        Ast right = term();
        left = make(op == '+' ? Node::Kind::Add : Node::Kind::Sub, left->pos, {left, right});
      } else {
        return left;
      }
    }
  }

  Ast term() {
    Ast left = unary();
    for (;;) {
      if (peek('*') || peek('/')) {
        const char op = s_[i_];
        ++i_;
        Ast right = unary();
        left = make(op == '*' ? Node::Kind::Mul : Node::Kind::Div, left->pos, {left, right});
      } else {
        return left;
      }
    }
  }

  Ast unary() {
    if (peek('-')) {
      const std::size_t pos = i_++;
      return make(Node::Kind::Neg, pos, {unary()});
    }
    return power();
  }

  Ast power() {
    Ast b = base();
    if (peek('^')) {
      ++i_;
      skip();
      const std::size_t pos = i_;
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      if (j == i_) syntax(pos, "exponent must be a nonnegative integer literal");
      std::string digits = strip_zeros(s_.substr(i_, j - i_));
      i_ = j;
      b = make(Node::Kind::Pow, b->pos, {b}, std::move(digits));
    }
    return b;
  }

  Ast base() {
    skip();
    if (i_ >= s_.size()) syntax(i_, "unexpected end of input");
    const std::size_t pos = i_;
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      std::string digits = strip_zeros(s_.substr(i_, j - i_));
      i_ = j;
      return make(Node::Kind::Int, pos, {}, std::move(digits));
    }
    if (c == 'x' || c == 't' || c == 'X') {
      ++i_;
      return make(c == 'x' ? Node::Kind::VarX : c == 't' ? Node::Kind::VarT : Node::Kind::VarBigX, pos, {});
    }
    if (c == '(') {
      ++i_;
      Ast e = expr();
      if (!peek(')')) syntax(i_, "expected ')'");
      ++i_;
      return e;
    }
    syntax(pos, std::string("unexpected '") + c + "'");
  }
};

int prec(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Add:
    case Node::Kind::Sub: return 1;
    case Node::Kind::Mul:
    case Node::Kind::Div: return 2;
    case Node::Kind::Neg: return 3;
    case Node::Kind::Pow: return 4;
    default: return 5;
  }
}

void render_into(const Ast& a, int min_prec, std::string& out) {
  const bool paren = prec(*a) < min_prec;
  if (paren) out += '(';
  switch (a->kind) {
    case Node::Kind::Int: out += a->digits; break;
    case Node::Kind::VarX: out += 'x'; break;
    case Node::Kind::VarT: out += 't'; break;
    case Node::Kind::VarBigX: out += 'X'; break;
    case Node::Kind::Neg:
      out += '-';
      render_into(a->kids[0], 3, out);
      break;
    case Node::Kind::Add:
    case Node::Kind::Sub:
      render_into(a->kids[0], 1, out);
      out += a->kind == Node::Kind::Add ? '+' : '-';
      render_into(a->kids[1], 2, out);
      break;
    case Node::Kind::Mul:
    case Node::Kind::Div:
      render_into(a->kids[0], 2, out);
      out += a->kind == Node::Kind::Mul ? '*' : '/';
      render_into(a->kids[1], 3, out);
      break;
    case Node::Kind::Pow:
      render_into(a->kids[0], 5, out);
      out += '^';
      out += a->digits;
      break;
  }
  if (paren) out += ')';
}

FieldElem int_mod(const std::string& digits, const Field& F) {
  const std::uint64_t p = F.characteristic();
  std::uint64_t r = 0;
  for (char c : digits) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * 10 + (c - '0')) % p);
  return F.from_index(r);
}

// Every mode evaluates into polynomials in X over F_q(x); the callers narrow the result.
KPoly eval_poly(const Ast& a, const Field& F) {
  const RatFuncField K{F};
  switch (a->kind) {
    case Node::Kind::Int: return KPoly::constant(RatFunc::constant(int_mod(a->digits, F)));
    case Node::Kind::VarX: return KPoly::constant(K.x());
    case Node::Kind::VarT:
      if (F.degree() == 1)
        fail(Errc::UnboundSymbol, "'t' needs a field p^m with m > 1 (position " + std::to_string(a->pos) + ")");
      return KPoly::constant(RatFunc::constant(F.gen()));
    case Node::Kind::VarBigX: return KPoly::var(K);
    case Node::Kind::Neg: return -eval_poly(a->kids[0], F);
    case Node::Kind::Add: return eval_poly(a->kids[0], F) + eval_poly(a->kids[1], F);
    case Node::Kind::Sub: return eval_poly(a->kids[0], F) - eval_poly(a->kids[1], F);
    case Node::Kind::Mul: return eval_poly(a->kids[0], F) * eval_poly(a->kids[1], F);
    case Node::Kind::Div: {
      const KPoly num = eval_poly(a->kids[0], F);
      const KPoly den = eval_poly(a->kids[1], F);
      if (den.degree() > 0)
        fail(Errc::DegreeError, "division by an expression in X (position " + std::to_string(a->kids[1]->pos) + ")");
      if (den.is_zero()) fail(Errc::DivisionByZero, "division by zero (position " + std::to_string(a->kids[1]->pos) + ")");
      return den.lead().inv() * num;
    }
    case Node::Kind::Pow: {
      const std::uint64_t e = parse_uint(a->digits, a->pos);
      if (e > kMaxExponent) fail(Errc::SizeExceeded, "exponent above " + std::to_string(kMaxExponent));
      return eval_poly(a->kids[0], F).pow(e);
    }
  }
  fail(Errc::SyntaxError, "malformed tree");
}

const Node* find_kind(const Ast& a, Node::Kind k) {
  if (a->kind == k) return a.get();
  for (const auto& c : a->kids)
    if (const Node* n = find_kind(c, k)) return n;
  return nullptr;
}

void forbid(const Ast& a, Node::Kind k, const char* name, const char* mode) {
  if (const Node* n = find_kind(a, k))
    fail(Errc::UnboundSymbol,
         std::string("'") + name + "' is not bound " + mode + " (position " + std::to_string(n->pos) + ")");
}

}  // namespace

Field parse_field_spec(std::string_view spec, std::uint64_t max_order) {
  const auto caret = spec.find('^');
  auto num = [&](std::string_view s) -> std::uint64_t {
    if (s.empty()) fail(Errc::SyntaxError, "field spec must look like p or p^m");
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) fail(Errc::SyntaxError, "field spec must look like p or p^m");
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc()) fail(Errc::SizeExceeded, "field spec number out of range");
    return v;
  };
  const std::uint64_t p = num(spec.substr(0, caret));
  const std::uint64_t m = caret == std::string_view::npos ? 1 : num(spec.substr(caret + 1));
  if (m == 0) fail(Errc::InvalidArgument, "extension degree must be at least 1");
  if (m > 64) fail(Errc::SizeExceeded, "extension degree too large");
  return Field::make(p, static_cast<unsigned>(m), max_order);
}

bool same_tree(const Ast& a, const Ast& b) {
  if (a->kind != b->kind || a->digits != b->digits || a->kids.size() != b->kids.size()) return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!same_tree(a->kids[i], b->kids[i])) return false;
  return true;
}

Ast parse(std::string_view source) { return Parser(source).run(); }

std::string render(const Ast& ast) {
  std::string out;
  render_into(ast, 0, out);
  return out;
}

bool mentions(const Ast& ast, Node::Kind kind) { return find_kind(ast, kind) != nullptr; }

FieldElem eval_fq(const Ast& ast, const Field& F) {
  forbid(ast, Node::Kind::VarX, "x", "over F_q");
  forbid(ast, Node::Kind::VarBigX, "X", "in a field element");
  const KPoly v = eval_poly(ast, F);
  return v.is_zero() ? F.zero() : v.coeff(0).constant_value();
}

RatFunc eval_fqx(const Ast& ast, const Field& F) {
  forbid(ast, Node::Kind::VarBigX, "X", "in a rational function");
  const KPoly v = eval_poly(ast, F);
  return v.is_zero() ? RatFuncField{F}.zero() : v.coeff(0);
}

Cubic<RatFunc> ParsedCubic::lifted() const {
  if (over_function_field) return fqx;
  return {RatFunc::constant(fq.e), RatFunc::constant(fq.f), RatFunc::constant(fq.g)};
}

ParsedCubic eval_cubic(const Ast& ast, const Field& F) {
  KPoly v = eval_poly(ast, F);
  if (v.degree() != 3) fail(Errc::DegreeError, "expected a cubic in X, got degree " + std::to_string(v.degree()));
  v = v.monic();
  ParsedCubic out;
  out.over_function_field = mentions(ast, Node::Kind::VarX);
  out.fqx = {v.coeff(2), v.coeff(1), v.coeff(0)};
  if (!out.over_function_field)
    out.fq = {out.fqx.e.constant_value(), out.fqx.f.constant_value(), out.fqx.g.constant_value()};
  return out;
}

}  // namespace cubext::cli
