#include "cubext/cli/commands.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cubext/arith.hpp"
#include "cubext/cli/parse.hpp"
#include "cubext/ffcubic.hpp"
#include "json.hpp"

namespace cubext::cli {

using json = nlohmann::ordered_json;

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::SyntaxError:
    case Errc::DegreeError:
    case Errc::UnboundSymbol:
    case Errc::NotPrime:
    case Errc::InvalidArgument: return kUsage;
    case Errc::SizeExceeded: return kSize;
    default: return kMath;
  }
}

namespace {

std::string text(const FieldElem& a) { return a.str(); }
std::string text(const RatFunc& a) { return a.str(); }

// A top-level sum needs parentheses when it becomes a coefficient.
bool compound(const std::string& s) {
  int depth = 0;
  for (char c : s) {
    if (c == '(') ++depth;
    else if (c == ')') --depth;
    else if (depth == 0 && (c == '+' || c == '-')) return true;
  }
  return false;
}

std::string kpoly_text(const KPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    const RatFunc& c = f.coeffs()[k];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    std::string term;
    if (k == 0) term = compound(cs) && !out.empty() ? "(" + cs + ")" : cs;
    else {
      if (!c.is_one()) term = (compound(cs) || cs.find('/') != std::string::npos ? "(" + cs + ")" : cs) + "*";
      term += k == 1 ? "X" : "X^" + std::to_string(k);
    }
    if (!out.empty()) out += '+';
    out += term;
  }
  return out;
}

std::string poly_text(const FPoly& f) { return to_string(f, 'X'); }
std::string poly_text(const KPoly& f) { return kpoly_text(f); }

template <class E>
json form_json(const CanonicalCubic<E>& C) {
  json j;
  j["form"] = form_name(C);
  std::visit(
      [&](const auto& v) {
        if constexpr (requires { v.root; }) {
          j["root"] = text(v.root);
          j["b"] = text(v.b);
          j["c"] = text(v.c);
        } else {
          j["a"] = text(v.a);
        }
      },
      C);
  return j;
}

template <class E>
json map_json(const FracLinear<E>& M) {
  return json{{"m11", text(M.m11)}, {"m10", text(M.m10)}, {"m01", text(M.m01)}, {"m00", text(M.m00)}};
}

json place_json(const Place& P, long long d) { return json{{"place", P.name()}, {"d", d}}; }

json ramified_json(const std::vector<RamifiedPlace>& v) {
  json arr = json::array();
  for (const auto& rp : v) arr.push_back(place_json(rp.place, rp.d));
  return arr;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Isomorphic: return "isomorphic";
    case Verdict::NotIsomorphic: return "not-isomorphic";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

// ---- classify / factor -------------------------------------------------

template <class E>
json classify(const Cubic<E>& T) {
  auto [C, M] = reduce_cubic(T);
  json j = form_json(C);
  j["map"] = map_json(M);
  return j;
}

json factor_fq(const Field& F, const Cubic<FieldElem>& T) {
  const DecompType d = decompose_any(F, T.e, T.f, T.g);
  json roots = json::array(), factors = json::array();
  for (const auto& r : d.roots) roots.push_back(text(r));
  for (const auto& f : d.factors) factors.push_back(poly_text(f));
  return json{{"shape", shape_name(d.shape)}, {"roots", roots}, {"factors", factors}};
}

json factor_fqx(const Cubic<RatFunc>& T) {
  const KPoly f = cubic_poly(T);
  const RatFuncField K = T.e.ring();
  std::vector<RatFunc> roots = rational_roots(f);
  std::vector<KPoly> factors;
  KPoly rest = f;
  std::vector<RatFunc> used;
  for (const auto& r : roots) {
    const KPoly lin(K, {-r, K.one()});
    bool any = false;
    for (;;) {
      auto [q, rem] = divmod(rest, lin);
      if (!rem.is_zero() || rest.degree() < 1) break;
      rest = q;
      factors.push_back(lin);
      any = true;
    }
    if (any) used.push_back(r);
  }
  if (rest.degree() > 0) factors.push_back(rest);
  std::size_t linear = 0;
  for (const auto& p : factors) linear += p.degree() == 1;
  Shape s;
  if (used.empty()) s = Shape::Irreducible;
  else if (linear == 1) s = Shape::LinTimesQuad;
  else if (used.size() == 3) s = Shape::ThreeDistinct;
  else if (used.size() == 2) s = Shape::LinTimesSquare;
  else s = Shape::Triple;
  json jr = json::array(), jf = json::array();
  for (const auto& r : used) jr.push_back(text(r));
  for (const auto& p : factors) jf.push_back(poly_text(p));
  return json{{"shape", shape_name(s)}, {"roots", jr}, {"factors", jf}};
}

// ---- isom --------------------------------------------------------------

template <class E>
void require_separable_irreducible_shape(const CanonicalCubic<E>& C) {
  if (std::holds_alternative<Reducible<E>>(C)) fail(Errc::ReducibleInput, "cubic is reducible");
  if (std::holds_alternative<InseparablePure<E>>(C)) fail(Errc::Inseparable, "X^3 - a in characteristic 3 is inseparable");
}

template <class E>
json pure_witness(const PureIsom<E>& r) {
  json w;
  w["j"] = r.j;
  w["c"] = r.c ? json(text(*r.c)) : json(nullptr);
  return w;
}

template <class E>
json isom_forms(const CanonicalCubic<E>& C1, const CanonicalCubic<E>& C2, unsigned bound) {
  require_separable_irreducible_shape(C1);
  require_separable_irreducible_shape(C2);
  json j;
  j["verdict"] = "unknown";
  j["family"] = "";
  j["forms"] = json::array({form_json(C1), form_json(C2)});
  json witness = nullptr;
  std::string reason;
  std::optional<Place> separating;

  auto* p1 = std::get_if<Pure<E>>(&C1);
  auto* p2 = std::get_if<Pure<E>>(&C2);
  auto* d1 = std::get_if<DepressedTrace<E>>(&C1);
  auto* d2 = std::get_if<DepressedTrace<E>>(&C2);
  auto* c1 = std::get_if<Char3<E>>(&C1);
  auto* c2 = std::get_if<Char3<E>>(&C2);

  auto pure_verdict = [&](const PureIsom<E>& r) {
    j["verdict"] = r.isomorphic ? "isomorphic" : "not-isomorphic";
    if (r.isomorphic) witness = pure_witness(r);
    else reason = "no c with a1 = c^3 a2^j";
  };

  if (p1 && p2) {
    j["family"] = "pure";
    pure_verdict(isom_pure(p1->a, p2->a));
  } else if (d1 && d2) {
    j["family"] = "depressed";
    const DepressedIsom<E> r = isom_depressed(d1->a, d2->a, bound);
    j["verdict"] = verdict_name(r.verdict);
    if (r.verdict == Verdict::Isomorphic) {
      if (r.via_pure) witness = json{{"via_pure", pure_witness(*r.via_pure)}};
      else witness = json{{"alpha", text(*r.alpha)}, {"beta", text(*r.beta)}};
    }
    reason = r.reason;
    separating = r.separating;
  } else if ((p1 && d2) || (d1 && p2)) {
    j["family"] = "mixed";
    const E& da = d1 ? d1->a : d2->a;
    const E& pa = p1 ? p1->a : p2->a;
    if (has_rational_root(CanonicalCubic<E>{DepressedTrace<E>{da}}) || has_rational_root(CanonicalCubic<E>{Pure<E>{pa}}))
      fail(Errc::ReducibleInput, "reducible input");
    auto c = purely_cubic_root(da);
    if (!c) {
      j["verdict"] = "not-isomorphic";
      reason = "only one of the two extensions is purely cubic";
    } else {
      pure_verdict(d1 ? isom_pure(*c, pa) : isom_pure(pa, *c));
    }
  } else if (c1 && c2) {
    j["family"] = "char3";
    const Char3Isom<E> r = isom_char3(c1->a, c2->a, bound);
    j["verdict"] = verdict_name(r.verdict);
    if (r.verdict == Verdict::Isomorphic) witness = json{{"j", r.j}, {"w", text(*r.w)}};
    reason = r.reason;
    separating = r.separating;
  } else {
    fail(Errc::WrongCharacteristic, "forms from different characteristics");
  }
  j["witness"] = witness;
  j["reason"] = reason;
  j["separating_place"] = separating ? json(separating->name()) : json(nullptr);
  return j;
}

// ---- galois ------------------------------------------------------------

std::vector<FieldElem> shanks_candidates(const FieldElem& a) {
  const Field& F = a.field();
  if (a == F.from_int(2)) return {};
  return quadratic_roots(F.from_int(3), F.from_int(9) * (a + F.one()) / (a - F.from_int(2)));
}

std::vector<RatFunc> shanks_candidates(const RatFunc& a) {
  const RatFuncField K = a.ring();
  if (a == K.from_int(2)) return {};
  const RatFunc c = K.from_int(9) * (a + K.one()) / (a - K.from_int(2));
  if (a.base().characteristic() == 2) {
    auto s = solve_artin_schreier_global(c);
    if (!s) return {};
    return {*s, *s + K.one()};
  }
  auto sq = global_square_test(K.from_int(9) - K.from_int(4) * c);
  if (!sq) return {};
  const RatFunc half = K.from_int(2).inv();
  std::vector<RatFunc> out{(K.from_int(-3) + *sq) * half, (K.from_int(-3) - *sq) * half};
  std::sort(out.begin(), out.end(), ratfunc_less);
  return out;
}

template <class E>
json galois(const Cubic<E>& T) {
  auto [C, M] = reduce_cubic(T);
  if (std::holds_alternative<Reducible<E>>(C)) fail(Errc::ReducibleInput, "cubic is reducible");
  json j = form_json(C);
  const bool g = is_galois(C);
  j["galois"] = g;
  json shanks = nullptr, as = nullptr;
  if (g) {
    if (auto* d = std::get_if<DepressedTrace<E>>(&C)) {
      for (const auto& s : shanks_candidates(d->a)) {
        try {
          const auto [param, W] = shanks_to_canonical(s);
          shanks = json{{"parameter", text(s)}, {"roundtrip", param == d->a}};
          break;
        } catch (const Error& e) {
          if (e.code() != Errc::DegenerateParameter) throw;
        }
      }
    } else if (auto* c = std::get_if<Char3<E>>(&C)) {
      if (auto f = artin_schreier_normalize(c->a)) as = json{{"ahat", text(f->ahat)}};
    }
  }
  j["shanks"] = shanks;
  j["artin_schreier"] = as;
  return j;
}

// ---- function-field commands ---------------------------------------------

Extension extension_of(const Cubic<RatFunc>& T) { return Extension::make(reduce_cubic(T).first); }

json splitting(const Cubic<RatFunc>& T, unsigned max_degree) {
  const Extension E = extension_of(T);
  json j = form_json(E.form());
  json rows = json::array();
  for (const auto& P : places_up_to(E.base(), max_degree))
    rows.push_back(json{{"place", P.name()}, {"degree", P.degree()}, {"signature", signature(E, P).str()}});
  j["places"] = rows;
  return j;
}

json genus_cmd(const Cubic<RatFunc>& T) {
  const Extension E = extension_of(T);
  const long long g = genus(E);
  const RamificationReport R = ramification_report(E);
  return json{{"genus", g},
              {"fully_ramified", ramified_json(R.fully_ramified)},
              {"partially_ramified", ramified_json(R.partially_ramified)},
              {"S", ramified_json(R.S)},
              {"T", ramified_json(R.T)}};
}

json constant_cmd(const Cubic<RatFunc>& T) {
  const Extension E = extension_of(T);
  const ConstantResult r = is_constant_extension(E);
  json j = form_json(E.form());
  j["kind"] = r.kind == ConstantResult::Kind::Constant    ? "constant"
              : r.kind == ConstantResult::Kind::Geometric ? "geometric"
                                                          : "unknown";
  j["u"] = r.u ? json(text(*r.u)) : json(nullptr);
  j["witness"] = r.witness ? json(r.witness->name()) : json(nullptr);
  return j;
}

// ---- text rendering ------------------------------------------------------

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void text_value(std::ostringstream& os, const std::string& key, const json& v, const std::string& indent) {
  if (v.is_object()) {
    os << indent << key << ":\n";
    for (const auto& [k, x] : v.items()) text_value(os, k, x, indent + "  ");
  } else if (v.is_array()) {
    const bool table = !v.empty() && v.front().is_object();
    if (!table) {
      os << indent << key << ":";
      for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : " ") << scalar_text(v[i]);
      os << "\n";
      return;
    }
    os << indent << key << ":\n";
    std::vector<std::string> cols;
    for (const auto& [k, x] : v.front().items()) cols.push_back(k);
    std::vector<std::size_t> width(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      width[c] = cols[c].size();
      for (const auto& row : v) width[c] = std::max(width[c], scalar_text(row.value(cols[c], json())).size());
    }
    auto line = [&](const std::function<std::string(std::size_t)>& cell) {
      std::string s = indent + "  ";
      for (std::size_t c = 0; c < cols.size(); ++c) {
        std::string x = cell(c);
        s += x;
        if (c + 1 < cols.size()) s += std::string(width[c] - x.size() + 2, ' ');
      }
      os << s << "\n";
    };
    line([&](std::size_t c) { return cols[c]; });
    for (const auto& row : v) line([&](std::size_t c) { return scalar_text(row.value(cols[c], json())); });
  } else {
    os << indent << key << ": " << scalar_text(v) << "\n";
  }
}

std::string render_text(const json& result) {
  std::ostringstream os;
  for (const auto& [k, v] : result.items()) text_value(os, k, v, "");
  return os.str();
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& argv) {
  const bool json_mode = std::find(argv.begin(), argv.end(), "--json") != argv.end();
  CommandResult res;
  auto error_out = [&](const std::string& code, const std::string& msg, int exit_code) {
    res.exit_code = exit_code;
    res.out.clear();
    if (json_mode) {
      json e{{"error", {{"code", code}, {"message", msg}, {"exit", exit_code}}}};
      res.err = e.dump() + "\n";
    } else {
      res.err = "error: " + code + ": " + msg + "\n";
    }
  };

  CLI::App app{"Cubic extensions over finite fields and F_q(x)", "cubext"};
  std::string field_spec;
  bool json_flag = false;
  unsigned max_degree = 3, bound = 6;
  std::string expr1, expr2;
  app.add_option("--field", field_spec, "Field of constants: p or p^m")->required();
  app.add_flag("--json", json_flag, "Emit JSON");
  app.add_option("--max-degree", max_degree, "Largest place degree for splitting tables")->check(CLI::Range(1u, 16u));
  app.add_option("--bound", bound, "Place-degree bound for isomorphism separation")->check(CLI::Range(0u, 64u));
  app.require_subcommand(1);
  app.fallthrough();

  struct Sub {
    const char* name;
    const char* help;
    int arity;
  };
  const Sub subs[] = {
      {"classify", "Reduce a cubic to its canonical form", 1},
      {"factor", "Decomposition type with witnesses", 1},
      {"isom", "Decide whether two cubics define isomorphic extensions", 2},
      {"galois", "Galois test with Shanks or Artin-Schreier parameters", 1},
      {"splitting", "Signatures at all places up to --max-degree", 1},
      {"genus", "Genus and ramification report", 1},
      {"constant", "Constant versus geometric extension", 1},
  };
  for (const auto& s : subs) {
    CLI::App* sc = app.add_subcommand(s.name, s.help);
    sc->fallthrough();
    sc->add_option("cubic", expr1, "Cubic in X")->required();
    if (s.arity == 2) sc->add_option("second", expr2, "Second cubic in X")->required();
  }

  std::vector<std::string> args(argv.begin(), argv.end());
  if (args.empty()) args.push_back("cubext");
  std::vector<char*> cargv;
  for (auto& a : args) cargv.push_back(a.data());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    error_out("UsageError", e.what(), kUsage);
    return res;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    const Field F = parse_field_spec(field_spec);
    const Ast ast1 = parse(expr1);
    const ParsedCubic c1 = eval_cubic(ast1, F);
    json input;
    input["field"] = F.name();
    json result;
    if (cmd == "isom") {
      const Ast ast2 = parse(expr2);
      const ParsedCubic c2 = eval_cubic(ast2, F);
      input["expressions"] = json::array({expr1, expr2});
      input["bound"] = bound;
      if (c1.over_function_field || c2.over_function_field)
        result = isom_forms(reduce_cubic(c1.lifted()).first, reduce_cubic(c2.lifted()).first, bound);
      else
        result = isom_forms(reduce_cubic(c1.fq).first, reduce_cubic(c2.fq).first, bound);
    } else {
      input["expression"] = expr1;
      if (cmd == "classify") {
        result = c1.over_function_field ? classify(c1.fqx) : classify(c1.fq);
      } else if (cmd == "factor") {
        result = c1.over_function_field ? factor_fqx(c1.fqx) : factor_fq(F, c1.fq);
      } else if (cmd == "galois") {
        result = c1.over_function_field ? galois(c1.fqx) : galois(c1.fq);
      } else if (cmd == "splitting") {
        input["max_degree"] = max_degree;
        result = splitting(c1.lifted(), max_degree);
      } else if (cmd == "genus") {
        result = genus_cmd(c1.lifted());
      } else {
        result = constant_cmd(c1.lifted());
      }
    }
    if (json_mode) {
      json doc{{"command", cmd}, {"input", input}, {"result", result}};
      res.out = doc.dump(2) + "\n";
    } else {
      res.out = render_text(result);
    }
  } catch (const Error& e) {
    error_out(std::string(errc_name(e.code())), e.what(), exit_code_for(e.code()));
  }
  return res;
}

}  // namespace cubext::cli
