#include "doctest.h"

#include <fstream>

#include "cubext/cli/commands.hpp"
#include "cubext/cli/parse.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace cubext;
using namespace cubext::cli;

namespace {

Errc code_of(const std::string& expr, const Field& F) {
  try {
    eval_cubic(parse(expr), F);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidArgument;
}

CommandResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "cubext");
  return run_command(args);
}

}  // namespace

TEST_CASE("field specs") {
  CHECK(parse_field_spec("7").order() == 7);
  CHECK(parse_field_spec("2^3").order() == 8);
  CHECK_THROWS_AS(parse_field_spec("6"), Error);
  CHECK_THROWS_AS(parse_field_spec("p^2"), Error);
  CHECK_THROWS_AS(parse_field_spec("2^0"), Error);
  CHECK_THROWS_AS(parse_field_spec("2^40"), Error);
}

TEST_CASE("cubic expressions") {
  const Field F5 = Field::make(5, 1);
  const ParsedCubic c = eval_cubic(parse("X^3 - 3*X - (x^2+1)/x"), F5);
  CHECK(c.over_function_field);
  CHECK(c.fqx.e.is_zero());
  CHECK(c.fqx.f == RatFuncField{F5}.from_int(-3));
  CHECK(c.fqx.g == -cubext::testing::xfunc(F5, {1, 0, 1}, {0, 1}));

  const Field F4 = Field::make(2, 2);
  const ParsedCubic p = eval_cubic(parse("X^3 - t"), F4);
  CHECK_FALSE(p.over_function_field);
  CHECK(p.fq.g == F4.gen());  // -t = t in characteristic 2
  CHECK(std::holds_alternative<Pure<FieldElem>>(reduce_cubic(p.fq).first));

  CHECK(code_of("X^2 - 1", F5) == Errc::DegreeError);
  CHECK(code_of("X^3 + t", F5) == Errc::UnboundSymbol);
  CHECK(code_of("X^3 + (x", F5) == Errc::SyntaxError);
  CHECK(code_of("X^3 + 1/X", F5) == Errc::DegreeError);
  CHECK(code_of("X^3 + 1/(x-x)", F5) == Errc::DivisionByZero);
  CHECK(code_of("X^3 + x^99999", F5) == Errc::SizeExceeded);
  CHECK(code_of("X^3 + 2^x", F5) == Errc::SyntaxError);
  // Leading coefficient is normalised away.
  const ParsedCubic m = eval_cubic(parse("2*X^3 + 4"), F5);
  CHECK(m.fq.g == F5.from_int(2));
  CHECK(code_of("5*X^3 + X", F5) == Errc::DegreeError);
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse("X^3 + * 2");
    FAIL("expected a syntax error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SyntaxError);
    CHECK(std::string(e.what()).find("position 6") != std::string::npos);
  }
}

TEST_CASE("render then parse gives the same tree on the corpus") {
  std::ifstream in(CUBEXT_TEST_DATA "/roundtrip.txt");
  REQUIRE(in);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++n;
    CAPTURE(line);
    const Ast a = parse(line);
    const std::string r = render(a);
    const Ast b = parse(r);
    CHECK(same_tree(a, b));
    CHECK(render(b) == r);
  }
  CHECK(n == 200);
}

TEST_CASE("command exit codes") {
  CHECK(run({"--field", "7", "classify", "X^3+X^2+1"}).exit_code == kOk);
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--field", "5", "factor", "X^2-1"},
           {"--field", "6", "factor", "X^3-1"},
           {"--field", "5", "classify"},
           {"--field", "5", "bogus", "X^3"},
           {"classify", "X^3-x"},
           {"--field", "5", "genus", "X^3-t"}}) {
    const CommandResult r = run(args);
    CHECK(r.exit_code == kUsage);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
  const CommandResult red = run({"--json", "--field", "5", "genus", "X^3-x^3"});
  CHECK(red.exit_code == kMath);
  CHECK(red.out.empty());
  const auto err = nlohmann::json::parse(red.err);
  CHECK(err["error"]["code"] == "ReducibleInput");
  CHECK(err["error"]["exit"] == 3);
  CHECK(run({"--field", "7", "genus", "X^3-3*x^3"}).exit_code == kMath);
  CHECK(run({"--field", "2^30", "classify", "X^3+1"}).exit_code == kSize);
}

TEST_CASE("worked examples through the command line") {
  auto result = [](std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    const CommandResult r = run(args);
    REQUIRE(r.exit_code == 0);
    return nlohmann::json::parse(r.out)["result"];
  };
  const auto c = result({"--field", "7", "classify", "X^3+X^2+1"});
  CHECK(c["form"] == "depressed");
  CHECK(c["a"] == "6");

  const auto g = result({"--field", "5", "genus", "X^3-3*X-x"});
  CHECK(g["genus"] == 0);
  CHECK(g["fully_ramified"] == nlohmann::json::parse(R"([{"place":"infinity","d":2}])"));
  CHECK(g["S"] == nlohmann::json::parse(R"([{"place":"x+2","d":1},{"place":"x+3","d":1}])"));

  const auto s = result({"--field", "3", "--max-degree", "1", "splitting", "X^3+x*X+x^2"});
  std::vector<std::string> sigs;
  for (const auto& row : s["places"]) sigs.push_back(row["signature"]);
  CHECK(sigs == std::vector<std::string>{"(3,1)", "(2,1;1,1)", "(1,3)", "(1,1;1,2)"});
}
