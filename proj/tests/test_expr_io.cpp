#include "catch_amalgamated.hpp"

#include <sstream>

#include "affmod/expr_io.hpp"
#include "support/generators.hpp"

using namespace affmod;
using Q = RationalField;
using P = Poly<Q>;

TEST_CASE("parse examples") {
  auto R = rational_ring({"x", "y", "u"});
  auto x = P::variable(R, "x"), y = P::variable(R, "y"), u = P::variable(R, "u"), one = P::from_int(R, 1);
  CHECK(parse_poly("x^2*y - 1", R) == x * x * y - one);
  CHECK(parse_poly("u*(x^3*y - 1) - (x - 1)", R) == u * (x.pow(3) * y - one) - (x - one));
  CHECK(parse_poly("-x^2", R) == -(x * x));
  CHECK(parse_poly("-2*-x", R) == x.scaled(Q{}.from_int(2)));
  CHECK(parse_poly("((x))", R) == x);
  CHECK(parse_poly("  x +\ty ", R) == x + y);
  CHECK(parse_poly("(x + y)^0", R) == one);
  CHECK(parse_poly("0", R).is_zero());
  CHECK(parse_poly("x/2", R) == x.scaled(Q{}.from_fraction(1, 2)));
}

TEST_CASE("parse errors carry positions") {
  auto R = rational_ring({"x", "y"});
  auto position_of = [&](const char* text) -> long {
    try {
      parse_poly(text, R);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK_THROWS_WITH(parse_poly("x^-1", R), Catch::Matchers::ContainsSubstring("negative exponent"));
  CHECK(position_of("x^-1") == 2);
  CHECK(position_of("x + z") == 4);
  CHECK_THROWS_WITH(parse_poly("x + z", R), Catch::Matchers::ContainsSubstring("unknown variable"));
  CHECK(position_of("x*y)") == 3);
  CHECK(position_of("(x + 1") == 6);
  CHECK(position_of("x y") == 2);  // implicit multiplication is not allowed
  CHECK(position_of("2x") == 1);
  CHECK(position_of("") == 0);
  CHECK(position_of("x $ y") == 2);
  CHECK(position_of("x/(y - 1)") == 2);
  CHECK(position_of("x/0") == 2);
  CHECK(position_of("x^99999999") == 2);
  CHECK(position_of("x/2/3") == 3);
}

TEST_CASE("fractions") {
  auto R = rational_ring({"x", "y"});
  auto f = parse_fraction("(x-1)/(x^2*y-1)", R);
  CHECK(f.numerator == parse_poly("x - 1", R));
  CHECK(f.denominator == parse_poly("x^2*y - 1", R));
  auto g = parse_fraction("x+1", R);
  CHECK(g.numerator == parse_poly("x + 1", R));
  CHECK(g.denominator == P::from_int(R, 1));
  auto h = parse_fraction("(y-1)/(x*y-1)", R);
  CHECK(format(h) == "(y - 1)/(x*y - 1)");
  // stored as written, not reduced
  auto k = parse_fraction("(x^2 - 1)/(x - 1)", R);
  CHECK(k.denominator == parse_poly("x - 1", R));
  CHECK_THROWS_AS(parse_fraction("x/(y - y)", R), ParseError);
}

TEST_CASE("format examples") {
  auto R = rational_ring({"x", "y"});
  CHECK(format(parse_poly("x^2*y - 1", R)) == "x^2*y - 1");
  CHECK(format(P(R)) == "0");
  CHECK(format(parse_poly("2*x", R)) == "2*x");
  CHECK(format(parse_poly("-x + 3", R)) == "-x + 3");
  CHECK(format(parse_poly("y^2 + x", R)) == "y^2 + x");
  auto half = P::variable(R, 0).scaled(Q{}.from_fraction(1, 2)) - P::variable(R, 1).scaled(Q{}.from_fraction(1, 3));
  CHECK(format(half) == "(3*x - 2*y)/6");
  CHECK(parse_poly("(3*x - 2*y)/6", R) == half);
  // one top-level '/' only
  CHECK_THROWS_AS(parse_poly("x/2 - y/3", R), ParseError);
  PrimeField F(7);
  auto S = make_ring(F, {"x"});
  CHECK(format(parse_poly("-x", S)) == "6*x");
}

TEST_CASE("round trip on random polynomials") {
  std::mt19937 rng(2024);
  auto R = rational_ring({"x", "y", "u", "v", "T"});
  for (int i = 0; i < 600; ++i) {
    testgen::PolyShape shape{6, 4, 40, i % 3 == 0 ? 6 : 1};
    auto p = testgen::random_poly(rng, R, shape);
    auto text = format(p);
    REQUIRE(parse_poly(text, R) == p);
    REQUIRE(format(parse_poly(text, R)) == text);
  }
  PrimeField F(101);
  auto S = make_ring(F, {"a", "b"});
  for (int i = 0; i < 200; ++i) {
    auto p = testgen::random_poly_over(rng, S, {5, 5, 300, 1});
    REQUIRE(parse_poly(format(p), S) == p);
  }
}

TEST_CASE("tokenizer spans cover the input") {
  auto toks = tokenize("u*(x^3 - 1)");
  std::string rebuilt;
  for (const auto& t : toks) rebuilt += t.text;
  CHECK(rebuilt == "u*(x^3-1)");
  for (std::size_t i = 1; i < toks.size(); ++i) CHECK(toks[i - 1].end <= toks[i].begin);
  CHECK(toks.back().kind == ExprToken::Kind::End);
}

TEST_CASE("fuzzed input never escapes as anything but ParseError") {
  std::mt19937 rng(77);
  auto R = rational_ring({"x", "y"});
  const std::string alphabet = "xy0123456789+-*/^() z$";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 24);
  int parsed = 0;
  for (int i = 0; i < 4000; ++i) {
    std::string s;
    int n = len(rng);
    for (int k = 0; k < n; ++k) s += alphabet[pick(rng)];
    try {
      auto p = parse_poly(s, R);
      REQUIRE(parse_poly(format(p), R) == p);
      ++parsed;
    } catch (const ParseError& e) {
      REQUIRE(e.position() <= s.size());
    }
  }
  CHECK(parsed > 0);
  // deep nesting and huge exponents are rejected, not recursed into
  CHECK_THROWS_AS(parse_poly(std::string(5000, '(') + "x" + std::string(5000, ')'), R), ParseError);
  CHECK_THROWS_AS(parse_poly(std::string(5000, '-') + "x", R), ParseError);
  CHECK_THROWS_AS(parse_poly("(x + y)^100000", R), ParseError);
  CHECK_THROWS_AS(parse_poly("(x^3 + y)^400", R), ParseError);
}

TEST_CASE("expression files") {
  std::istringstream in("# comment\n\nx - 1   # trailing\n  x^2*y - 1\r\n");
  auto lines = read_expression_lines(in);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] == "x - 1");
  CHECK(lines[1] == "x^2*y - 1");
}
