#include "catch_amalgamated.hpp"

#include "affmod/expr_io.hpp"
#include "affmod/surface_rings.hpp"

using namespace affmod;
using Q = RationalField;
using P = Poly<Q>;

namespace {
std::string fixture(const char* name) { return std::string(AFFMOD_FIXTURES) + "/" + name; }
}  // namespace

TEST_CASE("affine modifications") {
  auto A = rational_ring({"x", "y"});
  auto b2 = build_modification(parse_poly("x^2*y - 1", A), parse_poly("x - 1", A));
  CHECK(b2.generator_names() == std::vector<std::string>{"x", "y", "u"});
  REQUIRE(b2.defining().generators().size() == 1);
  CHECK(b2.defining().generators()[0] == b2.parse("u*(x^2*y - 1) - (x - 1)"));
  auto b1 = build_modification(parse_poly("x*y - 1", A), parse_poly("x - 1", A));
  CHECK(ideals_equal(b1.defining(), build_Bn(1).defining()));
  auto first = build_modification(parse_poly("x", A), parse_poly("y - 1", A));
  CHECK(first.defining().generators()[0] == first.parse("u*x - (y - 1)"));
  CHECK_THROWS(build_modification(parse_poly("3", A), parse_poly("x", A)));
  CHECK_THROWS(build_modification(P(A), parse_poly("x", A)));
}

TEST_CASE("B_n presentations") {
  CHECK(build_Bn(1).defining().generators()[0] == build_Bn(1).parse("u*(x*y - 1) - (x - 1)"));
  CHECK(build_Bn(3).defining().generators()[0] == build_Bn(3).parse("u*(x^3*y - 1) - (x - 1)"));
  CHECK_THROWS(build_Bn(0));
  for (unsigned n = 1; n <= 5; ++n) {
    auto b = build_Bn(n);
    CHECK_FALSE(b.defining().is_unit_ideal());
    // linear in u with coprime coefficients: the relation is prime
    CHECK(is_certified_irreducible(b.defining().generators()[0]));
  }
  auto R = rational_ring({"x", "y", "u"});
  // (x y - 1)(u - x + 1): the coefficient x y - 1 divides the constant term
  CHECK_FALSE(is_certified_irreducible(parse_poly("u*(x*y - 1) - (x*y - 1)*(x - 1)", R)));
}

TEST_CASE("C_1 and C_2 are proper presentations") {
  CHECK_FALSE(build_C1().defining().is_unit_ideal());
  CHECK_FALSE(build_C2().defining().is_unit_ideal());
  auto R = rational_ring({"x"});
  CHECK_THROWS(PresentedRing<Q>("bad", Ideal<Q>(R, {parse_poly("x", R), parse_poly("x - 1", R)})));
}

TEST_CASE("C_1's ideal against J") {
  auto c1 = build_C1();
  auto alt = build_C1_alternative();
  // J is contained in I but smaller; after removing uv = 1 they agree
  for (const auto& g : alt.defining().generators()) CHECK(c1.defining().contains(g));
  CHECK_FALSE(ideals_equal(c1.defining(), alt.defining()));
  auto sat = saturated(alt, alt.parse("u*v - 1"), "J sat");
  CHECK(ideals_equal(c1.defining(), sat.defining()));
  CHECK_FALSE(element_equal_in_quotient(alt, alt.parse("1 + u*x"), alt.var("y")));
  CHECK(element_equal_in_quotient(sat, sat.parse("1 + u*x"), sat.var("y")));
  CHECK(element_equal_in_quotient(sat, sat.parse("1 + v*y"), sat.var("x")));
}

TEST_CASE("V = 1 - YU needs XY - 1 removed") {
  auto c2 = build_C2();
  CHECK_FALSE(element_equal_in_quotient(c2, c2.var("V"), c2.parse("1 - Y*U")));
  // (V - 1 + Y*U)(XY - 1) does lie in the ideal
  CHECK(element_equal_in_quotient(c2, c2.parse("(V - 1 + Y*U)*(X*Y - 1)"), P(c2.ambient())));
  auto sat = saturated(c2, c2.parse("X*Y - 1"), "C_2 sat");
  CHECK(element_equal_in_quotient(sat, sat.var("V"), sat.parse("1 - Y*U")));
}

TEST_CASE("ring maps") {
  auto alt = build_C1_alternative();
  auto c1 = build_C1();
  auto c2 = build_C2();
  auto phi = make_ring_map(alt, c2, {"U", "V", "-Y", "-X"});
  auto chk = check_ring_map(phi);
  CHECK(chk.well_defined);
  CHECK(chk.signed_permutation);
  CHECK(chk.image_ideal_equal == std::optional<bool>(true));
  CHECK(verify_ring_map(phi));
  auto b1 = build_Bn(1);
  CHECK(verify_ring_map(make_ring_map(b1, b1, {"x", "y", "u"})));
  auto naive = make_ring_map(c1, c2, {"X", "Y", "U", "V"});
  auto nchk = check_ring_map(naive);
  CHECK_FALSE(nchk.well_defined);
  CHECK_FALSE(nchk.residuals[0].is_zero());
  CHECK_FALSE(verify_ring_map(naive));
  auto psi = make_ring_map(c2, alt, {"-v", "-u", "x", "y"});
  CHECK(is_isomorphism_pair(phi, psi));
  CHECK(fixes_generators(compose(phi, psi)));
  auto bad_psi = make_ring_map(c2, alt, {"-v", "u", "x", "y"});
  CHECK_FALSE(is_isomorphism_pair(phi, bad_psi));
}

TEST_CASE("B_1 and the saturated C_2") {
  auto c2 = build_C2();
  auto sat = saturated(c2, c2.parse("X*Y - 1"), "C_2 sat");
  auto b1 = build_Bn(1);
  auto f = make_ring_map(b1, sat, {"X", "Y", "U"});
  auto g = make_ring_map(sat, b1, {"x", "y", "u", "1 - y*u"});
  CHECK(is_isomorphism_pair(f, g));
  // the literal C_2 maps onto B_1, but V = 1 - YU fails there, so no inverse
  auto from_literal = make_ring_map(c2, b1, {"x", "y", "u", "1 - y*u"});
  CHECK(verify_ring_map(from_literal));
  CHECK_FALSE(is_isomorphism_pair(make_ring_map(b1, c2, {"X", "Y", "U"}), from_literal));
}

TEST_CASE("swap automorphism of B_1") {
  auto b1 = build_Bn(1);
  auto alpha = make_ring_map(b1, b1, {"y", "x", "1 - y*u"});
  CHECK(verify_ring_map(alpha));
  CHECK(fixes_generators(compose(alpha, alpha)));
  CHECK(element_equal_in_quotient(b1, alpha.images[0], b1.var("y")));
  auto wrong = make_ring_map(b1, b1, {"y", "x", "u"});
  CHECK_FALSE(verify_ring_map(wrong));
}

TEST_CASE("samuel hypotheses for B_n") {
  auto A = rational_ring({"x", "y"});
  for (unsigned n = 1; n <= 5; ++n) {
    auto r = samuel_check(parse_poly("x^" + std::to_string(n) + "*y - 1", A), parse_poly("x - 1", A));
    CHECK(r.verdict == Verdict::Verified);
    CHECK(r.quotient_a_class == CurveClass::punctured_line(1));
    CHECK(r.quotient_b_class == CurveClass::affine_line());
    REQUIRE(r.point);
    CHECK((*r.point)[0] == 1);
    CHECK((*r.point)[1] == 1);
    CHECK(r.sum_colength == Colength::finite(1));
    CHECK(r.relatively_prime == std::optional<bool>(true));
  }
}

TEST_CASE("samuel counterexamples") {
  auto A = rational_ring({"x", "y"});
  auto check = [&](const char* a, const char* b) { return samuel_check(parse_poly(a, A), parse_poly(b, A)); };
  auto sq = check("x^2", "x - 1");
  CHECK(sq.verdict == Verdict::Failed);
  CHECK(sq.a_irreducible == std::optional<bool>(false));
  auto two = check("x*y - 1", "x*(x - 1)");
  CHECK(two.verdict == Verdict::Failed);
  CHECK(two.quotient_b_class == CurveClass::union_of({CurveClass::affine_line(), CurveClass::affine_line()}));
  CHECK(check("x^2*y^2 - 1", "x - 1").verdict == Verdict::Unknown);
  CHECK(check("x*y - 1", "x^2 - 1").verdict == Verdict::Failed);
  CHECK(to_string(Verdict::Verified) == "hypotheses-verified");
}

TEST_CASE("samuel never verifies the negative fixture") {
  auto A = rational_ring({"x", "y"});
  auto pairs = read_expression_pairs(fixture("samuel_negative.txt"));
  REQUIRE(pairs.size() >= 6);
  for (const auto& [a, b] : pairs) {
    INFO(a << " ; " << b);
    CHECK(samuel_check(parse_poly(a, A), parse_poly(b, A)).verdict != Verdict::Verified);
  }
  for (const auto& [a, b] : read_expression_pairs(fixture("samuel_positive.txt"))) {
    INFO(a << " ; " << b);
    CHECK(samuel_check(parse_poly(a, A), parse_poly(b, A)).verdict == Verdict::Verified);
  }
}

TEST_CASE("samuel over a prime field") {
  PrimeField F(101);
  auto A = make_ring(F, {"x", "y"});
  for (unsigned n = 1; n <= 5; ++n)
    CHECK(samuel_check(parse_poly("x^" + std::to_string(n) + "*y - 1", A), parse_poly("x - 1", A)).verdict ==
          Verdict::Verified);
  // x^5 y - 1 over F_5: the puncture count is not decidable by the squarefree route
  PrimeField F5(5);
  auto B = make_ring(F5, {"x", "y"});
  CHECK(samuel_check(parse_poly("x^5*y - 1", B), parse_poly("x - 1", B)).verdict == Verdict::Unknown);
}
