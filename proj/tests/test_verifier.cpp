#include "catch_amalgamated.hpp"

#include <set>

#include "affmod/verifier.hpp"

using namespace affmod;
using Q = RationalField;

namespace {
const Q kQ{};
bool has_step(const VerificationReport& r, const std::string& needle) {
  for (const auto& l : r.transcript)
    if (l.find(needle) != std::string::npos) return true;
  return false;
}
}  // namespace

TEST_CASE("fibers command") {
  std::vector<Q::Element> lambdas{kQ.from_int(0), kQ.from_int(1), kQ.from_int(2), kQ.from_int(-1), kQ.from_fraction(1, 2)};
  auto r2 = cmd_fibers(2, lambdas, kQ);
  CHECK(r2.status == Status::Verified);
  CHECK(r2.transcript.size() == 15);
  auto r1 = cmd_fibers(1, lambdas, kQ);
  CHECK(r1.status == Status::Divergence);
  CHECK(r1.detail.find("u = 1") != std::string::npos);
  CHECK(cmd_fibers(0, lambdas, kQ).status == Status::Failed);
  auto f5 = cmd_fibers(5, {PrimeField(5).from_int(2)}, PrimeField(5));
  CHECK(f5.status == Status::Unknown);
}

TEST_CASE("takanori command") {
  auto r = cmd_takanori();
  CHECK(r.status == Status::Divergence);
  CHECK(has_step(r, "[ok] I = J : (uv - 1)^infinity"));
  CHECK(has_step(r, "[ok] phi(J) equals the C_2 ideal"));
  CHECK(has_step(r, "[ok] V = 1 - Y*U in C_2 : (XY - 1)^infinity"));
  CHECK(has_step(r, "(0, 0, -1, -1)"));
  TakanoriInputs unnegated;
  unnegated.phi_images = {"U", "V", "Y", "-X"};
  auto bad = cmd_takanori(kQ, unnegated);
  CHECK(bad.status == Status::Failed);
  CHECK(has_step(bad, "normal form -2*X - 2*U + 2"));
  TakanoriInputs flipped;
  flipped.j_generators[1] = "y*(u*v - 1) - (u + 1)";
  CHECK(cmd_takanori(kQ, flipped).status == Status::Failed);
  CHECK(cmd_takanori(PrimeField(7)).status == Status::Divergence);
}

TEST_CASE("swap automorphism command") { CHECK(cmd_b1_swap().status == Status::Verified); }

TEST_CASE("samuel commands") {
  for (unsigned n = 1; n <= 5; ++n) CHECK(cmd_samuel(n).status == Status::Verified);
  CHECK(cmd_samuel_pair("x^2*y^2 - 1", "x - 1").status == Status::Unknown);
  CHECK(cmd_samuel_pair("x*y - 1", "x^2 - 1").status == Status::Failed);
  CHECK(cmd_samuel_pair("x*y - 1", "x - 1 +").status == Status::Failed);
}

TEST_CASE("localization command") {
  for (unsigned n = 1; n <= 5; ++n) CHECK(cmd_localization(n).status == Status::Verified);
  auto bad = cmd_localization(2, kQ, std::string("x^2*y + 1"));
  CHECK(bad.status == Status::Failed);
  CHECK(bad.detail.find("= -2") != std::string::npos);
}

TEST_CASE("main identities command") {
  for (unsigned n = 2; n <= 5; ++n) CHECK(cmd_main_identities(n).status == Status::Verified);
  auto r1 = cmd_main_identities(1);
  CHECK(r1.status == Status::Divergence);
  CHECK(has_step(r1, "(10,0,0)"));
}

TEST_CASE("degree probe commands") {
  CHECK(cmd_degree_probe(5, 5).status == Status::Verified);
  CHECK(cmd_degree_probe(3, 0).status == Status::Verified);
  CHECK(cmd_degree_probe(1, 5, ProbeSet::WithoutSwapped).status == Status::Failed);
  CHECK(cmd_probe_needs_v().status == Status::Verified);
  std::vector<ProbeResult> results;
  cmd_degree_probe(2, 1, ProbeSet::Full, kQ, &results);
  REQUIRE(results.size() == 16);
  auto j = to_json(results[0]);
  CHECK(j.contains("weight"));
  CHECK(j["verdict"] == "witness");
}

TEST_CASE("all command") {
  auto reports = cmd_all();
  CHECK_FALSE(any_failed(reports));
  std::set<std::string> ids;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    ids.insert(reports[i].claim_id);
    if (i) CHECK(reports[i - 1].claim_id <= reports[i].claim_id);
    CHECK((reports[i].status == Status::Verified || reports[i].status == Status::Divergence));
  }
  CHECK(ids.size() == reports.size());
  CHECK(ids.count("takanori") == 1);
  RunConfig cfg;
  cfg.samuel_pairs = {{"x^2*y - 1", "x^2 - 1"}};
  CHECK(any_failed(cmd_all(cfg)));
}

TEST_CASE("reports are deterministic") {
  auto a = cmd_all(), b = cmd_all();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].claim_id == b[i].claim_id);
    CHECK(a[i].status == b[i].status);
    CHECK(a[i].transcript == b[i].transcript);
  }
}

TEST_CASE("json form") {
  auto j = to_json(cmd_samuel(2));
  for (const char* k : {"claim_id", "statement", "status", "detail", "transcript", "wall_ms"}) CHECK(j.contains(k));
  CHECK(j["status"] == "verified");
}

TEST_CASE("literal parsing") {
  CHECK(parse_rational_literal("1/2") == std::pair<long, long>{1, 2});
  CHECK(parse_rational_literal("-7") == std::pair<long, long>{-7, 1});
  CHECK_THROWS(parse_rational_literal("1/0"));
  CHECK_THROWS(parse_rational_literal("x"));
  CHECK_THROWS(parse_rational_literal("1/2/3"));
  CHECK(std::holds_alternative<RationalField>(parse_field_spec("rational")));
  CHECK(std::get<PrimeField>(parse_field_spec("fp:101")).characteristic() == 101);
  CHECK_THROWS(parse_field_spec("fp:100"));
  CHECK_THROWS(parse_field_spec("fp:"));
  CHECK_THROWS(parse_field_spec("reals"));
}
