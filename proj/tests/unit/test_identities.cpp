#include "doctest.h"
#include "varcross/catalog.hpp"
#include "varcross/deduction.hpp"
#include "varcross/error.hpp"
#include "varcross/family.hpp"
#include "varcross/identity.hpp"
#include "varcross/proof.hpp"

using namespace varcross;

TEST_CASE("identities parse with either relation sign") {
  auto a = parse_identity("x h x = x^2 h", "s");
  auto b = parse_identity("x h x \xE2\x89\x88 x x h");
  CHECK(same_identity(a, b));
  CHECK(a.label == "s");
  CHECK_THROWS_AS(parse_identity("x h x"), ParseError);
  CHECK_THROWS_AS(parse_identity("x = y = z"), ParseError);
}

TEST_CASE("duality reverses both sides") {
  auto a = parse_identity("x h x = x^2 h");
  auto d = dualize(a);
  CHECK(same_identity(d, parse_identity("x h x = h x^2")));
  CHECK(same_identity(dualize(d), a));
}

TEST_CASE("canonical form ignores names and orientation") {
  auto a = parse_identity("x h x = h x^2");
  auto b = parse_identity("t y^2 = y t y");
  CHECK(equivalent_identities(a, b));
  CHECK_FALSE(equivalent_identities(a, dualize(a)));
}

TEST_CASE("family instances") {
  CHECK(same_identity(family_identity(*parse_family_label("a_2")), parse_identity("x^3 = x^2")));
  CHECK(same_identity(family_identity(*parse_family_label("c_2")), parse_identity("(x y)^2 = (y x)^2")));
  CHECK(same_identity(family_identity(*parse_family_label("R_2")), parse_identity("x y t1 x t2 y = y x t1 x t2 y")));
  CHECK_FALSE(parse_family_label("comm").has_value());
}

TEST_CASE("axiom sets reject duplicate labels") {
  AxiomSet s;
  s.add(parse_identity("x = x^2", "i"));
  CHECK_THROWS_AS(s.add(parse_identity("x y = y x", "i")), LookupError);
}

TEST_CASE("direct deduction finds and checks witnesses") {
  auto a1 = family_identity(*parse_family_label("a_1"));
  auto u  = parse_word("x y");
  auto v  = parse_word("x y x y");
  auto r  = directly_deducible(u, v, a1);
  REQUIRE(r.decision == Decision::yes);
  REQUIRE(r.witness.has_value());
  CHECK(check_witness(u, v, a1, *r.witness));
  CHECK(directly_deducible(parse_word("x y"), parse_word("y x"), a1).decision == Decision::no);
}

namespace {
  AxiomResolver resolver() {
    return [](std::string_view l) { return Catalog::builtin().find_identity(l); };
  }

  char const* const commutes = R"(axioms:
  a_1
  c_2
chain:
  x y
  -> (x y)^2 by a_1
  -> (y x)^2 by c_2
  -> y x     by a_1
)";
}

TEST_CASE("proof scripts verify step by step") {
  auto script = parse_proof_script(commutes, resolver());
  auto report = verify_proof_script(script);
  CHECK(report.decision == Decision::yes);
  CHECK(same_identity(report.conclusion, parse_identity("x y = y x")));
}

TEST_CASE("a corrupted middle word is reported at its step") {
  std::string text = commutes;
  text.replace(text.find("(y x)^2 by"), 7, "(y x)^3");
  auto report = verify_proof_script(parse_proof_script(text, resolver()));
  CHECK(report.decision == Decision::no);
  REQUIRE(report.steps.size() == 3);
  CHECK(report.steps[0].decision == Decision::yes);
  CHECK(report.steps[1].decision == Decision::no);
  CHECK(report.steps[1].line == 7);
  CHECK(report.to_string().find("step 2 (line 7)") != std::string::npos);
}

TEST_CASE("repeated chain words are errors unless lax") {
  char const* text = R"(axioms:
  a_1
chain:
  x
  -> x^2 by a_1
  -> x   by a_1
  -> x^2 by a_1
)";
  auto script = parse_proof_script(text, resolver());
  CHECK(verify_proof_script(script).decision == Decision::no);
  ProofOptions lax;
  lax.lax     = true;
  auto report = verify_proof_script(script, lax);
  CHECK(report.decision == Decision::yes);
  CHECK_FALSE(report.warnings.empty());
}

TEST_CASE("unknown labels and malformed scripts are input errors") {
  CHECK_THROWS_AS(parse_proof_script("axioms:\n  nosuch\nchain:\n  x\n", resolver()), LookupError);
  CHECK_THROWS_AS(parse_proof_script("chain:\n  -> x by a_1\n", resolver()), ParseError);
  CHECK_THROWS_AS(parse_proof_script("x = y\n", resolver()), ParseError);
}
