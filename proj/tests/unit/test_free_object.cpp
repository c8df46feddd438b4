#include "doctest.h"
#include "varcross/catalog.hpp"
#include "varcross/free_object.hpp"
#include "varcross/satisfaction.hpp"

using namespace varcross;

namespace {
  FiniteMonoid mon(char const* name) {
    return Catalog::builtin().monoid(name);
  }
}

TEST_CASE("free object sizes") {
  auto a = build_free_object(mon("Rq{x}"), 1);
  REQUIRE(a.automaton.has_value());
  CHECK(a.automaton->size() == 3);  // 1, x, x^2
  auto b = build_free_object(mon("Rq{1}"), 2);
  REQUIRE(b.automaton.has_value());
  CHECK(b.automaton->size() == 4);  // free semilattice monoid on two generators
  auto c = build_free_object(mon("T"), 3);
  REQUIRE(c.automaton.has_value());
  CHECK(c.automaton->size() == 1);
}

TEST_CASE("free object states respect the identities of M") {
  auto r = build_free_object(mon("E"), 2);
  REQUIRE(r.automaton.has_value());
  auto const& f = *r.automaton;
  for (std::uint32_t s = 0; s < f.size(); ++s) {
    CHECK(f.state_of(f.representative(s)) == s);
  }
}

TEST_CASE("isoterms") {
  CHECK(is_isoterm(mon("Rq{xhx}"), parse_word("x h x")).decision == Decision::yes);
  CHECK(is_isoterm(mon("Rq{xy}"), parse_word("x y")).decision == Decision::yes);
  CHECK(is_isoterm(mon("Rq{xy}"), parse_word("x")).decision == Decision::yes);
  auto r = is_isoterm(mon("Rq{x}"), parse_word("x y"));
  CHECK(r.decision == Decision::no);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == parse_word("y x"));
  auto e = is_isoterm(mon("E"), parse_word("x h x"));
  CHECK(e.decision == Decision::no);
}

TEST_CASE("variety membership of finite monoids") {
  CHECK(variety_contains(mon("B0"), mon("E")).decision == Decision::yes);
  CHECK(variety_contains(mon("B0"), dual_monoid(mon("E"))).decision == Decision::yes);
  CHECK(variety_contains(mon("Q"), mon("A0")).decision == Decision::no);
  CHECK(variety_contains(mon("E"), dual_monoid(mon("E"))).decision == Decision::no);
  CHECK(variety_contains(mon("K"), mon("K/~")).decision == Decision::yes);
  // a factor lies in the variety of the product
  CHECK(variety_contains(direct_product(mon("E"), dual_monoid(mon("E"))), mon("E")).decision == Decision::yes);
}

TEST_CASE("membership agrees with identity separation") {
  // A monoid failing an identity of M cannot lie in var(M).
  auto q  = mon("Q");
  auto a0 = mon("A0");
  CHECK(satisfies(q, Catalog::builtin().identity("xhxtx")).decision == Decision::no);
  CHECK(satisfies(a0, Catalog::builtin().identity("xhxtx")).decision == Decision::yes);
  CHECK(variety_contains(a0, q).decision == Decision::no);
}
