#include <map>

#include "doctest.h"
#include "varcross/catalog.hpp"
#include "varcross/error.hpp"
#include "varcross/expression.hpp"
#include "varcross/isomorphism.hpp"
#include "varcross/monoid.hpp"
#include "varcross/presentation.hpp"
#include "varcross/structure.hpp"

using namespace varcross;

namespace {
  Catalog const& cat() {
    return Catalog::builtin();
  }

  // Associativity and identity, checked directly on the table.
  bool is_monoid_table(FiniteMonoid const& m) {
    auto n = m.order();
    for (element_type a = 0; a < n; ++a) {
      if (m.product(a, m.identity()) != a || m.product(m.identity(), a) != a) {
        return false;
      }
      for (element_type b = 0; b < n; ++b) {
        for (element_type c = 0; c < n; ++c) {
          if (m.product(m.product(a, b), c) != m.product(a, m.product(b, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // J-triviality from the definition: MaM = MbM implies a = b.
  bool j_trivial_oracle(FiniteMonoid const& m) {
    auto n = m.order();
    std::vector<std::vector<bool>> ideal(n, std::vector<bool>(n, false));
    for (element_type a = 0; a < n; ++a) {
      for (element_type s = 0; s < n; ++s) {
        for (element_type t = 0; t < n; ++t) {
          ideal[a][m.product(m.product(s, a), t)] = true;
        }
      }
    }
    for (element_type a = 0; a < n; ++a) {
      for (element_type b = a + 1; b < n; ++b) {
        if (ideal[a] == ideal[b]) {
          return false;
        }
      }
    }
    return true;
  }
}

TEST_CASE("catalog orders") {
  std::map<std::string, std::size_t> expected{{"B", 6},  {"A0", 5},  {"B0", 5},  {"E", 4},       {"Q", 6},
                                              {"F1", 6}, {"H3", 7},  {"K", 12},  {"K/~", 10},    {"Rq{xy}", 5},
                                              {"Rq{xhx}", 7}, {"Rq{1}", 2}, {"Rq{x}", 3}, {"T", 1}};
  for (auto const& [name, order] : expected) {
    CAPTURE(name);
    auto m = cat().monoid(name);
    CHECK(m.order() == order);
    CHECK(is_monoid_table(m));
  }
}

TEST_CASE("presentations close to their tables") {
  for (auto const& e : cat().monoids()) {
    if (!e.presentation) {
      continue;
    }
    CAPTURE(e.name);
    auto closure = close_presentation(*e.presentation);
    REQUIRE(closure.monoid.has_value());
    CHECK(find_isomorphism(*closure.monoid, e.monoid).has_value());
  }
}

TEST_CASE("catalog selfcheck passes") {
  auto r = cat().selfcheck();
  CHECK(r.passed);
}

TEST_CASE("constructions") {
  CHECK(rees_quotient({parse_word("x h x")}).order() == 7);
  CHECK(rees_quotient({parse_word("x y")}).order() == 5);
  CHECK(rees_quotient({parse_word("1")}).order() == 2);
  auto aq = direct_product(cat().monoid("A0"), cat().monoid("Q"));
  CHECK(aq.order() == 30);
  CHECK(is_monoid_table(aq));
  auto e = cat().monoid("E");
  CHECK(find_isomorphism(dual_monoid(dual_monoid(e)), e).has_value());
  CHECK_FALSE(find_isomorphism(dual_monoid(e), e).has_value());
  CHECK(parse_monoid_expression("quotient(K, classes=[[ba,ba2],[ea,ea2]])", cat()).materialize().order() == 10);
  CHECK(parse_monoid_expression("dual(E) x rees(x y)", cat()).materialize().order() == 20);
}

TEST_CASE("bad tables and expressions are rejected") {
  CHECK_THROWS_AS(parse_table("order 2\nidentity 0\ntable\n0 1\n0 1\n"), MonoidError);
  CHECK_THROWS_AS(FiniteMonoid::from_table(2, {0, 1, 1, 0, 9}, 0), MonoidError);
  CHECK_THROWS_AS(parse_monoid_expression("Nope", cat()), ParseError);
  CHECK_THROWS_AS(parse_monoid_expression("quotient(K, classes=[[a,b]])", cat()), ParseError);
  CHECK_THROWS_AS(cat().monoid("A9"), LookupError);
}

TEST_CASE("table text round trips") {
  auto k = cat().monoid("K");
  auto again = parse_table(to_table_text(k));
  CHECK(again == k);
}

TEST_CASE("structural predicates agree with definitions") {
  for (auto const& e : cat().monoids()) {
    CAPTURE(e.name);
    bool jt = is_j_trivial(e.monoid);
    CHECK(jt == j_trivial_oracle(e.monoid));
    CHECK(jt == (e.name != "B"));
    if (jt) {
      CHECK(aperiodicity(e.monoid).aperiodic);
    }
  }
  CHECK_FALSE(idempotents_commute(cat().monoid("A0")));
  CHECK(idempotents_commute(cat().monoid("E")));
  CHECK(satisfies_aperiodicity(cat().monoid("F1"), 2));
  CHECK_FALSE(satisfies_aperiodicity(cat().monoid("F1"), 1));
  CHECK(is_completely_regular(cat().monoid("Rq{1}")));
  CHECK_FALSE(is_completely_regular(cat().monoid("Rq{x}")));
}
