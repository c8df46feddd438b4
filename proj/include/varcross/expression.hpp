#ifndef VARCROSS_EXPRESSION_HPP_
#define VARCROSS_EXPRESSION_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "varcross/catalog.hpp"
#include "varcross/monoid.hpp"

namespace varcross {

  // A monoid expression evaluated to its direct factors. Satisfaction on a
  // product is decided factorwise; other predicates use the materialized
  // product.
  struct MonoidExpression {
    std::string               text;
    std::vector<FiniteMonoid> factors;

    FiniteMonoid materialize() const;
  };

  // Grammar:
  //   expr     := factor (("x" | "*" | "×") factor)*
  //   factor   := NAME | "dual(" expr ")" | "(" expr ")"
  //             | "rees(" word ("," word)* ")"
  //             | "quotient(" expr "," "classes=[" class ("," class)* "])"
  //   class    := "[" label ("," label)* "]"
  // NAME is a catalog monoid name such as A0, K/~ or Rq{xhx}.
  // Parsing starts at `pos` and stops before the first token that cannot
  // extend the expression; `pos` is advanced past the consumed text.
  MonoidExpression parse_monoid_expression(std::string_view text, std::size_t& pos, Catalog const& cat);

  // The whole text must be one expression.
  MonoidExpression parse_monoid_expression(std::string_view text, Catalog const& cat);

}  // namespace varcross

#endif  // VARCROSS_EXPRESSION_HPP_
