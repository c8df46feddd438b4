#ifndef VARCROSS_SEARCH_HPP_
#define VARCROSS_SEARCH_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "varcross/decision.hpp"
#include "varcross/identity.hpp"
#include "varcross/monoid.hpp"
#include "varcross/satisfaction.hpp"

namespace varcross {

  // Visits one multiplication table per isomorphism class of monoids of the
  // given order. The identity is element 0 and each table is the
  // lexicographically least among its relabellings that fix 0. The visitor
  // returns false to stop. Returns the number of tables visited.
  std::size_t enumerate_monoids(std::size_t order, std::function<bool(FiniteMonoid const&)> const& visit);

  struct SearchSpec {
    AxiomSet              must_satisfy;
    std::vector<Identity> must_fail;
    std::size_t           min_order = 1;
    std::size_t           max_order = 5;
    std::size_t           budget    = default_satisfaction_budget;
  };

  struct SearchResult {
    Decision                    decision = Decision::no;  // yes when a witness was found
    std::optional<FiniteMonoid> witness;
    std::size_t                 examined = 0;
    std::string                 detail;
  };

  // Smallest monoid, by order and then enumeration order, that satisfies
  // every identity of must_satisfy and fails every identity of must_fail.
  SearchResult witness_search(SearchSpec const& spec);

}  // namespace varcross

#endif  // VARCROSS_SEARCH_HPP_
