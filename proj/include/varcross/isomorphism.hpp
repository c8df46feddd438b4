#ifndef VARCROSS_ISOMORPHISM_HPP_
#define VARCROSS_ISOMORPHISM_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "varcross/monoid.hpp"

namespace varcross {

  // A generating set chosen greedily in element order, skipping the identity.
  std::vector<element_type> greedy_generators(FiniteMonoid const& m);

  // Returns f with f[a] the image of a, or nullopt when M and N are not
  // isomorphic.
  std::optional<std::vector<element_type>> find_isomorphism(FiniteMonoid const& m, FiniteMonoid const& n);

  // Up to `limit` automorphisms, the identity map first.
  std::vector<std::vector<element_type>> automorphisms(FiniteMonoid const& m, std::size_t limit = 10'000);

}  // namespace varcross

#endif  // VARCROSS_ISOMORPHISM_HPP_
