#ifndef VARCROSS_STRUCTURE_HPP_
#define VARCROSS_STRUCTURE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "varcross/monoid.hpp"

namespace varcross {

  struct GreenData {
    // Sorted element lists Ma, aM, MaM.
    std::vector<std::vector<element_type>> left_ideal, right_ideal, ideal;
    // Class number of each element; classes numbered by first member.
    std::vector<std::size_t> l_class, r_class, j_class, h_class;

    static std::size_t class_count(std::vector<std::size_t> const& cls);
  };

  GreenData green(FiniteMonoid const& m);

  bool is_j_trivial(FiniteMonoid const& m);

  // a^index = a^(index + period), minimal index and period, a^0 = 1.
  struct CyclicData {
    std::size_t index  = 0;
    std::size_t period = 1;
  };

  CyclicData cyclic_data(FiniteMonoid const& m, element_type a);

  struct AperiodicityReport {
    bool                        aperiodic = true;
    std::size_t                 index     = 0;  // minimal n with x^{n+1} = x^n when aperiodic
    std::optional<element_type> witness;        // element with period > 1 otherwise
  };

  AperiodicityReport aperiodicity(FiniteMonoid const& m);

  // M satisfies x^{n+1} = x^n.
  bool satisfies_aperiodicity(FiniteMonoid const& m, std::size_t n);

  bool is_completely_regular(FiniteMonoid const& m);
  bool idempotents_commute(FiniteMonoid const& m);
  bool idempotents_central(FiniteMonoid const& m);
  bool is_commutative(FiniteMonoid const& m);

  std::vector<element_type> idempotents(FiniteMonoid const& m);

}  // namespace varcross

#endif  // VARCROSS_STRUCTURE_HPP_
