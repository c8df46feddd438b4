#ifndef VARCROSS_SATISFACTION_HPP_
#define VARCROSS_SATISFACTION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "varcross/decision.hpp"
#include "varcross/family.hpp"
#include "varcross/identity.hpp"
#include "varcross/monoid.hpp"

namespace varcross {

  using ElementSubstitution = std::vector<std::pair<Variable, element_type>>;

  element_type evaluate(FiniteMonoid const& m, Word const& w, ElementSubstitution const& phi);

  struct Counterexample {
    ElementSubstitution assignment;  // variables in order of first occurrence
    element_type        lhs_value = 0;
    element_type        rhs_value = 0;

    std::string to_string(FiniteMonoid const& m) const;
  };

  // decision: yes when M satisfies the identity.
  struct SatisfactionResult {
    Decision                      decision = Decision::yes;
    std::optional<Counterexample> counterexample;
    std::size_t                   products = 0;
  };

  inline constexpr std::size_t default_satisfaction_budget = 100'000'000;

  // Exhaustive over all substitutions of the identity's variables. Variables
  // are enumerated by descending occurrence count, elements in index order,
  // so the reported counterexample is the first in that order. The budget
  // counts monoid products.
  SatisfactionResult satisfies(FiniteMonoid const& m,
                               Identity const&     idy,
                               std::size_t         budget = default_satisfaction_budget);

  struct BasisReport {
    Decision                                              decision = Decision::yes;
    std::vector<std::pair<std::string, SatisfactionResult>> verdicts;
    std::optional<std::string>                            first_failure;
  };

  BasisReport satisfies_all(FiniteMonoid const& m,
                            AxiomSet const&     basis,
                            std::size_t         budget = default_satisfaction_budget);

  // Natural-form criterion for the monoid Q: the separator sequences agree
  // and corresponding core blocks have equal content.
  bool q_satisfies(Word const& u, Word const& v);

  // Verdicts for the family instances with index in [first, last].
  // Aperiodicity uses element powers instead of substitutions.
  std::vector<SatisfactionResult> satisfies_family(FiniteMonoid const& m,
                                                   Family              family,
                                                   std::size_t         first,
                                                   std::size_t         last,
                                                   std::size_t         budget = default_satisfaction_budget);

}  // namespace varcross

#endif  // VARCROSS_SATISFACTION_HPP_
