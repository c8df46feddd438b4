#ifndef VARCROSS_DEDUCTION_HPP_
#define VARCROSS_DEDUCTION_HPP_

#include <cstddef>
#include <optional>
#include <string>

#include "varcross/decision.hpp"
#include "varcross/identity.hpp"

namespace varcross {

  // u = prefix phi(p) suffix and v = prefix phi(q) suffix for the axiom
  // p = q, or the same with p and q exchanged when `swapped` is set.
  struct DeductionWitness {
    Word             prefix;
    Word             suffix;
    WordSubstitution phi;
    bool             swapped = false;

    std::string to_string() const;
  };

  struct DeductionResult {
    Decision                        decision = Decision::no;
    std::optional<DeductionWitness> witness;
    std::size_t                     nodes = 0;
  };

  inline constexpr std::size_t default_deduction_budget = 1'000'000;

  // Decides whether {u, v} = {a phi(p) b, a phi(q) b} for some words a, b
  // and substitution phi. Contexts are tried shortest first; within a
  // context variables are matched left to right with the empty image last.
  // Returns inconclusive when more than `budget` match nodes are visited.
  DeductionResult directly_deducible(Word const&     u,
                                     Word const&     v,
                                     Identity const& ax,
                                     std::size_t     budget = default_deduction_budget);

  bool check_witness(Word const& u, Word const& v, Identity const& ax, DeductionWitness const& w);

}  // namespace varcross

#endif  // VARCROSS_DEDUCTION_HPP_
