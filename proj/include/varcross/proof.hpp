#ifndef VARCROSS_PROOF_HPP_
#define VARCROSS_PROOF_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "varcross/decision.hpp"
#include "varcross/deduction.hpp"
#include "varcross/identity.hpp"

namespace varcross {

  // Supplies axioms by label for references not defined in the script
  // itself (catalog identities). Returns nullopt for unknown labels.
  using AxiomResolver = std::function<std::optional<Identity>(std::string_view)>;

  struct ProofStep {
    Word                            word;
    std::string                     label;
    std::optional<DeductionWitness> via;
    std::size_t                     line = 0;
  };

  struct ProofScript {
    AxiomSet               axioms;
    Word                   start;
    std::vector<ProofStep> steps;
  };

  // Parses the line-oriented script format:
  //
  //   axioms:
  //     L: x^2 h x = x h x
  //     (>)                     # taken from the resolver
  //   chain:
  //     x y h x y
  //     -> (x y)^2 h x y  by L
  //     -> ...            by a_2  via a="x" b="1" phi: x="x y"
  //
  // Family labels (a_n, c_n, R_m, I_m[...]) may be cited without
  // declaration. Throws ParseError or LookupError.
  ProofScript parse_proof_script(std::string_view text, AxiomResolver const& resolver = {});

  struct StepReport {
    std::size_t                     index = 0;
    std::size_t                     line  = 0;
    std::string                     label;
    Decision                        decision = Decision::no;
    std::optional<DeductionWitness> witness;
    std::string                     message;
  };

  struct ProofReport {
    Decision                 decision = Decision::yes;
    std::vector<StepReport>  steps;
    std::vector<std::string> warnings;
    std::vector<std::string> errors;
    Identity                 conclusion;

    std::string to_string() const;
  };

  struct ProofOptions {
    bool        lax    = false;
    std::size_t budget = default_deduction_budget;
  };

  ProofReport verify_proof_script(ProofScript const& ps, ProofOptions const& opts = {});

}  // namespace varcross

#endif  // VARCROSS_PROOF_HPP_
