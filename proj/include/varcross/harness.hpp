#ifndef VARCROSS_HARNESS_HPP_
#define VARCROSS_HARNESS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "varcross/catalog.hpp"
#include "varcross/expression.hpp"
#include "varcross/free_object.hpp"
#include "varcross/proof.hpp"
#include "varcross/satisfaction.hpp"

namespace varcross {

  // Process-level outcome. Numeric values are the CLI exit codes.
  enum class Status { ok = 0, fail = 1, inconclusive = 2, input_error = 3, internal_error = 4 };

  // The more severe of two outcomes: internal, input, fail, inconclusive, ok.
  Status worst(Status a, Status b) noexcept;

  Status status_of(Decision d) noexcept;

  struct RunOptions {
    unsigned         jobs    = 1;
    std::size_t      budget  = default_satisfaction_budget;
    bool             timings = false;
    FreeObjectLimits limits;
  };

  enum class ClaimKind {
    satisfies,
    fails,
    jtrivial,
    not_jtrivial,
    aperiodic,
    not_aperiodic,
    isoterm,
    not_isoterm,
    iso,
    not_iso,
    in_var,
    not_in_var,
    order,
  };

  // One manifest line:
  //   satisfies | member      EXPR OBJECT
  //   fails | not-member      EXPR OBJECT
  //   jtrivial | not-jtrivial EXPR
  //   aperiodic | not-aperiodic EXPR [n]
  //   isoterm | not-isoterm   EXPR "word"
  //   iso | not-iso           EXPR EXPR
  //   in-var | not-in-var     EXPR EXPR     first generates a subvariety of the second
  //   order                   EXPR n
  // OBJECT is a quoted identity "u = v", an identity label, a family
  // instance, basis.NAME or dual(...) of those.
  struct Claim {
    std::string                     id;
    std::size_t                     line = 0;
    std::string                     text;
    ClaimKind                       kind = ClaimKind::satisfies;
    MonoidExpression                subject;
    std::optional<MonoidExpression> other;
    AxiomSet                        axioms;
    Word                            word;
    std::optional<std::size_t>      number;
    std::optional<std::size_t>      budget;  // from a preceding `budget N` line
  };

  // `note TEXT` lines are carried into the report unchanged. `budget N`
  // sets the satisfaction budget of the claims that follow it.
  struct Manifest {
    std::string              name;
    std::vector<Claim>       claims;
    std::vector<std::string> notes;
  };

  // Throws ParseError (with a line number) or LookupError.
  Manifest parse_manifest(std::string_view name, std::string_view text, Catalog const& cat);

  enum class Verdict { pass, fail, inconclusive };

  std::string_view to_string(Verdict v) noexcept;

  struct ClaimResult {
    std::string id;
    std::string claim;
    Verdict     verdict = Verdict::pass;
    double      millis  = 0;
    std::size_t budget  = 0;  // effective satisfaction budget
    std::string detail;
  };

  ClaimResult run_claim(Claim const& claim, RunOptions const& opts);

  struct ManifestReport {
    std::string              name;
    std::vector<ClaimResult> results;
    std::vector<std::string> notes;

    Status status() const noexcept;
    // Human-readable listing with a summary line.
    std::string to_string(bool timings = false) const;
    // One "claim-id verdict millis detail" line per claim; millis is "-"
    // unless timings are requested.
    std::string records(bool timings = false) const;
  };

  // Claims of all manifests share one worker pool. Results are placed by
  // claim position, so reports do not depend on the number of workers.
  std::vector<ManifestReport> run_manifests(std::vector<Manifest> const& manifests, RunOptions const& opts);

  // Text report plus process status for the remaining commands.
  struct CommandReport {
    Status      status = Status::ok;
    std::string text;
  };

  CommandReport run_proof(std::string_view text, Catalog const& cat, ProofOptions const& opts = {});

  CommandReport probe_isoterm(std::string_view expr, std::string_view word, Catalog const& cat, RunOptions const& opts = {});
  CommandReport probe_properties(std::string_view expr, Catalog const& cat, RunOptions const& opts = {});
  // For each variety excluded by every Cross variety of J-trivial monoids:
  // containment in var(M) where a finite generator is shipped, and
  // membership of M where a finite basis is shipped.
  CommandReport probe_exclusion(std::string_view expr, Catalog const& cat, RunOptions const& opts = {});

  // Lines are `label: u = v`, `u = v`, or a catalog label, family instance
  // or basis name.
  AxiomSet parse_axiom_spec(std::string_view text, Catalog const& cat);

}  // namespace varcross

#endif  // VARCROSS_HARNESS_HPP_
