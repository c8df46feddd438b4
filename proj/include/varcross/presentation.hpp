#ifndef VARCROSS_PRESENTATION_HPP_
#define VARCROSS_PRESENTATION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "varcross/decision.hpp"
#include "varcross/monoid.hpp"
#include "varcross/word.hpp"

namespace varcross {

  // u = v, or u = 0 when `rhs` is empty.
  struct Relation {
    Word                lhs;
    std::optional<Word> rhs;
  };

  struct Presentation {
    std::vector<Variable>    generators;
    std::vector<Relation>    relations;
    std::vector<std::string> expected;  // element labels, optional

    bool uses_zero() const noexcept;
  };

  // Format:
  //   generators a b e
  //   a^3 = a^2
  //   a e = 0
  //   expect 0 a b e a2 ab ba ea aba ba2 ea2 1     (optional)
  Presentation parse_presentation(std::string_view text);

  struct ClosureLimits {
    std::size_t max_elements = 10'000;
    std::size_t max_rules    = 5'000;
    std::size_t max_length   = 128;
  };

  struct ClosureResult {
    Decision                    status = Decision::no;  // yes: monoid built
    std::optional<FiniteMonoid> monoid;
    std::string                 detail;
  };

  // Completes the relations to a confluent rewriting system under the
  // shortlex order (zero smallest, then generators in the listed order)
  // and tabulates the normal forms. Elements are ordered 0, then nonempty
  // normal forms in shortlex order, then 1; labels are run-length words
  // such as "ba2". Exceeding a limit yields an inconclusive result.
  // Throws MonoidError when `expected` is given and differs from the
  // computed element labels.
  ClosureResult close_presentation(Presentation const& p, ClosureLimits const& limits = {});

}  // namespace varcross

#endif  // VARCROSS_PRESENTATION_HPP_
