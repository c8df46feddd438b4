#ifndef VARCROSS_DECISION_HPP_
#define VARCROSS_DECISION_HPP_

#include <string_view>

namespace varcross {

  // Outcome of a bounded decision procedure. `inconclusive` means a budget
  // or cap was exhausted before the answer was known.
  enum class Decision { yes, no, inconclusive };

  constexpr std::string_view to_string(Decision d) noexcept {
    switch (d) {
      case Decision::yes:
        return "yes";
      case Decision::no:
        return "no";
      case Decision::inconclusive:
        return "inconclusive";
    }
    return "?";
  }

}  // namespace varcross

#endif  // VARCROSS_DECISION_HPP_
