#ifndef VARCROSS_FAMILY_HPP_
#define VARCROSS_FAMILY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "varcross/identity.hpp"

namespace varcross {

  enum class Family { aperiodicity, eventual_commutativity, restrictive, i_scheme, l_chain_word };

  struct FamilySpec {
    Family                   family = Family::aperiodicity;
    std::size_t              index  = 0;
    std::vector<std::size_t> permutation;  // 1-based, i_scheme only

    // a_n, c_n, R_m, I_m[p1,...,pm], x_m
    std::string label() const;
  };

  //   a_n:        x^{n+1} = x^n
  //   c_n:        (xy)^n = (yx)^n
  //   R_m:        x y t1 a1 ... tm am = y x t1 a1 ... tm am, (a_i) = x, y, x, ...
  //   I_m[pi]:    x y_pi(1)..y_pi(m) x h1 y1..hm ym = x^2 y_pi(1)..y_pi(m) h1 y1..hm ym
  // Throws std::invalid_argument for R with m < 2, a bad permutation, or
  // l_chain_word (which denotes a word, see l_chain_word()).
  Identity family_identity(FamilySpec const& spec);

  // x h1 x h2 x ... hm x
  Word l_chain_word(std::size_t m);

  // Recognizes family labels such as "a_2", "c_3", "R_7", "I_2[2,1]", "x_3".
  // Returns nullopt when the text is not shaped like a family label.
  std::optional<FamilySpec> parse_family_label(std::string_view text);

}  // namespace varcross

#endif  // VARCROSS_FAMILY_HPP_
