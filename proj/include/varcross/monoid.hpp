#ifndef VARCROSS_MONOID_HPP_
#define VARCROSS_MONOID_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "varcross/word.hpp"

namespace varcross {

  using element_type = std::uint32_t;

  // A finite monoid given by its multiplication table. Elements are the
  // indices 0..order-1; labels are for display only.
  class FiniteMonoid {
   public:
    FiniteMonoid() = default;

    // Validates associativity and the identity laws, detects a zero, and
    // throws MonoidError naming the first violation.
    static FiniteMonoid from_table(std::size_t               order,
                                   std::vector<element_type> table,
                                   element_type              identity,
                                   std::vector<std::string>  labels = {});

    std::size_t order() const noexcept {
      return _order;
    }

    element_type product(element_type a, element_type b) const noexcept {
      return _table[a * _order + b];
    }

    element_type identity() const noexcept {
      return _identity;
    }

    std::optional<element_type> zero() const noexcept {
      return _zero;
    }

    std::string const& label(element_type a) const noexcept {
      return _labels[a];
    }

    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

    std::optional<element_type> find_label(std::string_view name) const;

    std::vector<element_type> const& table() const noexcept {
      return _table;
    }

    bool is_idempotent(element_type a) const noexcept {
      return product(a, a) == a;
    }

    bool operator==(FiniteMonoid const& other) const noexcept {
      return _order == other._order && _identity == other._identity && _table == other._table;
    }

   private:
    std::size_t                 _order    = 0;
    std::vector<element_type>   _table;
    element_type                _identity = 0;
    std::optional<element_type> _zero;
    std::vector<std::string>    _labels;
  };

  FiniteMonoid trivial_monoid();

  // Table file format:
  //   order 5
  //   identity 4
  //   names 0 e f ef 1     (optional)
  //   table
  //   <order rows of order indices>
  FiniteMonoid parse_table(std::string_view text);
  std::string  to_table_text(FiniteMonoid const& m);

  // Rq W: the factors of the words in W together with a zero. Elements are
  // ordered zero first, then factors by length and first occurrence, then 1.
  FiniteMonoid rees_quotient(std::vector<Word> const& words);

  FiniteMonoid direct_product(FiniteMonoid const& m, FiniteMonoid const& n);

  // Transposed table.
  FiniteMonoid dual_monoid(FiniteMonoid const& m);

  // Quotient by the congruence whose non-singleton classes are given.
  // Throws MonoidError if the partition is not a congruence. Each class is
  // represented by the label of its first listed member.
  FiniteMonoid quotient(FiniteMonoid const& m, std::vector<std::vector<element_type>> const& classes);

  // Submonoid generated by the given elements, in order of discovery with
  // the identity first.
  std::vector<element_type> generated_submonoid(FiniteMonoid const& m, std::vector<element_type> const& gens);

}  // namespace varcross

#endif  // VARCROSS_MONOID_HPP_
