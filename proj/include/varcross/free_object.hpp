#ifndef VARCROSS_FREE_OBJECT_HPP_
#define VARCROSS_FREE_OBJECT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "varcross/decision.hpp"
#include "varcross/monoid.hpp"
#include "varcross/word.hpp"

namespace varcross {

  struct FreeObjectLimits {
    std::size_t state_cap          = 200'000;
    std::size_t max_bytes          = std::size_t(1) << 29;
    std::size_t automorphism_limit = 10'000;
  };

  // The relatively free monoid of var(M) on the given generators as a
  // deterministic automaton. State 0 is the class of the empty word.
  class FreeObject {
   public:
    std::vector<Variable> const& generators() const noexcept {
      return _gens;
    }
    std::size_t size() const noexcept {
      return _parent.size();
    }
    std::size_t coordinates() const noexcept {
      return _coordinates;
    }
    std::uint32_t next(std::uint32_t state, std::size_t gen) const noexcept {
      return _delta[state * _gens.size() + gen];
    }
    // Throws std::invalid_argument if w uses a variable that is not a generator.
    std::uint32_t state_of(Word const& w) const;

    // Shortlex least word reaching the state.
    Word representative(std::uint32_t state) const;

    // One line per state: "id [word] : g -> id ..."
    std::string dump() const;

   private:
    friend struct FreeObjectBuilder;

    std::vector<Variable>                           _gens;
    std::vector<std::uint32_t>                      _delta;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> _parent;  // (state, generator), root maps to itself
    std::size_t                                     _coordinates = 0;
  };

  struct FreeObjectResult {
    Decision                  status = Decision::yes;  // inconclusive when a limit was hit
    std::optional<FreeObject> automaton;
    std::size_t               states_seen = 0;
    std::size_t               coordinates = 0;
    std::string               detail;
  };

  FreeObjectResult build_free_object(FiniteMonoid const&          m,
                                     std::vector<Variable> const& generators,
                                     FreeObjectLimits const&      limits = {});

  // Generators x1, ..., xk.
  FreeObjectResult build_free_object(FiniteMonoid const& m, std::size_t k, FreeObjectLimits const& limits = {});

  // decision: yes when w is an isoterm for var(M). `witness` is a shortest
  // word different from w that var(M) identifies with w.
  struct IsotermResult {
    Decision            decision = Decision::yes;
    std::optional<Word> witness;
    std::size_t         states = 0;
    std::string         detail;
  };

  IsotermResult is_isoterm(FiniteMonoid const& m, Word const& w, FreeObjectLimits const& limits = {});

  struct WordClassCount {
    enum class Kind { finite, at_least, infinite, inconclusive } kind = Kind::finite;
    std::size_t count = 0;  // exact for finite, the cap for at_least

    std::string to_string() const;
  };

  // Number of words over content(w) that var(M) identifies with w.
  WordClassCount word_class_count(FiniteMonoid const&     m,
                                  Word const&             w,
                                  std::size_t             cap,
                                  FreeObjectLimits const& limits = {});

  // decision: yes when G belongs to var(M). G is generated by k elements
  // and lies in var(M) exactly when the assignment of those elements to the
  // generators of F(var(M), k) extends to a homomorphism.
  struct MembershipResult {
    Decision    decision = Decision::yes;
    std::size_t states   = 0;
    std::string detail;
  };

  MembershipResult variety_contains(FiniteMonoid const& m, FiniteMonoid const& g, FreeObjectLimits const& limits = {});

}  // namespace varcross

#endif  // VARCROSS_FREE_OBJECT_HPP_
