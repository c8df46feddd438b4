#ifndef VARCROSS_IDENTITY_HPP_
#define VARCROSS_IDENTITY_HPP_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "varcross/word.hpp"

namespace varcross {

  struct Identity {
    Word        lhs;
    Word        rhs;
    std::string label;

    Identity() = default;
    Identity(Word l, Word r, std::string lbl = {})
        : lhs(std::move(l)), rhs(std::move(r)), label(std::move(lbl)) {}

    bool nontrivial() const noexcept {
      return lhs != rhs;
    }

    // "u = v" with the serialization of words.
    std::string to_string() const;

    std::set<Variable> variables() const;
  };

  // Equality of identities as unordered pairs; labels are ignored.
  bool same_identity(Identity const& a, Identity const& b) noexcept;

  // Representative of the identity up to renaming variables and swapping
  // sides: variables become x1, x2, ... by first occurrence and the smaller
  // of the two orientations is kept.
  Identity canonical_form(Identity const& idy);

  bool equivalent_identities(Identity const& a, Identity const& b);

  // Accepts "u = v" or "u ≈ v".
  Identity parse_identity(std::string_view text, std::string label = {});

  Identity dualize(Identity const& idy);

  // Map from variables to words. Unassigned variables are fixed.
  class WordSubstitution {
   public:
    WordSubstitution() = default;

    void assign(Variable v, Word w) {
      _map[v] = std::move(w);
    }

    Word image(Variable v) const;

    bool assigned(Variable v) const {
      return _map.count(v) != 0;
    }

    std::map<Variable, Word> const& assignment() const noexcept {
      return _map;
    }

    // "x=\"x y\" h=\"1\"" style rendering, variables in code order.
    std::string to_string() const;

    bool operator==(WordSubstitution const&) const = default;

   private:
    std::map<Variable, Word> _map;
  };

  Word apply(WordSubstitution const& phi, Word const& w);

  class AxiomSet {
   public:
    AxiomSet() = default;
    explicit AxiomSet(std::vector<Identity> axioms);

    // Throws LookupError if the label is already taken. Unlabelled axioms
    // are named by their position.
    void add(Identity idy);

    Identity const* find(std::string_view label) const noexcept;

    std::vector<Identity> const& axioms() const noexcept {
      return _axioms;
    }
    std::size_t size() const noexcept {
      return _axioms.size();
    }
    auto begin() const noexcept {
      return _axioms.begin();
    }
    auto end() const noexcept {
      return _axioms.end();
    }

   private:
    std::vector<Identity> _axioms;
  };

  AxiomSet dualize(AxiomSet const& set);

}  // namespace varcross

#endif  // VARCROSS_IDENTITY_HPP_
