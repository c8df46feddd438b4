#ifndef VARCROSS_CATALOG_HPP_
#define VARCROSS_CATALOG_HPP_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "varcross/identity.hpp"
#include "varcross/monoid.hpp"
#include "varcross/presentation.hpp"

namespace varcross {

  struct MonoidEntry {
    std::string                 name;
    FiniteMonoid                monoid;
    std::optional<std::size_t>  stated_order;
    std::optional<Presentation> presentation;
    std::string                 construction;  // "table", "rees", "quotient"
    bool                        expect_j_trivial = true;
    std::string                 note;
  };

  struct BasisEntry {
    std::string name;
    AxiomSet    axioms;
  };

  // One self-check claim: `satisfies|fails MONOID LABEL`.
  struct CatalogCheck {
    bool        expect_satisfied = true;
    std::string subject;
    std::string object;
    std::size_t line = 0;
  };

  struct SelfCheckReport {
    bool                     passed = true;
    std::vector<std::string> lines;  // "ok name: detail" or "FAIL name: detail"

    std::string to_string() const;
  };

  // Named monoids, identities and bases. The builtin catalog is compiled
  // into the library; other catalogs are read from a directory holding
  // index.txt, identities.txt, bases.txt, checks.txt and the files that
  // index.txt references.
  class Catalog {
   public:
    static Catalog const& builtin();
    static Catalog        load_directory(std::filesystem::path const& dir);
    // File name to contents.
    static Catalog from_files(std::map<std::string, std::string> const& files);

    // Accepts NAME and dual(NAME). Throws LookupError with suggestions.
    FiniteMonoid       monoid(std::string_view name) const;
    MonoidEntry const* find_monoid(std::string_view name) const noexcept;

    // Identity labels, family instances such as a_2 or R_3, and dual(LABEL).
    std::optional<Identity> find_identity(std::string_view label) const;
    Identity                identity(std::string_view label) const;
    // Labels of identities.txt entries equal to `idy` up to renaming
    // variables and swapping sides.
    std::vector<std::string> labels_of(Identity const& idy) const;

    // basis.NAME or dual(basis.NAME); a single identity label yields a
    // one-element set.
    std::optional<AxiomSet> find_basis(std::string_view name) const;
    AxiomSet                basis(std::string_view name) const;

    std::vector<MonoidEntry> const& monoids() const noexcept {
      return _monoids;
    }
    std::vector<BasisEntry> const& bases() const noexcept {
      return _bases;
    }
    std::vector<Identity> const& identities() const noexcept {
      return _identities;
    }
    std::vector<CatalogCheck> const& checks() const noexcept {
      return _checks;
    }

    // Known names closest to `name` by edit distance.
    std::vector<std::string> suggestions(std::string_view name, std::size_t limit = 3) const;

    // Table laws, stated orders, presentation/table agreement up to
    // isomorphism, J-triviality expectations, J-trivial implies aperiodic,
    // and the listed satisfaction checks.
    SelfCheckReport selfcheck() const;

   private:
    std::vector<MonoidEntry>  _monoids;
    std::vector<BasisEntry>   _bases;
    std::vector<Identity>     _identities;
    std::vector<CatalogCheck> _checks;
  };

  // Parses `label: u = v` lines.
  std::vector<Identity> parse_identity_list(std::string_view text);

}  // namespace varcross

#endif  // VARCROSS_CATALOG_HPP_
