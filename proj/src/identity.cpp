#include "varcross/identity.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "varcross/error.hpp"

namespace varcross {

  std::string Identity::to_string() const {
    return lhs.to_string() + " = " + rhs.to_string();
  }

  std::set<Variable> Identity::variables() const {
    auto result = content(lhs);
    for (auto v : rhs) {
      result.insert(v);
    }
    return result;
  }

  bool same_identity(Identity const& a, Identity const& b) noexcept {
    return (a.lhs == b.lhs && a.rhs == b.rhs) || (a.lhs == b.rhs && a.rhs == b.lhs);
  }

  namespace {

    std::pair<Word, Word> renamed(Word const& first, Word const& second) {
      std::map<Variable, Variable> names;
      auto rename = [&names](Word const& w) {
        std::vector<Variable> out;
        for (auto v : w) {
          auto [it, fresh] = names.try_emplace(v, Variable::indexed('x', static_cast<std::uint32_t>(names.size() + 1)));
          out.push_back(it->second);
        }
        return Word(std::move(out));
      };
      auto a = rename(first);
      auto b = rename(second);
      return {std::move(a), std::move(b)};
    }

  }  // namespace

  Identity canonical_form(Identity const& idy) {
    auto one   = renamed(idy.lhs, idy.rhs);
    auto other = renamed(idy.rhs, idy.lhs);
    auto best  = std::min(one, other);
    return Identity(std::move(best.first), std::move(best.second), idy.label);
  }

  bool equivalent_identities(Identity const& a, Identity const& b) {
    auto ca = canonical_form(a);
    auto cb = canonical_form(b);
    return ca.lhs == cb.lhs && ca.rhs == cb.rhs;
  }

  Identity parse_identity(std::string_view text, std::string label) {
    static constexpr std::string_view approx = "\xE2\x89\x88";  // U+2248
    std::size_t pos = text.find('=');
    std::size_t len = 1;
    if (auto a = text.find(approx); a != std::string_view::npos && (pos == std::string_view::npos || a < pos)) {
      pos = a;
      len = approx.size();
    }
    if (pos == std::string_view::npos) {
      throw ParseError("identity needs '=' between its sides", text.size());
    }
    auto rest   = text.substr(pos + len);
    auto second = std::min(rest.find('='), rest.find(approx));
    if (second != std::string_view::npos) {
      throw ParseError("identity has more than one '='", pos + len + second);
    }
    Word lhs, rhs;
    try {
      lhs = parse_word(text.substr(0, pos));
    } catch (ParseError const& e) {
      throw ParseError("left side: " + e.message(), e.position());
    }
    try {
      rhs = parse_word(rest);
    } catch (ParseError const& e) {
      throw ParseError("right side: " + e.message(), pos + len + e.position());
    }
    return Identity(std::move(lhs), std::move(rhs), std::move(label));
  }

  Identity dualize(Identity const& idy) {
    return Identity(reverse(idy.lhs), reverse(idy.rhs), idy.label.empty() ? "" : "dual(" + idy.label + ")");
  }

  Word WordSubstitution::image(Variable v) const {
    auto it = _map.find(v);
    return it == _map.end() ? Word{v} : it->second;
  }

  std::string WordSubstitution::to_string() const {
    std::string out;
    for (auto const& [v, w] : _map) {
      if (!out.empty()) {
        out += ' ';
      }
      out += v.name() + "=\"" + w.to_string() + "\"";
    }
    return out;
  }

  Word apply(WordSubstitution const& phi, Word const& w) {
    Word result;
    for (auto v : w) {
      auto const& m = phi.assignment();
      auto it = m.find(v);
      if (it == m.end()) {
        result *= v;
      } else {
        result *= it->second;
      }
    }
    return result;
  }

  AxiomSet::AxiomSet(std::vector<Identity> axioms) {
    for (auto& a : axioms) {
      add(std::move(a));
    }
  }

  void AxiomSet::add(Identity idy) {
    if (idy.label.empty()) {
      idy.label = "#" + std::to_string(_axioms.size() + 1);
    }
    if (find(idy.label) != nullptr) {
      throw LookupError("duplicate axiom label '" + idy.label + "'");
    }
    _axioms.push_back(std::move(idy));
  }

  Identity const* AxiomSet::find(std::string_view label) const noexcept {
    for (auto const& a : _axioms) {
      if (a.label == label) {
        return &a;
      }
    }
    return nullptr;
  }

  AxiomSet dualize(AxiomSet const& set) {
    AxiomSet result;
    for (auto const& a : set) {
      result.add(dualize(a));
    }
    return result;
  }

}  // namespace varcross
