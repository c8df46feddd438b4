#include "varcross/family.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace varcross {

  namespace {
    Variable const x = Variable::letter('x');
    Variable const y = Variable::letter('y');

    std::optional<std::size_t> to_number(std::string_view s) {
      std::size_t value = 0;
      if (s.empty() || (s.size() > 1 && s[0] == '0')) {
        return std::nullopt;
      }
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc() || ptr != s.data() + s.size() || value > 10'000) {
        return std::nullopt;
      }
      return value;
    }
  }  // namespace

  std::string FamilySpec::label() const {
    std::string n = std::to_string(index);
    switch (family) {
      case Family::aperiodicity:
        return "a_" + n;
      case Family::eventual_commutativity:
        return "c_" + n;
      case Family::restrictive:
        return "R_" + n;
      case Family::l_chain_word:
        return "x_" + n;
      case Family::i_scheme: {
        std::string out = "I_" + n + "[";
        for (std::size_t i = 0; i < permutation.size(); ++i) {
          out += (i ? "," : "") + std::to_string(permutation[i]);
        }
        return out + "]";
      }
    }
    return n;
  }

  Word l_chain_word(std::size_t m) {
    Word w{x};
    for (std::size_t i = 1; i <= m; ++i) {
      w *= Variable::indexed('h', static_cast<std::uint32_t>(i));
      w *= x;
    }
    return w;
  }

  Identity family_identity(FamilySpec const& spec) {
    std::size_t const n = spec.index;
    switch (spec.family) {
      case Family::aperiodicity:
        return Identity(power(Word{x}, n + 1), power(Word{x}, n), spec.label());
      case Family::eventual_commutativity:
        return Identity(power(Word{x, y}, n), power(Word{y, x}, n), spec.label());
      case Family::restrictive: {
        if (n < 2) {
          throw std::invalid_argument("restrictive identities need m >= 2");
        }
        Word tail;
        for (std::size_t i = 1; i <= n; ++i) {
          tail *= Variable::indexed('t', static_cast<std::uint32_t>(i));
          tail *= (i % 2 == 1) ? x : y;
        }
        return Identity(Word{x, y} * tail, Word{y, x} * tail, spec.label());
      }
      case Family::i_scheme: {
        auto const& pi = spec.permutation;
        if (n < 1 || pi.size() != n) {
          throw std::invalid_argument("permutation length must equal m >= 1");
        }
        std::vector<std::size_t> sorted(pi);
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < n; ++i) {
          if (sorted[i] != i + 1) {
            throw std::invalid_argument("not a permutation of 1..m");
          }
        }
        Word ys, tail;
        for (std::size_t i = 0; i < n; ++i) {
          ys *= Variable::indexed('y', static_cast<std::uint32_t>(pi[i]));
          tail *= Variable::indexed('h', static_cast<std::uint32_t>(i + 1));
          tail *= Variable::indexed('y', static_cast<std::uint32_t>(i + 1));
        }
        return Identity(Word{x} * ys * Word{x} * tail, Word{x, x} * ys * tail, spec.label());
      }
      case Family::l_chain_word:
        break;
    }
    throw std::invalid_argument("x_m denotes a word, not an identity");
  }

  std::optional<FamilySpec> parse_family_label(std::string_view text) {
    if (text.size() < 3 || text[1] != '_') {
      return std::nullopt;
    }
    FamilySpec spec;
    switch (text[0]) {
      case 'a':
        spec.family = Family::aperiodicity;
        break;
      case 'c':
        spec.family = Family::eventual_commutativity;
        break;
      case 'R':
        spec.family = Family::restrictive;
        break;
      case 'I':
        spec.family = Family::i_scheme;
        break;
      case 'x':
        spec.family = Family::l_chain_word;
        break;
      default:
        return std::nullopt;
    }
    auto rest = text.substr(2);
    if (spec.family == Family::i_scheme) {
      auto open = rest.find('[');
      if (open == std::string_view::npos || rest.back() != ']') {
        return std::nullopt;
      }
      auto m = to_number(rest.substr(0, open));
      if (!m) {
        return std::nullopt;
      }
      spec.index = *m;
      auto body  = rest.substr(open + 1, rest.size() - open - 2);
      while (!body.empty()) {
        auto comma = body.find(',');
        auto p     = to_number(body.substr(0, comma));
        if (!p) {
          return std::nullopt;
        }
        spec.permutation.push_back(*p);
        body = comma == std::string_view::npos ? std::string_view() : body.substr(comma + 1);
      }
      return spec;
    }
    auto m = to_number(rest);
    if (!m) {
      return std::nullopt;
    }
    spec.index = *m;
    return spec;
  }

}  // namespace varcross
