#ifndef VARCROSS_WORD_HPP_
#define VARCROSS_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace varcross {

  // A variable is a lowercase ASCII letter with an optional decimal suffix
  // (x, y, h1, t12). The name is packed into a single integer so that
  // variables are trivially copyable and need no interning table:
  //   code = letter                         for a bare letter
  //   code = letter + 26 * (suffix + 1)     for a suffixed letter
  class Variable {
   public:
    using code_type = std::uint32_t;

    constexpr Variable() = default;

    // Throws ParseError if `name` is not a valid variable name.
    static Variable from_name(std::string_view name);

    static constexpr Variable from_code(code_type code) noexcept {
      Variable v;
      v._code = code;
      return v;
    }

    static constexpr Variable letter(char c) noexcept {
      return from_code(static_cast<code_type>(c - 'a'));
    }

    static constexpr Variable indexed(char c, std::uint32_t suffix) noexcept {
      return from_code(static_cast<code_type>(c - 'a') + 26 * (suffix + 1));
    }

    constexpr code_type code() const noexcept {
      return _code;
    }

    std::string name() const;

    constexpr auto operator<=>(Variable const&) const = default;

   private:
    code_type _code = 0;
  };

  // A finite sequence of variables; the empty word is the identity 1.
  class Word {
   public:
    using value_type     = Variable;
    using const_iterator = std::vector<Variable>::const_iterator;

    Word() = default;
    explicit Word(std::vector<Variable> letters) : _letters(std::move(letters)) {}
    Word(std::initializer_list<Variable> letters) : _letters(letters) {}
    template <typename It>
    Word(It first, It last) : _letters(first, last) {}

    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Variable operator[](std::size_t i) const noexcept {
      return _letters[i];
    }
    const_iterator begin() const noexcept {
      return _letters.begin();
    }
    const_iterator end() const noexcept {
      return _letters.end();
    }
    std::span<Variable const> letters() const noexcept {
      return _letters;
    }

    // Factor [pos, pos + len).
    Word subword(std::size_t pos, std::size_t len) const;

    Word& operator*=(Word const& other);
    Word& operator*=(Variable v);

    friend Word operator*(Word lhs, Word const& rhs) {
      lhs *= rhs;
      return lhs;
    }

    // Space separated letters, "1" for the empty word.
    std::string to_string() const;

    // Letters with exponents for runs, e.g. "x^2 h x".
    std::string to_pretty_string() const;

    auto operator<=>(Word const&) const = default;

   private:
    std::vector<Variable> _letters;
  };

  Word power(Word const& w, std::size_t n);

  // Words ordered by length first, then lexicographically by variable code.
  bool shortlex_less(Word const& u, Word const& v) noexcept;

  // Parses the word grammar
  //   word   := "1" | atom+
  //   atom   := group | letter
  //   group  := "(" word ")" power?
  //   letter := [a-z][0-9]* power?
  //   power  := "^" [1-9][0-9]*
  // Whitespace between atoms is ignored. Powers are expanded eagerly.
  Word parse_word(std::string_view text);

  std::set<Variable> content(Word const& w);

  // Variables in order of first occurrence.
  std::vector<Variable> content_in_order(Word const& w);

  std::size_t occurrences(Word const& w, Variable v) noexcept;

  bool is_simple(Word const& w, Variable v) noexcept;

  Word reverse(Word const& w);

  bool is_factor(Word const& factor, Word const& w) noexcept;

  // w = core[0] sep[0] core[1] ... sep[m-1] core[m], where the separators are
  // exactly the simple variables of w and every core variable is non-simple.
  struct NaturalForm {
    std::vector<Word>     core_blocks;
    std::vector<Variable> separators;

    Word reassemble() const;

    bool operator==(NaturalForm const&) const = default;
  };

  NaturalForm natural_form(Word const& w);

}  // namespace varcross

template <>
struct std::hash<varcross::Variable> {
  std::size_t operator()(varcross::Variable v) const noexcept {
    return std::hash<std::uint32_t>{}(v.code());
  }
};

template <>
struct std::hash<varcross::Word> {
  std::size_t operator()(varcross::Word const& w) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : w) {
      h ^= v.code() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

#endif  // VARCROSS_WORD_HPP_
