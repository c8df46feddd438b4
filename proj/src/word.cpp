#include "varcross/word.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_map>

#include "varcross/error.hpp"

namespace varcross {

  Variable Variable::from_name(std::string_view name) {
    if (name.empty() || name[0] < 'a' || name[0] > 'z') {
      throw ParseError("invalid variable name '" + std::string(name) + "'", 0);
    }
    if (name.size() == 1) {
      return letter(name[0]);
    }
    if (name.size() > 2 && name[1] == '0') {
      throw ParseError("variable suffix has a leading zero in '" + std::string(name) + "'", 1);
    }
    std::uint64_t suffix = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
        throw ParseError("invalid variable name '" + std::string(name) + "'", i);
      }
      suffix = suffix * 10 + static_cast<std::uint64_t>(name[i] - '0');
      if (suffix > 100'000'000) {
        throw ParseError("variable suffix too large in '" + std::string(name) + "'", i);
      }
    }
    return indexed(name[0], static_cast<std::uint32_t>(suffix));
  }

  std::string Variable::name() const {
    std::string result(1, static_cast<char>('a' + _code % 26));
    if (_code >= 26) {
      result += std::to_string(_code / 26 - 1);
    }
    return result;
  }

  Word Word::subword(std::size_t pos, std::size_t len) const {
    return Word(_letters.begin() + static_cast<std::ptrdiff_t>(pos),
                _letters.begin() + static_cast<std::ptrdiff_t>(pos + len));
  }

  Word& Word::operator*=(Word const& other) {
    _letters.insert(_letters.end(), other._letters.begin(), other._letters.end());
    return *this;
  }

  Word& Word::operator*=(Variable v) {
    _letters.push_back(v);
    return *this;
  }

  std::string Word::to_string() const {
    if (_letters.empty()) {
      return "1";
    }
    std::string out;
    for (auto v : _letters) {
      if (!out.empty()) {
        out += ' ';
      }
      out += v.name();
    }
    return out;
  }

  std::string Word::to_pretty_string() const {
    if (_letters.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < _letters.size();) {
      std::size_t j = i;
      while (j < _letters.size() && _letters[j] == _letters[i]) {
        ++j;
      }
      if (!out.empty()) {
        out += ' ';
      }
      out += _letters[i].name();
      if (j - i > 1) {
        out += '^' + std::to_string(j - i);
      }
      i = j;
    }
    return out;
  }

  Word power(Word const& w, std::size_t n) {
    Word result;
    for (std::size_t i = 0; i < n; ++i) {
      result *= w;
    }
    return result;
  }

  bool shortlex_less(Word const& u, Word const& v) noexcept {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return u < v;
  }

  namespace {

    class WordParser {
     public:
      explicit WordParser(std::string_view text) : _text(text) {}

      Word parse() {
        Word w = word(false);
        skip_space();
        if (_pos != _text.size()) {
          fail("unexpected character '" + std::string(1, _text[_pos]) + "'");
        }
        return w;
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(msg, _pos);
      }

      void skip_space() {
        while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      bool at(char c) {
        skip_space();
        return _pos < _text.size() && _text[_pos] == c;
      }

      Word word(bool nested) {
        skip_space();
        if (at('1')) {
          ++_pos;
          skip_space();
          if (_pos < _text.size() && _text[_pos] != ')' && _text[_pos] != '^') {
            fail("the empty word 1 must stand alone");
          }
          return Word();
        }
        Word result;
        std::size_t atoms = 0;
        while (true) {
          skip_space();
          if (_pos >= _text.size() || (nested && _text[_pos] == ')')) {
            break;
          }
          result *= atom();
          ++atoms;
        }
        if (atoms == 0) {
          fail("expected a word");
        }
        return result;
      }

      Word atom() {
        char c = _text[_pos];
        Word base;
        if (c == '(') {
          ++_pos;
          base = word(true);
          if (!at(')')) {
            fail("expected ')'");
          }
          ++_pos;
        } else if (c >= 'a' && c <= 'z') {
          std::size_t start = _pos++;
          while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
            ++_pos;
          }
          if (_pos - start > 2 && _text[start + 1] == '0') {
            throw ParseError("variable suffix has a leading zero", start);
          }
          if (_pos - start > 9) {
            throw ParseError("variable suffix too large", start);
          }
          base = Word{Variable::from_name(_text.substr(start, _pos - start))};
        } else {
          fail("unexpected character '" + std::string(1, c) + "'");
        }
        skip_space();
        if (_pos < _text.size() && _text[_pos] == '^') {
          ++_pos;
          skip_space();
          return power(base, exponent());
        }
        return base;
      }

      std::size_t exponent() {
        std::size_t start = _pos;
        bool negative = false;
        if (_pos < _text.size() && _text[_pos] == '-') {
          negative = true;
          ++_pos;
        }
        std::size_t value = 0;
        std::size_t digits = 0;
        while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          value = value * 10 + static_cast<std::size_t>(_text[_pos] - '0');
          if (value > 10'000) {
            throw ParseError("exponent too large", start);
          }
          ++_pos;
          ++digits;
        }
        if (digits == 0) {
          throw ParseError("expected an exponent", start);
        }
        if (negative || value == 0) {
          throw ParseError("exponent must be positive", start);
        }
        return value;
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };

  }  // namespace

  Word parse_word(std::string_view text) {
    return WordParser(text).parse();
  }

  std::set<Variable> content(Word const& w) {
    return std::set<Variable>(w.begin(), w.end());
  }

  std::vector<Variable> content_in_order(Word const& w) {
    std::vector<Variable> result;
    for (auto v : w) {
      if (std::find(result.begin(), result.end(), v) == result.end()) {
        result.push_back(v);
      }
    }
    return result;
  }

  std::size_t occurrences(Word const& w, Variable v) noexcept {
    return static_cast<std::size_t>(std::count(w.begin(), w.end(), v));
  }

  bool is_simple(Word const& w, Variable v) noexcept {
    return occurrences(w, v) == 1;
  }

  Word reverse(Word const& w) {
    return Word(w.letters().rbegin(), w.letters().rend());
  }

  bool is_factor(Word const& factor, Word const& w) noexcept {
    return std::search(w.begin(), w.end(), factor.begin(), factor.end()) != w.end();
  }

  Word NaturalForm::reassemble() const {
    Word result = core_blocks.empty() ? Word() : core_blocks[0];
    for (std::size_t i = 0; i < separators.size(); ++i) {
      result *= separators[i];
      result *= core_blocks[i + 1];
    }
    return result;
  }

  NaturalForm natural_form(Word const& w) {
    std::unordered_map<Variable, std::size_t> count;
    for (auto v : w) {
      ++count[v];
    }
    NaturalForm nf;
    std::vector<Variable> block;
    for (auto v : w) {
      if (count[v] == 1) {
        nf.core_blocks.emplace_back(std::move(block));
        block.clear();
        nf.separators.push_back(v);
      } else {
        block.push_back(v);
      }
    }
    nf.core_blocks.emplace_back(std::move(block));
    return nf;
  }

}  // namespace varcross
