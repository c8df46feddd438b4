#include "varcross/expression.hpp"

#include <cctype>

#include "varcross/error.hpp"

namespace varcross {

  FiniteMonoid MonoidExpression::materialize() const {
    FiniteMonoid result = factors.at(0);
    for (std::size_t i = 1; i < factors.size(); ++i) {
      result = direct_product(result, factors[i]);
    }
    return result;
  }

  namespace {

    bool is_name_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '{' || c == '}' || c == '/'
             || c == '~' || c == '.';
    }

    class ExpressionParser {
     public:
      ExpressionParser(std::string_view text, std::size_t pos, Catalog const& cat)
          : _text(text), _pos(pos), _cat(cat) {}

      std::vector<FiniteMonoid> expr() {
        auto result = factor();
        while (true) {
          std::size_t save = _pos;
          if (!product_operator()) {
            break;
          }
          skip_space();
          if (_pos >= _text.size() || !(is_name_char(_text[_pos]) || _text[_pos] == '(')) {
            _pos = save;
            break;
          }
          auto more = factor();
          result.insert(result.end(), more.begin(), more.end());
        }
        return result;
      }

      std::size_t pos() const noexcept {
        return _pos;
      }

      void skip_space() {
        while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(msg, _pos);
      }

      bool product_operator() {
        skip_space();
        if (_text.substr(_pos, 2) == "\xC3\x97") {
          _pos += 2;
          return true;
        }
        if (_pos < _text.size() && _text[_pos] == '*') {
          ++_pos;
          return true;
        }
        if (_pos < _text.size() && _text[_pos] == 'x'
            && (_pos + 1 == _text.size() || std::isspace(static_cast<unsigned char>(_text[_pos + 1])))) {
          ++_pos;
          return true;
        }
        return false;
      }

      void expect(char c) {
        skip_space();
        if (_pos >= _text.size() || _text[_pos] != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++_pos;
      }

      bool accept(char c) {
        skip_space();
        if (_pos < _text.size() && _text[_pos] == c) {
          ++_pos;
          return true;
        }
        return false;
      }

      std::string name() {
        skip_space();
        std::size_t start = _pos;
        while (_pos < _text.size() && is_name_char(_text[_pos])) {
          ++_pos;
        }
        if (start == _pos) {
          fail("expected a monoid expression");
        }
        return std::string(_text.substr(start, _pos - start));
      }

      // Raw text up to the next ',' or ')' at nesting depth zero.
      std::string_view raw_argument() {
        std::size_t start = _pos;
        int         depth = 0;
        while (_pos < _text.size()) {
          char c = _text[_pos];
          if (c == '(') {
            ++depth;
          } else if (c == ')') {
            if (depth == 0) {
              break;
            }
            --depth;
          } else if (c == ',' && depth == 0) {
            break;
          }
          ++_pos;
        }
        return _text.substr(start, _pos - start);
      }

      std::vector<FiniteMonoid> factor() {
        skip_space();
        if (accept('(')) {
          auto inner = expr();
          expect(')');
          return inner;
        }
        std::size_t start = _pos;
        auto        word  = name();
        skip_space();
        bool call = _pos < _text.size() && _text[_pos] == '(';
        if (call && word == "dual") {
          ++_pos;
          auto inner = expr();
          expect(')');
          for (auto& m : inner) {
            m = dual_monoid(m);
          }
          return inner;
        }
        if (call && word == "rees") {
          ++_pos;
          std::vector<Word> words;
          do {
            skip_space();
            std::size_t arg_pos = _pos;
            auto        arg     = raw_argument();
            try {
              words.push_back(parse_word(arg));
            } catch (ParseError const& e) {
              throw ParseError("in rees(): " + e.message(), arg_pos + e.position());
            }
          } while (accept(','));
          expect(')');
          return {rees_quotient(words)};
        }
        if (call && word == "quotient") {
          ++_pos;
          auto base = expr();
          expect(',');
          auto key = name();
          if (key != "classes") {
            fail("expected classes=");
          }
          expect('=');
          expect('[');
          auto                                   m = MonoidExpression{{}, base}.materialize();
          std::vector<std::vector<element_type>> classes;
          do {
            expect('[');
            std::vector<element_type> members;
            do {
              auto label = name();
              auto a     = m.find_label(label);
              if (!a) {
                fail("'" + label + "' is not an element label");
              }
              members.push_back(*a);
            } while (accept(','));
            expect(']');
            classes.push_back(std::move(members));
          } while (accept(','));
          expect(']');
          expect(')');
          try {
            return {quotient(m, classes)};
          } catch (MonoidError const& e) {
            throw ParseError(e.what(), start);
          }
        }
        try {
          return {_cat.monoid(word)};
        } catch (LookupError const& e) {
          throw ParseError(e.what(), start);
        }
      }

      std::string_view _text;
      std::size_t      _pos;
      Catalog const&   _cat;
    };

  }  // namespace

  MonoidExpression parse_monoid_expression(std::string_view text, std::size_t& pos, Catalog const& cat) {
    ExpressionParser parser(text, pos, cat);
    parser.skip_space();
    std::size_t      start = parser.pos();
    MonoidExpression result;
    result.factors = parser.expr();
    pos            = parser.pos();
    auto slice     = text.substr(start, pos - start);
    while (!slice.empty() && std::isspace(static_cast<unsigned char>(slice.back()))) {
      slice.remove_suffix(1);
    }
    result.text = std::string(slice);
    return result;
  }

  MonoidExpression parse_monoid_expression(std::string_view text, Catalog const& cat) {
    std::size_t pos    = 0;
    auto        result = parse_monoid_expression(text, pos, cat);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (pos != text.size()) {
      throw ParseError("unexpected text after monoid expression", pos);
    }
    return result;
  }

}  // namespace varcross
