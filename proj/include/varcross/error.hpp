#ifndef VARCROSS_ERROR_HPP_
#define VARCROSS_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace varcross {

  // Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed textual input. `position` is a 0-based byte offset into the
  // parsed text and `line` is 1-based (0 when the input is a single line).
  class ParseError : public Error {
   public:
    ParseError(std::string const& msg, std::size_t position, std::size_t line = 0)
        : Error(format(msg, position, line)), _message(msg), _position(position), _line(line) {}

    // The message without the location prefix.
    std::string const& message() const noexcept {
      return _message;
    }

    std::size_t position() const noexcept {
      return _position;
    }
    std::size_t line() const noexcept {
      return _line;
    }

   private:
    static std::string format(std::string const& msg, std::size_t pos, std::size_t line) {
      if (line != 0) {
        return "line " + std::to_string(line) + ", col " + std::to_string(pos + 1) + ": " + msg;
      }
      return "at position " + std::to_string(pos) + ": " + msg;
    }

    std::string _message;
    std::size_t _position;
    std::size_t _line;
  };

  // A table or presentation that does not define a monoid.
  class MonoidError : public Error {
   public:
    using Error::Error;
  };

  // A name (catalog entry, axiom label, family instance) that cannot be resolved.
  class LookupError : public Error {
   public:
    using Error::Error;
  };

}  // namespace varcross

#endif  // VARCROSS_ERROR_HPP_
