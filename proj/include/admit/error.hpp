#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace admit {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed algebra, structure or term: bad arity, unknown symbol,
// out-of-range element, shape mismatch between operands.
class AlgebraError : public Error {
 public:
  using Error::Error;
};

// A construction would exceed its memory budget. `reached` is the number of
// elements produced before giving up.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string const& what, std::size_t reached)
      : Error(what), reached_(reached) {}
  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t reached_;
};

// A bounded search ran out of candidates.
class SearchExhausted : public Error {
 public:
  SearchExhausted(std::string const& what, std::size_t cap)
      : Error(what), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class ParseError : public Error {
 public:
  ParseError(std::string const& message, std::size_t line, std::size_t column)
      : Error(format(message, line, column)),
        message_(message),
        line_(line),
        column_(column) {}

  std::string const& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(std::string const& m, std::size_t l,
                            std::size_t c) {
    return std::to_string(l) + ":" + std::to_string(c) + ": " + m;
  }
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace admit
