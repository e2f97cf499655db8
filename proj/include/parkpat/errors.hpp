#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace parkpat {

// Malformed textual input; column is 1-based within the offending line.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t column)
      : std::invalid_argument(what), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

// An exhaustive computation would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t cap)
      : std::runtime_error(what), required_(required), cap_(cap) {}
  std::uint64_t required() const { return required_; }
  std::uint64_t cap() const { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

}  // namespace parkpat
