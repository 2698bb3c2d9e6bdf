#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace resgame {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Syntax error in a formula, sequent, profile literal or game file.
// line/column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column,
             std::vector<std::string> expected = {});

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

// An additive connective or unit appeared where the MLL fragment was requested.
class FragmentError : public Error {
 public:
  explicit FragmentError(const std::string& what, std::size_t line = 0)
      : Error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An enumeration would exceed a configured cap. `required` is the computed size.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what_cap, std::uint64_t required, std::uint64_t limit);
  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t required_;
  std::uint64_t limit_;
};

class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

class ModelMismatch : public Error {
 public:
  using Error::Error;
};

// Structurally invalid input: unknown player, profile outside the endowment, etc.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace resgame
