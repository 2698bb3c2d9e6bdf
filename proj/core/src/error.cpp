#include "resgame/error.hpp"

namespace resgame {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column,
                       std::vector<std::string> expected)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

CapExceeded::CapExceeded(const std::string& what_cap, std::uint64_t required, std::uint64_t limit)
    : Error(what_cap + " needs " + std::to_string(required) + " but the cap is " +
            std::to_string(limit)),
      required_(required),
      limit_(limit) {}

}  // namespace resgame
