#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace resgame::cli {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 yes, 1 no, 2 usage or parse error, 3 cap or budget exhausted.
enum ExitCode : int { kYes = 0, kNo = 1, kUsage = 2, kExhausted = 3 };

struct Report {
  int exit_code = kYes;
  std::string out;  // what goes to stdout
  std::string err;  // what goes to stderr
  nlohmann::ordered_json json;  // the --json document, when one was produced
};

// args excludes the program name.
Report run(const std::vector<std::string>& args);

}  // namespace resgame::cli
