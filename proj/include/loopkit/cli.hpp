#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace loopkit::cli {

// One completed invocation. The report carries command, inputs, outcome,
// payload, and duration_ms; everything except duration_ms is deterministic
// for fixed inputs. diagnostic is only set for usage or input errors.
struct RunResult {
  int exit_code = 0;
  nlohmann::ordered_json report;
  std::string diagnostic;
  std::string human;
};

RunResult run(const std::vector<std::string>& args);

// Prints run()'s record to stdout and its diagnostic to stderr.
int main_entry(int argc, char** argv);

}  // namespace loopkit::cli
