#pragma once

#include <string>
#include <vector>

#include "opslice/json_io.hpp"

namespace opslice {

struct CliResult {
  int exit_code = 0;  // 0 pass, 1 mathematical failure, 2 input error
  Json report;
};

// Thin adapter over the library; no mathematics lives here. args excludes the
// program name.
CliResult run_command(const std::vector<std::string>& args);

}  // namespace opslice
