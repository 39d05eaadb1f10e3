#pragma once

#include <string>
#include <vector>

namespace minkgeo::cli {

struct RunResult {
    int exit_code = 0;      // 0 success, 2 validation failure, 1 runtime error
    std::string output;     // one JSON object (or CSV table)
    std::string error;      // diagnostic on failure
};

/// Dispatches one subcommand. Same behavior as the installed binary; exposed
/// so tests can drive the command surface in-process.
RunResult run(const std::vector<std::string>& args);

}  // namespace minkgeo::cli
