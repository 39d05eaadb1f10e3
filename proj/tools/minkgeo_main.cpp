#include <cstdio>
#include <string>
#include <vector>

#include "minkgeo/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args;
    args.reserve(static_cast<size_t>(argc));
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    const minkgeo::cli::RunResult res = minkgeo::cli::run(args);
    if (!res.output.empty()) std::fputs(res.output.c_str(), stdout);
    if (!res.error.empty()) std::fputs(res.error.c_str(), stderr);
    return res.exit_code;
}
