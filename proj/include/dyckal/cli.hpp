#pragma once

#include <ostream>
#include <string>
#include <vector>

// Command line front end.  Exit codes: 0 success, 1 verification failures,
// 2 usage or parse errors.
namespace dyckal::cli {

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dyckal::cli
