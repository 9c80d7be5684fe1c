#ifndef SCLOSURE_CLI_HPP
#define SCLOSURE_CLI_HPP

#include "sclosure/numeric.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace sclosure {

// One invocation's ring and output choices, assembled from the flags.
struct SessionConfig {
    std::size_t nvars = 0;
    std::vector<std::string> var_names;
    Int p = 2;
    std::string output = "plain";  // plain | json
    unsigned long seed = 0;
};

// Entry point behind main.  Exit codes: 0 success, 1 usage or parse error,
// 2 mathematical precondition failure, 3 property-suite failure.
int run_cli(int argc, char** argv);

} // namespace sclosure

#endif
