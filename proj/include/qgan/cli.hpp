#pragma once

#include <string>
#include <vector>

namespace qgan::cli {

/// Full command-line entry point (argv[0] excluded). Returns the process
/// exit code: 0 success/convergence, 1 usage or config error, 2 step budget
/// exhausted without convergence, 3 tolerance failure in grad-check.
int dispatch(const std::vector<std::string>& args);

}  // namespace qgan::cli
