#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace obk {

// Dispatches one invocation. Subcommands: adem, serre-gens, em, bo,
// mo-check, e2, certify, growth, oracle. Returns the process exit code:
// 0 ok, 1 input rejected, 2 verification failed, 3 usage error.
// The OBSTRUKT_MAX_DEGREE environment variable overrides default
// truncation degrees wherever --max-degree is not given.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}
