#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace msa::service {

/// Entry point of the `msa` tool. `args[0]` is the program name. Returns 0 on
/// success, 2 on invalid input or usage, 1 on runtime failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::map<std::string, std::string>& env);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msa::service
