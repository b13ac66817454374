#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oscillab::cli {

/// Entry point of the `oscillab` tool. `args` excludes the program name.
/// Exit codes: 0 success, 1 domain error, 2 usage or config error. Errors go
/// to `err` as one line of JSON.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv);

/// OSCILLAB_THREADS when set and valid, else 1.
unsigned default_threads();

}  // namespace oscillab::cli
