#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace framekit::cli {

enum ExitCode : int { ok = 0, verify_failed = 1, usage = 2, domain = 3 };

/// Entry point shared by the executable and the tests. argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace framekit::cli
