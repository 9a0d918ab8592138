#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nichrom::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,        // usage or parse error
    kIncomplete = 2,   // solve hit its node budget
    kInvalid = 3,      // coloring fails verification
    kUnsound = 4,      // a sound bound was violated (a bug)
};

/// Runs one command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nichrom::cli
