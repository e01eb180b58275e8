#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ustar::cli {

/// 0: command succeeded / property holds; 1: property fails (witness
/// printed); 2: usage or input error.
enum ExitStatus : int { kHolds = 0, kFails = 1, kUsage = 2 };

/// Runs one command line; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ustar::cli
