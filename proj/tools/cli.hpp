#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace albert::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kConfigError = 2 };

// Entry point of albert-kit; args excludes the program name. The report goes
// to `out` (or to --out), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace albert::cli
