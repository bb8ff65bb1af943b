#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hda::cli {

enum ExitCode : int { ok = 0, property_fails = 1, input_error = 2, cap_exceeded = 3 };

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out` (JSON, or text with --pretty); diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hda::cli
