#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gtrellis::cli {

/// Exit codes.
constexpr int exit_ok = 0;
/// Usage errors, parse errors and malformed streams.
constexpr int exit_usage = 1;
/// Failed verification checks, including non-controllable sections.
constexpr int exit_verification = 2;

/// Runs one command. `args` excludes the program name.
int run_cli(std::vector<std::string> const &args, std::istream &in,
            std::ostream &out, std::ostream &err);

} // namespace gtrellis::cli
