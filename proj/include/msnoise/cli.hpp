#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace msnoise::cli {

/// Exit codes of run().
inline constexpr int exit_ok = 0;
inline constexpr int exit_internal = 1;
inline constexpr int exit_usage = 2;

/// Runs the command line `args` (without the program name). Data goes to
/// `out` unless --out is given; diagnostics go to `err`.
int run(std::span<const std::string> args, std::ostream &out, std::ostream &err);

} // namespace msnoise::cli
