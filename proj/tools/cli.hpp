#ifndef SUPERCHAR_TOOLS_CLI_HPP
#define SUPERCHAR_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace superchar::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failed = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_internal = 3;

/// Runs one command line (without the program name). Results go to `out`
/// (or the --out file), diagnostics to `err`.
int parse_and_dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace superchar::cli

#endif
