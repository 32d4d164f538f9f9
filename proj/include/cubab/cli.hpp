/**
 * Command-line front end. Every command prints a JSON report
 * {command, status, violations, ...} to out.
 *
 * Exit codes: 0 when every check passes, 1 when a validated computation
 * found a violation, 2 for unreadable or malformed input and usage errors.
 */

#ifndef CUBAB_CLI_HPP
#define CUBAB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cubab {

inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_input_error = 2;

/// args excludes the program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}   // namespace cubab

#endif
