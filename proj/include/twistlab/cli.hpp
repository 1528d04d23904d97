#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace twistlab {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int relation_failure = 1;
inline constexpr int usage = 2;
inline constexpr int distinct = 3;
} // namespace exit_code

/// Runs one command; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace twistlab
