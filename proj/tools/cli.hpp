#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mec2 {

// Exit codes: 0 success, 1 negative decision or invalid coloring, 2 bad input.
// Errors go to `err` as one line "error: <kind>: <message>".
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mec2
