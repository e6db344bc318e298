#pragma once

#include <ostream>

namespace hz {

// Entry point of the `hz` tool. Returns the process exit code: 0 on success,
// otherwise the numeric value of the ErrorKind (1 for unexpected failures).
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hz
