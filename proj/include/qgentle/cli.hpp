// Command-line front end; the logic lives in the library so tests can drive
// it in-process.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qgentle {

// Exit code 0 on success, 1 on domain errors (non-gentle input and the
// like), 2 on usage or parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qgentle
