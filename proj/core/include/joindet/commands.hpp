#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace joindet {

// Full command-line surface. args excludes the program name. Returns
// the process exit code: 0 success, 1 usage or parse failure, 2
// violated precondition, 3 failed verification.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace joindet
